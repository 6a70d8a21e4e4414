"""Exact octonionic spin generators, even Clifford morphisms and Grassmannian Poincare series."""

from .clifford import (
    EvenCliffordElement,
    TangentModel,
    even_basis,
    even_mul,
    lambda2_image_check,
    morphism_check,
    phi_apply,
)
from .cohomology import (
    GradedRingPresentation,
    PoincarePolynomial,
    RingInvolution,
    builtin_presentation,
    compute_space,
    euler_characteristic,
    gaussian_binomial,
    hilbert_series,
    involution_invariant_series,
)
from .errors import CliffgrassError
from .exact import ExactMatrix, GaussComplex, Rational, classify_operator, commutator, rank_exact, span_dimension
from .octonion import Octonion, Quaternion, left_mult_matrix, oct_conj, oct_mul, oct_norm_sq, right_mult_matrix
from .spin import (
    CliffordSystem,
    SpinGenerator,
    TrialityTriple,
    build_m_u,
    build_m_uv,
    clifford_system,
    complexify,
    compose_system,
    is_spin_delta7,
    lie_closure_report,
    spin8_basis,
    triality_companion,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
