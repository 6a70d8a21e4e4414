"""Spin(8), Spin(7), Spin(6) and Spin(5) generators built from the octonions.

Everything is constructed from :func:`octonion.right_mult_matrix` and the
quaternionic multiplication operators; nothing here reads a printed matrix.

On ``O + O = R^16`` the map ``m_u = [[0, R_u], [-R_conj(u), 0]]`` satisfies
``m_u^2 = -|u|^2 Id``, so the eight ``m_u`` for the basis octonions generate
a representation of the Clifford algebra of ``R^8``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence, Union

from .errors import (
    DimensionMismatchError,
    NoSolutionError,
    NotComplexLinearError,
    NotInSpin8Error,
    NotUniqueError,
    PreconditionError,
)
from .exact import ExactMatrix, GaussComplex, Subspace, commutator, solve_exact
from .octonion import (
    OCTONION_BASIS,
    Octonion,
    Quaternion,
    quat_left_matrix,
    quat_right_matrix,
    right_mult_matrix,
)

SPIN6_BASIS = OCTONION_BASIS[:6]
IMAGINARY_BASIS = OCTONION_BASIS[1:]
KINDS = ("spin8", "spin6", "spin5")

Label = Union[str, int]


def _octonion(u: Octonion | str) -> Octonion:
    return Octonion.basis(u) if isinstance(u, str) else u


def _R(u: Octonion | str) -> ExactMatrix:
    return right_mult_matrix(_octonion(u))


@lru_cache(maxsize=None)
def _R_basis(name: str) -> ExactMatrix:
    return right_mult_matrix(Octonion.basis(name))


def j_std(n: int) -> ExactMatrix:
    """Standard complex structure pairing coordinates (x1, x2), (x3, x4), ..."""
    if n % 2:
        raise DimensionMismatchError("a complex structure needs an even dimension")
    items = {}
    for s in range(0, n, 2):
        items[(s + 1, s)] = 1
        items[(s, s + 1)] = -1
    return ExactMatrix.from_sparse(n, n, items)


def build_m_u(u: Octonion | str) -> ExactMatrix:
    u = _octonion(u)
    return ExactMatrix.blocks([[0, _R(u)], [-_R(u.conj()), 0]])


def build_m_uv(u: Octonion | str, v: Octonion | str) -> ExactMatrix:
    """m_u m_v written blockwise: diag(-R_u R_conj(v), -R_conj(u) R_v)."""
    u, v = _octonion(u), _octonion(v)
    top = -(_R(u) @ _R(v.conj()))
    bottom = -(_R(u.conj()) @ _R(v))
    return ExactMatrix.block_diag(top, bottom)


@dataclass(frozen=True)
class SpinGenerator:
    label: tuple[Label, ...]
    matrix: ExactMatrix
    name: str = ""

    def to_json(self) -> dict:
        return {"label": self.name or _name("m", self.label), **self.matrix.to_json()}


def _name(prefix: str, label: Sequence[Label]) -> str:
    if prefix == "sigma":
        return "sigma_" + "".join(str(x) for x in label)
    if len(label) == 1:
        return f"{prefix}_{label[0]}"
    return f"{prefix}_{{{','.join(str(x) for x in label)}}}"


@lru_cache(maxsize=None)
def _spin8_basis() -> tuple[SpinGenerator, ...]:
    return tuple(
        SpinGenerator((u, v), build_m_uv(u, v), _name("m", (u, v)))
        for u, v in combinations(OCTONION_BASIS, 2)
    )


def spin8_basis() -> list[SpinGenerator]:
    """The 28 m_{u,v}, u < v in the order 1, i, j, k, e, f, g, h."""
    return list(_spin8_basis())


def spin7delta_basis() -> list[SpinGenerator]:
    """The 21 generators with both indices imaginary."""
    return [g for g in _spin8_basis() if "1" not in g.label]


def m_u_generators(names: Sequence[str] = OCTONION_BASIS) -> list[SpinGenerator]:
    return [SpinGenerator((u,), build_m_u(u), _name("m", (u,))) for u in names]


# Clifford systems ---------------------------------------------------------------


@dataclass(frozen=True)
class CliffordSystem:
    """Pairwise anticommuting self-dual involutions.

    ``composition_sign`` is the sign in front of ``I_a I_b`` in the
    associated complex structures: -1 for the octonionic systems
    (``m_{u,v} = -I_u I_v``), +1 for the Pauli-type system
    (``sigma_ab = sigma_a sigma_b``).
    """

    kind: str
    labels: tuple[Label, ...]
    involutions: tuple[ExactMatrix, ...]
    composition_sign: int

    @property
    def prefix(self) -> str:
        return "sigma" if self.kind == "spin5" else "I"

    def members(self) -> list[SpinGenerator]:
        return [
            SpinGenerator((lab,), m, _name(self.prefix, (lab,)))
            for lab, m in zip(self.labels, self.involutions)
        ]

    def is_valid(self) -> bool:
        n = self.involutions[0].rows
        ident = ExactMatrix.identity(n)
        for m in self.involutions:
            if m.T != m or m @ m != ident:
                return False
        for a, b in combinations(self.involutions, 2):
            if not (a @ b + b @ a).is_zero():
                return False
        return True


def _octonionic_involution(u: str) -> ExactMatrix:
    # [[0, -R_u], [-R_conj(u), 0]]: symmetric because R_u^T = R_conj(u)
    o = Octonion.basis(u)
    return ExactMatrix.blocks([[0, -_R(o)], [-_R(o.conj()), 0]])


def _pauli_involutions() -> tuple[ExactMatrix, ...]:
    out = []
    for q in ("1", "i", "j", "k"):
        unit = Quaternion.basis(q)
        out.append(
            ExactMatrix.blocks(
                [[0, quat_right_matrix(unit.conj())], [quat_right_matrix(unit), 0]]
            )
        )
    id4 = ExactMatrix.identity(4)
    out.append(ExactMatrix.block_diag(id4, -id4))
    return tuple(out)


@lru_cache(maxsize=None)
def clifford_system(kind: str) -> CliffordSystem:
    if kind == "spin8":
        names = OCTONION_BASIS
    elif kind == "spin6":
        names = SPIN6_BASIS
    elif kind == "spin5":
        return CliffordSystem("spin5", (1, 2, 3, 4, 5), _pauli_involutions(), +1)
    else:
        raise PreconditionError(f"unknown Clifford system kind {kind!r}; expected one of {KINDS}")
    return CliffordSystem(kind, names, tuple(_octonionic_involution(u) for u in names), -1)


def compose_system(cs: CliffordSystem) -> list[SpinGenerator]:
    """Signed compositions of all increasing pairs of involutions."""
    prefix = "sigma" if cs.kind == "spin5" else "m"
    out = []
    for (la, a), (lb, b) in combinations(zip(cs.labels, cs.involutions), 2):
        out.append(SpinGenerator((la, lb), (a @ b).scale(cs.composition_sign), _name(prefix, (la, lb))))
    return out


# Lie algebra closure -----------------------------------------------------------


@dataclass(frozen=True)
class LieClosureReport:
    dimension: int
    closed: bool
    failures: tuple[tuple[int, int], ...] = ()


def lie_closure_report(basis: Sequence[ExactMatrix]) -> LieClosureReport:
    if not basis:
        raise PreconditionError("empty basis")
    shape = basis[0].shape
    if shape[0] != shape[1] or any(m.shape != shape for m in basis):
        raise DimensionMismatchError("lie_closure_report needs square matrices of one size")
    space = Subspace(m.vectorize() for m in basis)
    failures = tuple(
        (a, b)
        for a, b in combinations(range(len(basis)), 2)
        if not space.contains(commutator(basis[a], basis[b]).vectorize())
    )
    return LieClosureReport(space.dimension, not failures, failures)


def clifford_products(generators: Sequence[ExactMatrix]) -> list[ExactMatrix]:
    """All ordered products g_{s1} ... g_{sk} over increasing index subsets."""
    n = generators[0].rows
    out = [ExactMatrix.identity(n)]
    for r in range(1, len(generators) + 1):
        for subset in combinations(range(len(generators)), r):
            m = generators[subset[0]]
            for s in subset[1:]:
                m = m @ generators[s]
            out.append(m)
    return out


# triality -------------------------------------------------------------------------


@dataclass(frozen=True)
class TrialityTriple:
    m_plus: ExactMatrix
    m_minus: ExactMatrix
    m_zero: ExactMatrix

    def satisfies_relation(self) -> bool:
        """R_{m0(u)} + R_u m_- == m_+ R_u for every basis octonion u."""
        for s, name in enumerate(OCTONION_BASIS):
            r_u = _R_basis(name)
            v = Octonion(self.m_zero.apply(Octonion.basis(s).coords))
            if right_mult_matrix(v) + r_u @ self.m_minus != self.m_plus @ r_u:
                return False
        return True

    def is_skew(self) -> bool:
        return all(m.T == -m for m in (self.m_plus, self.m_minus, self.m_zero))


_SKEW_PAIRS = tuple(combinations(range(8), 2))


@lru_cache(maxsize=None)
def _triality_system() -> ExactMatrix:
    # unknown x_(a,b), a < b, is the entry m0[a][b] = -m0[b][a].  Column s of m0
    # is m0(u_s); R is linear in its argument, so equation block s reads
    # sum_w m0[w][s] R_w = m_+ R_s - R_s m_-.
    items = {}
    for col, (a, b) in enumerate(_SKEW_PAIRS):
        for (i, j), val in _R_basis(OCTONION_BASIS[a]).nonzero_items():
            items[(64 * b + 8 * i + j, col)] = val
        for (i, j), val in _R_basis(OCTONION_BASIS[b]).nonzero_items():
            items[(64 * a + 8 * i + j, col)] = -val
    return ExactMatrix.from_sparse(512, len(_SKEW_PAIRS), items)


def triality_companion(m: ExactMatrix) -> TrialityTriple:
    if m.shape != (16, 16):
        raise NotInSpin8Error(f"expected a 16x16 matrix, got {m.shape}")
    if not (m.submatrix(0, 8, 8, 8).is_zero() and m.submatrix(8, 0, 8, 8).is_zero()):
        raise NotInSpin8Error("matrix is not block diagonal")
    m_plus = m.submatrix(0, 0, 8, 8)
    m_minus = m.submatrix(8, 8, 8, 8)
    if m_plus.T != -m_plus or m_minus.T != -m_minus:
        raise NotInSpin8Error("diagonal blocks are not skew-symmetric")
    rhs = []
    for name in OCTONION_BASIS:
        r_u = _R_basis(name)
        rhs.extend((m_plus @ r_u - r_u @ m_minus).entries)
    try:
        x = solve_exact(_triality_system(), rhs)
    except (NoSolutionError, NotUniqueError) as exc:
        raise NotInSpin8Error(f"no unique triality companion: {exc}") from exc
    items = {}
    for (a, b), val in zip(_SKEW_PAIRS, x):
        items[(a, b)] = val
        items[(b, a)] = -val
    return TrialityTriple(m_plus, m_minus, ExactMatrix.from_sparse(8, 8, items))


def is_spin_delta7(m: ExactMatrix) -> bool:
    t = triality_companion(m)
    return t.m_plus == t.m_minus


# complexification -----------------------------------------------------------------

ComplexMatrix = tuple[tuple[GaussComplex, ...], ...]


def commutes_with_j(m: ExactMatrix) -> bool:
    j = j_std(m.rows)
    return m @ j == j @ m


def anticommutes_with_j(m: ExactMatrix) -> bool:
    j = j_std(m.rows)
    return (m @ j + j @ m).is_zero()


def complexify(m: ExactMatrix) -> ComplexMatrix:
    """Complex matrix of a J-linear real operator, z_s = x_{2s-1} + i x_{2s}."""
    if not m.is_square or m.rows % 2:
        raise DimensionMismatchError(f"complexify needs an even square matrix, got {m.shape}")
    if not commutes_with_j(m):
        raise NotComplexLinearError("matrix does not commute with the standard complex structure")
    n = m.rows // 2
    return tuple(
        tuple(GaussComplex(m[2 * a, 2 * b], m[2 * a + 1, 2 * b]) for b in range(n))
        for a in range(n)
    )


def realify(c: ComplexMatrix) -> ExactMatrix:
    n = len(c)
    items = {}
    for a, row in enumerate(c):
        for b, z in enumerate(row):
            items[(2 * a, 2 * b)] = z.re
            items[(2 * a + 1, 2 * b + 1)] = z.re
            items[(2 * a + 1, 2 * b)] = z.im
            items[(2 * a, 2 * b + 1)] = -z.im
    return ExactMatrix.from_sparse(2 * n, 2 * n, items)


def complex_matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    inner = len(b)
    cols = len(b[0])
    return tuple(
        tuple(sum((row[k] * b[k][j] for k in range(inner)), GaussComplex()) for j in range(cols))
        for row in a
    )


def quaternion_left_blockwise(q: str) -> ExactMatrix:
    """Left multiplication by a unit quaternion applied on both factors of H + H."""
    lq = quat_left_matrix(Quaternion.basis(q))
    return ExactMatrix.block_diag(lq, lq)
