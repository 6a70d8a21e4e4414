from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from cliffgrass.cohomology import (
    FULL_DIMENSION,
    PERP_INVOLUTION,
    REFERENCE_SERIES,
    SPACES,
    GaussianOracle,
    GradedRingPresentation,
    InvariantQuotient,
    PoincarePolynomial,
    RingInvolution,
    builtin_presentation,
    compute_space,
    euler_characteristic,
    gaussian_binomial,
    hilbert_series,
    involution_invariant_series,
    quotient_span_dimension,
    whitney_relations,
)
from cliffgrass.errors import DualityViolationError, PreconditionError, ValidationError

from oracles import box_partitions, monomials


def coeffs(series, top, step=1):
    return [series.coefficient(d) for d in range(0, top + 1, step)]


def test_free_one_generator():
    p = GradedRingPresentation([("x", 2)])
    assert hilbert_series(p, 6) == PoincarePolynomial({0: 1, 2: 1, 4: 1, 6: 1})


@given(st.lists(st.sampled_from([1, 2, 3, 4, 8]), min_size=1, max_size=4), st.integers(0, 20))
def test_free_ring_counts_monomials(degrees, top):
    p = GradedRingPresentation([(f"x{i}", d) for i, d in enumerate(degrees)])
    assert coeffs(hilbert_series(p, top), top) == [len(monomials(degrees, d)) for d in range(top + 1)]


def test_inhomogeneous_relation_rejected():
    with pytest.raises(ValidationError):
        GradedRingPresentation([("x", 2), ("y", 4)], [{(1, 0): 1, (0, 1): 1}])


@pytest.mark.parametrize(
    "gens",
    [[("x", 0)], [("x", 2), ("x", 4)], [("x", -2)]],
)
def test_bad_generators(gens):
    with pytest.raises(ValidationError):
        GradedRingPresentation(gens)


def test_negative_degree():
    with pytest.raises(PreconditionError):
        hilbert_series(GradedRingPresentation([("x", 2)]), -1)


def test_gr8r10_quotient_basis():
    # e x = 0 and e^2 = x^8 leave the basis 1, x, ..., x^8, e (x in degree 2, e in degree 8)
    p = builtin_presentation("gr8r10")
    assert p.generators == (("e", 8), ("e_perp", 2))
    assert coeffs(hilbert_series(p, 20), 20, 2) == [1, 1, 1, 1, 2, 1, 1, 1, 1, 0, 0]


def test_gr8r10_reference():
    assert hilbert_series(builtin_presentation("gr8r10"), 16) == REFERENCE_SERIES["gr8r10"]


@pytest.mark.parametrize("n", range(0, 8))
def test_gaussian_against_box_partitions(n):
    for k in range(n + 1):
        expected = {2 * size: c for size, c in box_partitions(n, k).items()}
        assert gaussian_binomial(n, k, 2).as_dict() == expected


@pytest.mark.parametrize(
    "args,expected",
    [
        ((6, 2, 2), [1, 1, 2, 2, 3, 2, 2, 1, 1]),
        ((4, 2, 4), [1, 0, 1, 0, 2, 0, 1, 0, 1]),
        ((5, 0, 6), [1]),
    ],
)
def test_gaussian_examples(args, expected):
    g = gaussian_binomial(*args)
    step = 2
    assert coeffs(g, step * (len(expected) - 1), step) == expected


@given(st.integers(0, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.sampled_from([2, 4, 8]))
def test_gaussian_symmetric_and_palindromic(nk, w):
    n, k = nk
    g = gaussian_binomial(n, k, w)
    assert g == gaussian_binomial(n, n - k, w)
    assert g.is_palindromic()
    assert g(1) == comb(n, k)


@pytest.mark.parametrize("args", [(3, 4, 2), (3, -1, 2), (4, 2, 3), (4, 2, 0)])
def test_gaussian_errors(args):
    with pytest.raises(PreconditionError):
        gaussian_binomial(*args)


def test_builtin_descriptors():
    assert builtin_presentation("gr4c6") == GaussianOracle(6, 2, 2)
    assert builtin_presentation("gr2h4") == GaussianOracle(4, 2, 4)
    assert isinstance(builtin_presentation("gr8perp-r16"), InvariantQuotient)
    p = builtin_presentation("gr8r16")
    assert p.names == ("e", "p1", "p2", "p3", "e_perp", "p1_perp", "p2_perp", "p3_perp")
    assert p.degrees == (8, 4, 8, 12, 8, 4, 8, 12)
    with pytest.raises(PreconditionError):
        builtin_presentation("gr3r7")


def test_whitney_components():
    gens = [("a", 4), ("b", 4)]
    rels = whitney_relations(gens, [(("a", 1),)], [(("b", 1),)])
    # (1 + a)(1 + b) - 1 = (a + b) + ab
    assert rels == [{(1, 0): 1, (0, 1): 1}, {(1, 1): 1}]


def test_literal_and_variant_presentations():
    literal = hilbert_series(builtin_presentation("gr8r16"), 32)
    variant = hilbert_series(builtin_presentation("gr8r16-variant"), 32)
    ref = REFERENCE_SERIES["gr8r16"]
    assert variant == ref
    assert literal != ref


@pytest.mark.parametrize("space", ["gr8r10", "gr4c6", "gr2h4", "gr8r12", "gr8r16"])
def test_builtin_spaces_match_printed(space):
    res = compute_space(space)
    assert res.matches_reference
    ref = REFERENCE_SERIES[space]
    top = ref.truncation if ref.truncation is not None else ref.degree
    assert res.series.through(top) == ref.through(top)


def test_gr8r16_reports_variant():
    res = compute_space("gr8r16", 32)
    assert res.presentation_used == "variant"
    assert dict(res.attempts) == {"literal": False, "variant": True}
    assert res.euler_characteristic == 140


@pytest.mark.parametrize("space,a,b", [("gr8r10", 4, 1), ("gr8r12", 4, 2), ("gr8r16", 4, 4)])
def test_euler_matches_oriented_grassmannian_formula(space, a, b):
    # chi of oriented 2a-planes in R^(2a+2b) is 2 * C(a+b, a)
    assert compute_space(space).euler_characteristic == 2 * comb(a + b, a)


@pytest.mark.parametrize("space,chi", [("gr4c6", comb(6, 2)), ("gr2h4", comb(4, 2))])
def test_euler_of_oracle_spaces(space, chi):
    assert compute_space(space).euler_characteristic == chi


def test_poincare_json():
    obj = compute_space("gr8r12").to_json()
    assert obj["space"] == "gr8r12" and obj["euler_characteristic"] == 30
    assert obj["presentation_used"] == "literal"
    assert obj["coefficients"]["16"] == 6
    assert compute_space("gr4c6").to_json()["presentation_used"] == "oracle"


# involutions -----------------------------------------------------------------------------


def _xy(relations):
    return GradedRingPresentation([("x", 2), ("y", 2)], relations)


def test_swap_on_small_ring():
    # Q[x, y]/(xy): degree d > 0 has basis x^d, y^d; the swap fixes x^d + y^d only
    p = _xy([{(1, 1): 1}])
    swap = RingInvolution.swap([("x", "y")])
    assert coeffs(involution_invariant_series(p, swap, 8), 8, 2) == [1, 1, 1, 1, 1]
    assert coeffs(involution_invariant_series(p, swap, 8, sign=-1), 8, 2) == [0, 1, 1, 1, 1]


def test_sign_flip_involution():
    p = GradedRingPresentation([("x", 2)])
    flip = RingInvolution({"x": (-1, "x")})
    assert coeffs(involution_invariant_series(p, flip, 8), 8, 2) == [1, 0, 1, 0, 1]


def test_ideal_must_be_preserved():
    p = _xy([{(2, 0): 1}])
    with pytest.raises(ValidationError):
        involution_invariant_series(p, RingInvolution.swap([("x", "y")]), 6)


@pytest.mark.parametrize(
    "mapping",
    [{"x": "z"}, {"x": "y"}, {"x": (2, "y")}],
    ids=["unknown", "not-involutive", "bad-sign"],
)
def test_bad_involutions(mapping):
    p = GradedRingPresentation([("x", 2), ("y", 2), ("z", 4)])
    with pytest.raises(ValidationError):
        involution_invariant_series(p, RingInvolution(mapping), 4)


def test_identity_involution():
    for space in ("gr8r10", "gr8r12"):
        p = builtin_presentation(space)
        assert involution_invariant_series(p, RingInvolution.identity(), 16) == hilbert_series(p, 16)


@pytest.mark.parametrize("space", ["gr8r16", "gr8r16-variant"])
def test_invariant_plus_anti_is_everything(space):
    p = builtin_presentation(space)
    inv = involution_invariant_series(p, PERP_INVOLUTION, 32)
    anti = involution_invariant_series(p, PERP_INVOLUTION, 32, sign=-1)
    full = hilbert_series(p, 32)
    for d in range(33):
        assert inv.coefficient(d) + anti.coefficient(d) == full.coefficient(d)


def test_perp_invariants_computed():
    # the +1 eigenspace of the complement swap; duality gives chi = 70 = 140 / 2,
    # as it must for a free Z_2 quotient
    p = builtin_presentation("gr8r16-variant")
    inv = involution_invariant_series(p, PERP_INVOLUTION, 32)
    assert coeffs(inv, 32, 4) == [1, 0, 2, 2, 5, 5, 8, 7, 10]
    assert euler_characteristic(inv, 64) == 70
    assert 2 * euler_characteristic(inv, 64) == compute_space("gr8r16").euler_characteristic


def test_perp_degree8_classes():
    p = builtin_presentation("gr8r16-variant")
    names = p.names

    def mono(**exps):
        return tuple(exps.get(n, 0) for n in names)

    p1_sq = {mono(p1=2): 1}
    e_sym = {mono(e=1): 1, mono(e_perp=1): 1}
    assert quotient_span_dimension(p, [p1_sq, e_sym]) == 2
    inv = involution_invariant_series(p, PERP_INVOLUTION, 8)
    assert inv.coefficient(8) == 2
    # p1 itself is anti-invariant: p1 + p1_perp = 0 in degree 4
    assert quotient_span_dimension(p, [{mono(p1=1): 1, mono(p1_perp=1): 1}]) == 0


# Euler characteristic and duality --------------------------------------------------------------


def test_euler_examples():
    assert euler_characteristic(REFERENCE_SERIES["gr8r16"], 64) == 140
    assert euler_characteristic(REFERENCE_SERIES["gr8perp-r16"], 64) == 16
    s = REFERENCE_SERIES["gr8r12"]
    assert euler_characteristic(s, 32) == s(1) == 30


def test_duality_violation():
    with pytest.raises(DualityViolationError):
        euler_characteristic(PoincarePolynomial({0: 1, 4: 2, 28: 1, 32: 1}), 32)
    with pytest.raises(DualityViolationError):
        euler_characteristic(PoincarePolynomial({0: 1, 40: 1}), 32)


def test_truncation_too_short():
    with pytest.raises(PreconditionError):
        euler_characteristic(PoincarePolynomial({0: 1, 4: 1}, truncation=8), 64)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=8))
def test_palindromic_completion_is_stable(half):
    top = 2 * (len(half) - 1)
    full = {d: c for d, c in enumerate(half)}
    full.update({top - d: c for d, c in enumerate(half)})
    p = PoincarePolynomial(full)
    if p.is_palindromic(top):
        assert euler_characteristic(p, top) == sum((-1) ** d * c for d, c in full.items())


def test_polynomial_basics():
    p = PoincarePolynomial.from_list([1, 2, 1], step=4)
    assert p(1) == 4 and p(Fraction(1, 2)) == 1 + Fraction(2, 16) + Fraction(1, 256)
    assert str(p) == "1 + 2t^4 + t^8"
    assert str(p.through(4)) == "1 + 2t^4 + ..."
    assert p == PoincarePolynomial({0: 1, 4: 2, 8: 1, 12: 0})
    with pytest.raises(ValidationError):
        PoincarePolynomial({0: -1})


def test_every_space_has_dimension():
    assert set(SPACES) == set(FULL_DIMENSION)


def test_variant_is_a_duality_algebra():
    p = builtin_presentation("gr8r16-variant")
    full = hilbert_series(p, 64)
    assert full.is_palindromic(64) and full.coefficient(64) == 1 and full(1) == 140
    inv = involution_invariant_series(p, PERP_INVOLUTION, 64)
    assert inv.is_palindromic(64) and inv.coefficient(64) == 1 and inv(1) == 70


def test_literal_is_not_a_duality_algebra():
    full = hilbert_series(builtin_presentation("gr8r16"), 40)
    assert full.coefficient(28) == 16 and full.coefficient(36) == 19
