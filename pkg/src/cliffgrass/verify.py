"""Verification suites: every fixture comparison and algebraic identity, as data.

Each suite returns a :class:`VerificationReport`.  Checks run in a fixed order
and random samples come from ``random.Random(seed)``, so the JSON form of a
report depends only on the suite and the seed.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Any, Callable

from . import fixtures
from .clifford import (
    BLOCK_DIM,
    RANK_OF_KIND,
    EvenCliffordElement,
    TangentModel,
    blade_product,
    even_basis,
    even_image_dimension,
    even_mul,
    lambda2_image_check,
    morphism_defects,
    phi_apply,
    phi_block_matrix,
)
from .cohomology import (
    FULL_DIMENSION,
    PERP_INVOLUTION,
    REFERENCE_SERIES,
    GradedRingPresentation,
    PoincarePolynomial,
    RingInvolution,
    builtin_presentation,
    compute_space,
    euler_characteristic,
    gaussian_binomial,
    hilbert_series,
    involution_invariant_series,
    quotient_span_dimension,
)
from .errors import CliffgrassError, NotComplexLinearError, NotInSpin8Error, PreconditionError
from .exact import ExactMatrix, GaussComplex, Subspace, classify_operator, commutator, rank_exact, span_dimension
from .octonion import (
    OCTONION_BASIS,
    QUATERNION_BASIS,
    Octonion,
    Quaternion,
    oct_mul,
    orthogonal_identity_check,
    quat_left_matrix,
    quat_right_matrix,
    random_octonion,
    random_orthogonal_pair,
    random_orthonormal_pair,
    random_rational,
    random_unit_octonion,
    right_mult_matrix,
)
from .spin import (
    SPIN6_BASIS,
    build_m_u,
    build_m_uv,
    anticommutes_with_j,
    clifford_products,
    clifford_system,
    commutes_with_j,
    complex_matmul,
    complexify,
    compose_system,
    is_spin_delta7,
    lie_closure_report,
    m_u_generators,
    quaternion_left_blockwise,
    spin7delta_basis,
    spin8_basis,
    triality_companion,
)

SUITES = ("exact", "octonion", "spin8", "triality", "spin6", "spin5", "clifford", "cohomology")
RANDOM_SAMPLES = 500
SEED_ENV = "CLIFFGRASS_SEED"


def default_seed() -> int:
    value = os.environ.get(SEED_ENV)
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise PreconditionError(f"{SEED_ENV} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    witness: Any = None
    info: Any = None

    def to_json(self) -> dict:
        out = {"id": self.id, "status": "pass" if self.passed else "fail"}
        if self.info is not None:
            out["info"] = self.info
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self, include_elapsed: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "counts": {"pass": len(self.checks) - len(self.failures()), "fail": len(self.failures())},
            "checks": [c.to_json() for c in self.checks],
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out


class _Recorder:
    def __init__(self, suite: str, seed: int):
        self.report = VerificationReport(suite, seed)

    def check(self, cid: str, ok: bool, witness: Any = None, info: Any = None):
        if not ok and witness is None:
            witness = "no counterexample data"
        self.report.checks.append(Check(cid, bool(ok), witness if not ok else None, info))

    def same(self, cid: str, computed: ExactMatrix, printed: ExactMatrix):
        ok = computed == printed
        self.check(cid, ok, None if ok else {"computed": computed.to_json(), "printed": printed.to_json()})

    def sample(self, cid: str, count: int, draw: Callable[[], Any], holds: Callable[[Any], bool], show):
        for trial in range(count):
            case = draw()
            if not holds(case):
                self.check(cid, False, {"trial": trial, "case": show(case)}, {"samples": count})
                return
        self.check(cid, True, info={"samples": count})

    def raises(self, cid: str, exc: type, fn: Callable[[], Any]):
        try:
            fn()
        except exc:
            self.check(cid, True)
            return
        except CliffgrassError as other:
            self.check(cid, False, f"raised {type(other).__name__}: {other}")
            return
        self.check(cid, False, f"no {exc.__name__} raised")


def _octs(*xs: Octonion) -> list:
    return [x.to_json() for x in xs]


def _mismatches(pairs) -> list:
    return [
        {"label": label, "computed": a.to_json(), "printed": b.to_json()}
        for label, a, b in pairs
        if a != b
    ]


def _group(rec: _Recorder, cid: str, pairs):
    bad = _mismatches(pairs)
    rec.check(cid, not bad, bad or None, {"compared": len(pairs)})


# exact core ---------------------------------------------------------------------------


def _suite_exact(rec: _Recorder, rng: random.Random):
    def nonzero():
        while True:
            q = random_rational(rng, 50)
            if q:
                return q

    rec.sample("exact.reciprocal", RANDOM_SAMPLES, nonzero, lambda q: q * (1 / q) == 1, str)

    def rand_matrix():
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        # low-rank products so that the rank is not always full
        k = rng.randint(0, min(r, c))
        a = ExactMatrix(r, k, [random_rational(rng, 4) for _ in range(r * k)]) if k else ExactMatrix.zeros(r, 0)
        b = ExactMatrix(k, c, [random_rational(rng, 4) for _ in range(k * c)]) if k else ExactMatrix.zeros(0, c)
        return a @ b if k else ExactMatrix.zeros(r, c)

    rec.sample(
        "exact.rank-transpose", 200, rand_matrix, lambda m: rank_exact(m) == rank_exact(m.T), lambda m: m.to_json()
    )
    rec.check("exact.rank-proportional", rank_exact(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 1)
    rec.check("exact.rank-identity16", rank_exact(ExactMatrix.identity(16)) == 16)

    def recombined():
        ms = [ExactMatrix(2, 2, [random_rational(rng, 3) for _ in range(4)]) for _ in range(rng.randint(1, 5))]
        # invertible recombination: unit lower-triangular mixing
        mixed = []
        for i, m in enumerate(ms):
            acc = m
            for j in range(i):
                acc = acc + ms[j].scale(random_rational(rng, 3))
            mixed.append(acc)
        return ms, mixed

    rec.sample(
        "exact.span-recombination",
        200,
        recombined,
        lambda c: span_dimension(c[0]) == span_dimension(c[1]),
        lambda c: [m.to_json() for m in c[0]],
    )
    ident = ExactMatrix.identity(16)
    rec.check("exact.span-scaled-identity", span_dimension([ident, ident.scale(2)]) == 1)
    m = build_m_uv("1", "i")
    rec.check("exact.commutator-identity", commutator(ident, m).is_zero())
    flags = classify_operator(build_m_u("1"))
    rec.check("exact.classify-m1", set(flags.names()) == {"orthogonal", "skew", "complex_structure"}, sorted(flags.names()))
    flags = classify_operator(clifford_system("spin8").involutions[0])
    rec.check("exact.classify-I1", set(flags.names()) == {"orthogonal", "symmetric", "involution"}, sorted(flags.names()))
    flags = classify_operator(ExactMatrix.zeros(4, 4))
    rec.check("exact.classify-zero", set(flags.names()) == {"symmetric", "skew"}, sorted(flags.names()))
    cstructs = [g.matrix for g in spin8_basis()] + [g.matrix for g in m_u_generators()]
    rec.check(
        "exact.complex-structure-full-rank",
        all(m.rows % 2 == 0 and rank_exact(m) == m.rows for m in cstructs if classify_operator(m).complex_structure),
    )

    def rand_json():
        return ExactMatrix(3, 2, [random_rational(rng, 99) for _ in range(6)])

    rec.sample(
        "exact.json-roundtrip", 100, rand_json, lambda m: ExactMatrix.from_json(m.to_json()) == m, lambda m: m.to_json()
    )

    def gauss():
        return tuple(GaussComplex(random_rational(rng), random_rational(rng)) for _ in range(3))

    rec.sample(
        "exact.gauss-ring",
        200,
        gauss,
        lambda z: (z[0] * z[1]) * z[2] == z[0] * (z[1] * z[2])
        and z[0] * (z[1] + z[2]) == z[0] * z[1] + z[0] * z[2]
        and z[0].conjugate().conjugate() == z[0],
        lambda z: [str(x) for x in z],
    )


# octonion ------------------------------------------------------------------------------


def _suite_octonion(rec: _Recorder, rng: random.Random):
    o = Octonion.basis
    rec.check("octonion.i*j=k", oct_mul(o("i"), o("j")) == o("k"))
    rec.check("octonion.e*f=i", oct_mul(o("e"), o("f")) == o("i"))
    rec.check("octonion.conj(1+i)", (o("1") + o("i")).conj() == o("1") - o("i"))
    rec.check("octonion.norm-all-ones", Octonion([1] * 8).norm_sq() == 8)

    _group(
        rec,
        "octonion.fixture.quaternion-right",
        [(q, quat_right_matrix(Quaternion.basis(q)), fixtures.RH[q]) for q in "ijk"],
    )
    _group(
        rec,
        "octonion.fixture.quaternion-left",
        [(q, quat_left_matrix(Quaternion.basis(q)), fixtures.LH[q]) for q in "ijk"],
    )
    _group(rec, "octonion.fixture.right-mult", [(u, right_mult_matrix(o(u)), fixtures.R[u]) for u in OCTONION_BASIS])
    for (lam, mu), printed in fixtures.RL.items():
        computed = quat_right_matrix(Quaternion.basis(lam)) @ quat_left_matrix(Quaternion.basis(mu))
        rec.same(f"octonion.fixture.RH_{lam}LH_{mu}", computed, printed)
    _group(
        rec,
        "octonion.fixture.right-compositions",
        [(f"R_{{{a},{b}}}", right_mult_matrix(o(a)) @ right_mult_matrix(o(b)), blk) for (a, b), blk in fixtures.R2.items()],
    )

    def columns_match():
        for u in OCTONION_BASIS:
            r = right_mult_matrix(o(u))
            for s in OCTONION_BASIS:
                if oct_mul(o(s), o(u)).coords != tuple(r.apply(o(s).coords)):
                    return False
        return True

    rec.check("octonion.product-is-right-mult", columns_match())

    pair = lambda: (random_octonion(rng), random_octonion(rng))
    triple = lambda: (random_octonion(rng), random_octonion(rng), random_octonion(rng))
    show = lambda c: _octs(*c)
    rec.sample(
        "octonion.composition-law",
        RANDOM_SAMPLES,
        pair,
        lambda c: (c[0] * c[1]).norm_sq() == c[0].norm_sq() * c[1].norm_sq(),
        show,
    )
    rec.sample(
        "octonion.alternative",
        RANDOM_SAMPLES,
        pair,
        lambda c: c[0] * (c[0] * c[1]) == (c[0] * c[0]) * c[1] and (c[1] * c[0]) * c[0] == c[1] * (c[0] * c[0]),
        show,
    )
    rec.sample(
        "octonion.moufang",
        RANDOM_SAMPLES,
        triple,
        lambda c: (c[2] * (c[0] * c[1])) * c[2] == (c[2] * c[0]) * (c[1] * c[2]),
        show,
    )
    rec.sample(
        "octonion.conj-product-is-norm",
        RANDOM_SAMPLES,
        lambda: random_octonion(rng),
        lambda a: a * a.conj() == Octonion.basis("1") * a.norm_sq(),
        lambda a: a.to_json(),
    )
    rec.sample(
        "octonion.unit-law",
        RANDOM_SAMPLES,
        lambda: random_octonion(rng),
        lambda a: o("1") * a == a and a * o("1") == a,
        lambda a: a.to_json(),
    )

    def orth_triple():
        u, v = random_orthogonal_pair(rng)
        return random_octonion(rng), u, v

    rec.sample("octonion.orthogonal-identity", RANDOM_SAMPLES, orth_triple, lambda c: orthogonal_identity_check(*c), show)
    rec.check("octonion.orthogonal-identity-basis", orthogonal_identity_check(o("j"), o("1"), o("i")))
    rec.raises("octonion.orthogonal-identity-rejects", PreconditionError, lambda: orthogonal_identity_check(o("j"), o("i"), o("i")))

    ident8 = ExactMatrix.identity(8)
    rec.sample(
        "octonion.R_u-R_conj(u)",
        RANDOM_SAMPLES,
        lambda: random_octonion(rng),
        lambda u: right_mult_matrix(u) @ right_mult_matrix(u.conj()) == ident8.scale(u.norm_sq()),
        lambda u: u.to_json(),
    )
    rec.sample(
        "octonion.right-mult-anticommute",
        RANDOM_SAMPLES,
        lambda: random_orthogonal_pair(rng),
        lambda c: right_mult_matrix(c[0]) @ right_mult_matrix(c[1].conj())
        == -(right_mult_matrix(c[1]) @ right_mult_matrix(c[0].conj())),
        show,
    )

    def lin():
        u, v = random_octonion(rng), random_octonion(rng)
        return u, v, random_rational(rng)

    rec.sample(
        "octonion.right-mult-linear",
        100,
        lin,
        lambda c: right_mult_matrix(c[0] + c[1] * c[2]) == right_mult_matrix(c[0]) + right_mult_matrix(c[1]).scale(c[2]),
        lambda c: _octs(c[0], c[1]) + [str(c[2])],
    )
    rec.check(
        "octonion.json-roundtrip",
        all(Octonion.from_json(x.to_json()) == x for x in (random_octonion(rng) for _ in range(50))),
    )


# spin(8) ----------------------------------------------------------------------------------


def _suite_spin8(rec: _Recorder, rng: random.Random):
    basis = spin8_basis()
    mats = [g.matrix for g in basis]
    _group(rec, "spin8.fixture.m_u", [(g.name, g.matrix, fixtures.M_U[g.label[0]]) for g in m_u_generators()])
    _group(rec, "spin8.fixture.m_uv", [(g.name, g.matrix, fixtures.M_UV[g.label]) for g in basis])
    rec.check("spin8.count", len(basis) == 28)
    rec.check("spin8.span", span_dimension(mats) == 28)
    flags_bad = [g.name for g in basis + m_u_generators() if not classify_operator(g.matrix).complex_structure]
    rec.check("spin8.complex-structures", not flags_bad, flags_bad)
    other = [g.name for g in basis + m_u_generators() if set(classify_operator(g.matrix).names()) != {"orthogonal", "skew", "complex_structure"}]
    rec.check("spin8.flags", not other, other)

    cs = clifford_system("spin8")
    _group(
        rec,
        "spin8.fixture.involutions",
        [(f"I_{u}", m, fixtures.INVOLUTIONS[u]) for u, m in zip(cs.labels, cs.involutions)],
    )
    rec.check("spin8.system-valid", cs.is_valid())
    composed = compose_system(cs)
    bad = [a.name for a, b in zip(composed, basis) if a.matrix != b.matrix or a.label != b.label]
    rec.check("spin8.compose-equals-basis", not bad and len(composed) == 28, bad)

    ident = ExactMatrix.identity(16)
    gens = {u: build_m_u(u) for u in OCTONION_BASIS}
    bad = []
    for u in OCTONION_BASIS:
        for v in OCTONION_BASIS:
            lhs = gens[u] @ gens[v] + gens[v] @ gens[u]
            if lhs != ident.scale(-2 * Octonion.basis(u).inner(Octonion.basis(v))):
                bad.append([u, v])
    rec.check("spin8.clifford-relations-basis", not bad, bad, {"pairs": 64})

    def clifford_rel(c):
        u, v = c
        mu, mv = build_m_u(u), build_m_u(v)
        return mu @ mv + mv @ mu == ident.scale(-2 * u.inner(v))

    rec.sample(
        "spin8.clifford-relations-random",
        RANDOM_SAMPLES,
        lambda: (random_octonion(rng, 5), random_octonion(rng, 5)),
        clifford_rel,
        lambda c: _octs(*c),
    )
    unit = Octonion([Fraction(3, 5), Fraction(4, 5), 0, 0, 0, 0, 0, 0])
    rec.check("spin8.m_u-rational-unit", build_m_u(unit) @ build_m_u(unit) == -ident)

    def orthonormal(c):
        u, v = c
        m = build_m_uv(u, v)
        return classify_operator(m).complex_structure and build_m_uv(v, u) == -m

    rec.sample("spin8.m_uv-orthonormal", 100, lambda: random_orthonormal_pair(rng), orthonormal, lambda c: _octs(*c))
    rec.check("spin8.m_uu", build_m_uv("i", "i") == -ident)

    prods = clifford_products([gens[u] for u in OCTONION_BASIS])
    rec.check("spin8.clifford-algebra-span", span_dimension(prods) == 256, info={"products": len(prods)})

    rep = lie_closure_report(mats)
    rec.check("spin8.lie-closure", rep.dimension == 28 and rep.closed, {"dimension": rep.dimension, "failures": rep.failures})
    rep = lie_closure_report([g.matrix for g in spin7delta_basis()])
    rec.check("spin7delta.lie-closure", rep.dimension == 21 and rep.closed, {"dimension": rep.dimension, "failures": rep.failures})
    space = Subspace(m.vectorize() for m in mats)
    br = commutator(build_m_uv("1", "i"), build_m_uv("1", "j"))
    rec.check("spin8.bracket-1i-1j", br == build_m_uv("i", "j").scale(2) and space.contains(br.vectorize()))


# triality ------------------------------------------------------------------------------------


def _suite_triality(rec: _Recorder, rng: random.Random):
    basis = spin8_basis()
    bad, delta, triples = [], [], {}
    for g in basis:
        try:
            t = triality_companion(g.matrix)
        except NotInSpin8Error as exc:
            bad.append({"label": g.name, "error": str(exc)})
            continue
        triples[g.label] = t
        if not (t.satisfies_relation() and t.is_skew()):
            bad.append({"label": g.name, "m_zero": t.m_zero.to_json()})
        if t.m_plus == t.m_minus:
            delta.append(g.name)
    rec.check("triality.unique-skew-companions", not bad, bad, {"elements": len(basis)})
    expected = [g.name for g in spin7delta_basis()]
    rec.check("triality.delta7-exactly-21", delta == expected, {"equal-blocks": delta})
    t = triples.get(("1", "i"))
    ri = right_mult_matrix(Octonion.basis("i"))
    rec.check("triality.m_1i-blocks", t is not None and t.m_plus == ri and t.m_minus == -ri)
    rec.check("triality.m_jk-delta7", is_spin_delta7(build_m_uv("j", "k")))
    rec.check("triality.m_1e-not-delta7", not is_spin_delta7(build_m_uv("1", "e")))

    def combo():
        return [random_rational(rng, 5) for _ in basis]

    def linear(coeffs):
        m = ExactMatrix.zeros(16, 16)
        z = ExactMatrix.zeros(8, 8)
        for c, g in zip(coeffs, basis):
            m = m + g.matrix.scale(c)
            z = z + triples[g.label].m_zero.scale(c)
        t = triality_companion(m)
        return t.m_zero == z and t.satisfies_relation()

    rec.sample("triality.companion-linear", 25, combo, linear, lambda c: [str(x) for x in c])

    d7 = spin7delta_basis()

    def delta_combo(coeffs):
        m = ExactMatrix.zeros(16, 16)
        for c, g in zip(coeffs, d7):
            m = m + g.matrix.scale(c)
        return is_spin_delta7(m)

    rec.sample(
        "triality.delta7-combinations", 25, lambda: [random_rational(rng, 5) for _ in d7], delta_combo, lambda c: [str(x) for x in c]
    )
    sym = ExactMatrix.block_diag(ExactMatrix.identity(8), ExactMatrix.identity(8))
    rec.raises("triality.rejects-symmetric", NotInSpin8Error, lambda: triality_companion(sym))


# spin(6) ----------------------------------------------------------------------------------------


def _suite_spin6(rec: _Recorder, rng: random.Random):
    cs = clifford_system("spin6")
    full = clifford_system("spin8")
    rec.check("spin6.first-six", cs.labels == SPIN6_BASIS and cs.involutions == full.involutions[:6])
    _group(
        rec,
        "spin6.fixture.involutions",
        [(f"I_{u}", m, fixtures.INVOLUTIONS[u]) for u, m in zip(cs.labels, cs.involutions)],
    )
    rec.check("spin6.system-valid", cs.is_valid())
    composed = compose_system(cs)
    mats = [g.matrix for g in composed]
    rec.check("spin6.span", len(mats) == 15 and span_dimension(mats) == 15)
    rep = lie_closure_report(mats)
    rec.check("spin6.lie-closure", rep.dimension == 15 and rep.closed, {"dimension": rep.dimension, "failures": rep.failures})

    m = {u: build_m_u(u) for u in OCTONION_BASIS}
    bad = [u for u in SPIN6_BASIS if not commutes_with_j(m[u])]
    rec.check("spin6.m_u-commute-with-J", not bad, bad)
    bad = [u for u in "gh" if not anticommutes_with_j(m[u])]
    rec.check("spin6.m_g-m_h-anticommute-with-J", not bad, bad)

    bad = []
    for u, printed in fixtures.COMPLEX.items():
        c = complexify(right_mult_matrix(Octonion.basis(u)))
        if c != printed:
            bad.append({"label": f"R_{u}", "computed": _cjson(c), "printed": _cjson(printed)})
    rec.check("spin6.fixture.complex", not bad, bad or None, {"compared": len(fixtures.COMPLEX)})
    for u in "gh":
        rec.raises(f"spin6.complexify-rejects-R_{u}", NotComplexLinearError, lambda u=u: complexify(right_mult_matrix(Octonion.basis(u))))
        rec.raises(f"spin6.complexify-rejects-m_{u}", NotComplexLinearError, lambda u=u: complexify(m[u]))

    # composition sign: complexify(m_{u,v}) = c(m_u) c(m_v) = -c(I_u) c(I_v)
    inv = dict(zip(cs.labels, cs.involutions))
    bad = []
    for g in composed:
        u, v = g.label
        cm = complexify(g.matrix)
        ok = cm == complex_matmul(complexify(m[u]), complexify(m[v]))
        ok = ok and cm == _cneg(complex_matmul(complexify(inv[u]), complexify(inv[v])))
        ok = ok and g.matrix == build_m_uv(u, v)
        if not ok:
            bad.append(g.name)
    rec.check("spin6.composition-sign", not bad, bad, {"composition_sign": cs.composition_sign})


def _cjson(c) -> list:
    return [[str(z) for z in row] for row in c]


def _cneg(c):
    return tuple(tuple(GaussComplex(-z.re, -z.im) for z in row) for row in c)


# spin(5) ------------------------------------------------------------------------------------------


def _suite_spin5(rec: _Recorder, rng: random.Random):
    cs = clifford_system("spin5")
    _group(rec, "spin5.fixture.sigma", [(f"sigma_{a}", m, fixtures.SIGMA[a]) for a, m in zip(cs.labels, cs.involutions)])
    rec.check("spin5.system-valid", cs.is_valid())
    rec.check("spin5.sigma5", cs.involutions[4] == ExactMatrix.block_diag(ExactMatrix.identity(4), -ExactMatrix.identity(4)))
    composed = compose_system(cs)
    _group(rec, "spin5.fixture.compositions", [(g.name, g.matrix, fixtures.SIGMA2[g.label]) for g in composed])
    mats = [g.matrix for g in composed]
    rep = lie_closure_report(mats)
    rec.check("spin5.lie-closure", rep.dimension == 10 and rep.closed, {"dimension": rep.dimension, "failures": rep.failures})
    by = {g.label: g.matrix for g in composed}
    rec.check("spin5.disjoint-pairs-commute", commutator(by[(1, 2)], by[(3, 4)]).is_zero())
    lefts = [quaternion_left_blockwise(q) for q in "ijk"]
    bad = [g.name for g in composed if any(not commutator(g.matrix, q).is_zero() for q in lefts)]
    rec.check("spin5.quaternion-linear", not bad, bad)
    cflags = [g.name for g in composed if not classify_operator(g.matrix).complex_structure]
    rec.check("spin5.complex-structures", not cflags, cflags)


# clifford structure ----------------------------------------------------------------------------------


def _suite_clifford(rec: _Recorder, rng: random.Random):
    rec.check("clifford.even-basis-counts", [len(even_basis(r)) for r in (8, 6, 5)] == [128, 32, 16])
    b6 = even_basis(6)
    rec.check("clifford.even-basis-parity", (1, 2, 3, 4) in b6 and (1, 2, 3) not in b6)
    e = EvenCliffordElement.blade
    rec.check("clifford.e12*e23", even_mul(e(8, (1, 2)), e(8, (2, 3))) == e(8, (1, 3), -1))
    rec.check("clifford.e12-squared", even_mul(e(8, (1, 2)), e(8, (1, 2))) == -EvenCliffordElement.unit(8))

    def trip():
        r = rng.choice((8, 6, 5))
        basis = even_basis(r)
        return [rng.choice(basis) for _ in range(3)]

    def assoc(c):
        s1, u = blade_product(c[0], c[1])
        s2, left = blade_product(u, c[2])
        s3, v = blade_product(c[1], c[2])
        s4, right = blade_product(c[0], v)
        return s1 * s2 == s3 * s4 and left == right

    rec.sample("clifford.blade-associative", RANDOM_SAMPLES, trip, assoc, lambda c: [list(x) for x in c])

    for kind in ("rank8", "rank6", "rank5"):
        for n in (1, 2, 3):
            defects = morphism_defects(kind, n)
            rec.check(f"clifford.morphism.{kind}.n{n}", not defects, [[list(s), list(t)] for s, t in defects[:5]] or None)
            rep = lambda2_image_check(kind, n)
            rec.check(
                f"clifford.lambda2.{kind}.n{n}",
                rep.passed,
                list(rep.violations) or None,
                {"pairs": rep.pairs_checked, "dimension": rep.dimension},
            )
    dim = even_image_dimension("rank8", 1)
    rec.check("clifford.rank8-image-dimension", dim == 128, {"dimension": dim})

    bad = []
    for s, t in combinations(range(1, 9), 2):
        if phi_block_matrix("rank8", e(8, (s, t))) != build_m_uv(OCTONION_BASIS[s - 1], OCTONION_BASIS[t - 1]):
            bad.append([s, t])
    rec.check("clifford.rank8-compatible-with-m_uv", not bad, bad)

    o = Octonion.basis
    t = TangentModel.from_octonion_pairs([(o("1"), Octonion.zero())])
    out = phi_apply("rank8", e(8, (1, 2)), t)
    rec.check("clifford.phi-e12-on-unit", out == TangentModel.from_octonion_pairs([(o("i"), Octonion.zero())]))

    def rand_elem(r):
        basis = even_basis(r)
        return EvenCliffordElement(r, {rng.choice(basis): random_rational(rng, 4) for _ in range(3)})

    def rand_model(kind, n):
        d = BLOCK_DIM[kind]
        return TangentModel(kind, n, [[random_rational(rng, 4) for _ in range(d)] for _ in range(n)])

    def case():
        kind = rng.choice(tuple(RANK_OF_KIND))
        r = RANK_OF_KIND[kind]
        n = rng.randint(1, 3)
        return kind, rand_elem(r), rand_elem(r), rand_model(kind, n), rand_model(kind, n), random_rational(rng, 4)

    def show(c):
        return {"kind": c[0], "a": c[1].to_json(), "b": c[2].to_json(), "t": c[3].to_json()}

    def unit_ok(c):
        return phi_apply(c[0], EvenCliffordElement.unit(RANK_OF_KIND[c[0]]), c[3]) == c[3]

    def diagonal(c):
        kind, a, _, t, _, _ = c
        perm = list(range(t.n))
        rng.shuffle(perm)
        shuffled = TangentModel(kind, t.n, [t.blocks[i] for i in perm])
        image = phi_apply(kind, a, t)
        return phi_apply(kind, a, shuffled) == TangentModel(kind, t.n, [image.blocks[i] for i in perm])

    def linear(c):
        kind, a, b, t, u, k = c
        tu = TangentModel(kind, t.n, [[x + k * y for x, y in zip(p, q)] for p, q in zip(t.blocks, u.blocks)])
        lhs = phi_apply(kind, a, tu)
        pa, pu = phi_apply(kind, a, t), phi_apply(kind, a, u)
        rhs = TangentModel(kind, t.n, [[x + k * y for x, y in zip(p, q)] for p, q in zip(pa.blocks, pu.blocks)])
        ab = phi_apply(kind, a + b, t)
        pb = phi_apply(kind, b, t)
        sum_ab = TangentModel(kind, t.n, [[x + y for x, y in zip(p, q)] for p, q in zip(pa.blocks, pb.blocks)])
        return lhs == rhs and ab == sum_ab

    def multiplicative(c):
        kind, a, b, t, _, _ = c
        return phi_apply(kind, a, phi_apply(kind, b, t)) == phi_apply(kind, even_mul(a, b), t)

    rec.sample("clifford.phi-unit", 50, case, unit_ok, show)
    rec.sample("clifford.phi-diagonal", 100, case, diagonal, show)
    rec.sample("clifford.phi-linear", 100, case, linear, show)
    rec.sample("clifford.phi-multiplicative", 100, case, multiplicative, show)

    def rank5_relations():
        imgs = {}
        for s, t in combinations(range(1, 6), 2):
            imgs[(s, t)] = phi_block_matrix("rank5", e(5, (s, t)))
        ident = ExactMatrix.identity(8)
        for (a, b), m in imgs.items():
            if m @ m != -ident:
                return False
            for (c, d), n in imgs.items():
                if len({a, b, c, d}) == 4 and m @ n != n @ m:
                    return False
                if len({a, b, c, d}) == 3 and not (m @ n + n @ m).is_zero():
                    return False
        return True

    rec.check("clifford.rank5-pair-relations", rank5_relations())


# cohomology ------------------------------------------------------------------------------------------


def _coeffs(series) -> dict:
    return {str(d): c for d, c in series.coefficients}


def _suite_cohomology(rec: _Recorder, rng: random.Random):
    free = GradedRingPresentation([("x", 2)], [])
    rec.check("cohomology.free-one-generator", hilbert_series(free, 6) == PoincarePolynomial.from_list([1, 1, 1, 1], 2))

    def free_ring():
        degs = [rng.choice((2, 4, 6, 8)) for _ in range(rng.randint(1, 4))]
        return degs, rng.randint(0, 24)

    def product_of_geometric(c):
        degs, top = c
        p = GradedRingPresentation([(f"x{i}", d) for i, d in enumerate(degs)], [])
        coeffs = [1] + [0] * top
        for d in degs:
            for k in range(d, top + 1):
                coeffs[k] += coeffs[k - d]
        return [hilbert_series(p, top).coefficient(k) for k in range(top + 1)] == coeffs

    rec.sample("cohomology.free-ring-series", 50, free_ring, product_of_geometric, lambda c: c)

    for space in ("gr8r10", "gr4c6", "gr2h4", "gr8r12", "gr8r16", "gr8perp-r16"):
        res = compute_space(space)
        ref = REFERENCE_SERIES[space]
        info = {"presentation_used": res.presentation_used}
        if res.attempts:
            info["attempts"] = {k: v for k, v in res.attempts}
        rec.check(
            f"cohomology.series.{space}",
            res.matches_reference,
            {"computed": _coeffs(res.series), "printed": _coeffs(ref)},
            info,
        )
    expected_chi = {"gr8r12": 30, "gr8r16": 140, "gr8perp-r16": 16}
    for space, chi in expected_chi.items():
        got = compute_space(space).euler_characteristic
        rec.check(f"cohomology.euler.{space}", got == chi, {"computed": got, "printed": chi})

    bad = []
    for n in range(0, 8):
        for k in range(0, n + 1):
            g = gaussian_binomial(n, k, 2)
            if g != gaussian_binomial(n, n - k, 2) or not g.is_palindromic():
                bad.append([n, k])
    rec.check("cohomology.gaussian-symmetric-palindromic", not bad, bad)
    rec.check("cohomology.gaussian-k0", gaussian_binomial(5, 0, 4).as_dict() == {0: 1})

    p16 = builtin_presentation("gr8r16-variant")
    inv = involution_invariant_series(p16, PERP_INVOLUTION, 32)
    anti = involution_invariant_series(p16, PERP_INVOLUTION, 32, sign=-1)
    full = hilbert_series(p16, 32)
    rec.check(
        "cohomology.invariant-plus-anti",
        all(inv.coefficient(d) + anti.coefficient(d) == full.coefficient(d) for d in range(33)),
        {"invariant": _coeffs(inv), "anti": _coeffs(anti), "full": _coeffs(full)},
    )
    p10 = builtin_presentation("gr8r10")
    rec.check("cohomology.identity-involution", involution_invariant_series(p10, RingInvolution.identity(), 16) == hilbert_series(p10, 16))

    names = p16.names
    def mono(**exps):
        return tuple(exps.get(n, 0) for n in names)
    classes = [{mono(p1=2): 1}, {mono(e=1): 1, mono(e_perp=1): 1}]
    span = quotient_span_dimension(p16, classes)
    rec.check(
        "cohomology.degree8-invariants-spanned",
        span == inv.coefficient(8) == 2,
        {"span": span, "invariant_dimension": inv.coefficient(8)},
    )
    s12 = REFERENCE_SERIES["gr8r12"]
    rec.check("cohomology.palindromic-completion", euler_characteristic(s12, 32) == s12(1) == 30)


_RUNNERS = {
    "exact": _suite_exact,
    "octonion": _suite_octonion,
    "spin8": _suite_spin8,
    "triality": _suite_triality,
    "spin6": _suite_spin6,
    "spin5": _suite_spin5,
    "clifford": _suite_clifford,
    "cohomology": _suite_cohomology,
}


def run_suite(name: str, seed: int | None = None) -> VerificationReport:
    """Run one named suite, or every suite in order for ``"all"``."""
    seed = default_seed() if seed is None else seed
    if name == "all":
        start = time.perf_counter()
        report = VerificationReport("all", seed)
        for suite in SUITES:
            report.checks.extend(run_suite(suite, seed).checks)
        report.elapsed = time.perf_counter() - start
        return report
    if name not in _RUNNERS:
        raise PreconditionError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")
    # each suite gets its own stream so results do not depend on which ran before
    rng = random.Random(f"{name}:{seed}")
    rec = _Recorder(name, seed)
    start = time.perf_counter()
    _RUNNERS[name](rec, rng)
    rec.report.elapsed = time.perf_counter() - start
    return rec.report
