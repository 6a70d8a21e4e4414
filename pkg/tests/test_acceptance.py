"""Acceptance criteria, one test each, all exact.

Every test prints a single ``PASS``/``FAIL`` line, visible in ``pytest -v``
output.  ``python tests/test_acceptance.py`` prints the same lines without
pytest.
"""

import random
import subprocess
import sys

import pytest

from cliffgrass import fixtures
from cliffgrass.clifford import lambda2_image_check, morphism_check
from cliffgrass.cohomology import REFERENCE_SERIES, compute_space
from cliffgrass.errors import NotComplexLinearError, NotInSpin8Error
from cliffgrass.exact import ExactMatrix, span_dimension
from cliffgrass.octonion import (
    OCTONION_BASIS,
    Octonion,
    Quaternion,
    orthogonal_identity_check,
    quat_left_matrix,
    quat_right_matrix,
    random_octonion,
    random_orthogonal_pair,
    right_mult_matrix,
)
from cliffgrass.spin import (
    build_m_u,
    clifford_products,
    clifford_system,
    commutes_with_j,
    complexify,
    compose_system,
    lie_closure_report,
    m_u_generators,
    spin7delta_basis,
    spin8_basis,
    triality_companion,
)

SEED = 42


def _rows(m):
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in m.to_rows()) + "]"


def _mismatch(label, computed, printed):
    return f"{label}: computed {_rows(computed)} printed {_rows(printed)}"


def criterion_1():
    """Fixture reproduction."""
    o = Octonion.basis
    bad, counts = [], {}

    def compare(group, label, computed, printed):
        counts[group] = counts.get(group, 0) + 1
        if computed != printed:
            bad.append(_mismatch(f"{group} {label}", computed, printed))

    for u in OCTONION_BASIS:
        compare("top", f"m_{u}", build_m_u(u), fixtures.M_U[u])
    for g in spin8_basis():
        compare("J1", g.name, g.matrix, fixtures.M_UV[g.label])
    for u in OCTONION_BASIS[1:]:
        compare("right", f"R_{u}", right_mult_matrix(o(u)), fixtures.R[u])
    for (a, b), blk in fixtures.R2.items():
        compare("(21)", f"R_{{{a},{b}}}", right_mult_matrix(o(a)) @ right_mult_matrix(o(b)), blk)
    for (lam, mu), printed in fixtures.RL.items():
        computed = quat_right_matrix(Quaternion.basis(lam)) @ quat_left_matrix(Quaternion.basis(mu))
        compare("RL", f"RH_{lam} LH_{mu}", computed, printed)
    cs8 = clifford_system("spin8")
    for u, m in zip(cs8.labels, cs8.involutions):
        compare("IO", f"I_{u}", m, fixtures.INVOLUTIONS[u])
    cs6 = clifford_system("spin6")
    for u, m in zip(cs6.labels, cs6.involutions):
        compare("prop6", f"I_{u}", m, fixtures.INVOLUTIONS[u])
    cs5 = clifford_system("spin5")
    for a, m in zip(cs5.labels, cs5.involutions):
        compare("IH", f"sigma_{a}", m, fixtures.SIGMA[a])
    for g in compose_system(cs5):
        compare("Jspin51", g.name, g.matrix, fixtures.SIGMA2[g.label])
    detail = ", ".join(f"{k} {v}" for k, v in counts.items())
    return not bad, f"compared {sum(counts.values())} matrices ({detail})", bad


def criterion_2():
    """Clifford relations on basis and random pairs; the orthogonal octonion identity."""
    rng = random.Random(SEED)
    ident = ExactMatrix.identity(16)
    bad = []
    gens = {u: build_m_u(u) for u in OCTONION_BASIS}
    for u in OCTONION_BASIS:
        for v in OCTONION_BASIS:
            if gens[u] @ gens[v] + gens[v] @ gens[u] != ident.scale(-2 * Octonion.basis(u).inner(Octonion.basis(v))):
                bad.append(f"basis pair ({u}, {v})")
    for trial in range(500):
        u, v = random_octonion(rng, 5), random_octonion(rng, 5)
        mu, mv = build_m_u(u), build_m_u(v)
        if mu @ mv + mv @ mu != ident.scale(-2 * u.inner(v)):
            bad.append(f"random pair {trial}: {u.to_json()} {v.to_json()}")
    for trial in range(500):
        u, v = random_orthogonal_pair(rng)
        z = random_octonion(rng)
        if not orthogonal_identity_check(z, u, v):
            bad.append(f"triple {trial}: z={z.to_json()} u={u.to_json()} v={v.to_json()}")
    return not bad, "64 basis pairs, 500 random pairs, 500 orthogonal triples", bad


def criterion_3():
    """The eight m_u generate M_16(R)."""
    dim = span_dimension(clifford_products([g.matrix for g in m_u_generators()]))
    return dim == 256, f"span of products = {dim}", [] if dim == 256 else [f"dimension {dim} != 256"]


def criterion_4():
    """Lie closure of the four generator families."""
    cases = [
        ("spin8", [g.matrix for g in spin8_basis()], 28),
        ("spin_delta(7)", [g.matrix for g in spin7delta_basis()], 21),
        ("rank-6 compositions", [g.matrix for g in compose_system(clifford_system("spin6"))], 15),
        ("sigma compositions", [g.matrix for g in compose_system(clifford_system("spin5"))], 10),
    ]
    bad, parts = [], []
    for name, mats, dim in cases:
        rep = lie_closure_report(mats)
        parts.append(f"{name} {{{rep.dimension}, {'closed' if rep.closed else 'open'}}}")
        if rep.dimension != dim or not rep.closed:
            bad.append(f"{name}: dimension {rep.dimension}, failures {rep.failures}")
    return not bad, "; ".join(parts), bad


def criterion_5():
    """Unique skew triality companions; exactly the 21 imaginary pairs have m+ = m-."""
    bad, equal = [], []
    for g in spin8_basis():
        try:
            t = triality_companion(g.matrix)
        except NotInSpin8Error as exc:
            bad.append(f"{g.name}: {exc}")
            continue
        if not (t.is_skew() and t.satisfies_relation()):
            bad.append(f"{g.name}: companion fails the relation")
        if t.m_plus == t.m_minus:
            equal.append(g.name)
    expected = [g.name for g in spin7delta_basis()]
    if equal != expected:
        bad.append(f"m+ = m- for {equal}")
    return not bad, f"28 companions, {len(equal)} with m+ = m-", bad


def criterion_6():
    """Complexification of the six J-linear operators; m_g, m_h excluded."""
    bad = []
    for u, printed in fixtures.COMPLEX.items():
        if not commutes_with_j(build_m_u(u)):
            bad.append(f"m_{u} does not commute with J")
        if complexify(right_mult_matrix(Octonion.basis(u))) != printed:
            bad.append(f"complexified R_{u} differs from the printed matrix")
    for u in "gh":
        try:
            complexify(build_m_u(u))
            bad.append(f"m_{u} was accepted")
        except NotComplexLinearError:
            pass
    return not bad, "6 complexified, m_g and m_h rejected", bad


def criterion_7():
    """Even Clifford morphism for all ranks, n = 1, 2, 3, and skew Lambda^2 images."""
    bad = []
    for kind in ("rank8", "rank6", "rank5"):
        for n in (1, 2, 3):
            if not morphism_check(kind, n):
                bad.append(f"morphism {kind} n={n}")
            rep = lambda2_image_check(kind, n)
            if not rep.passed:
                bad.append(f"lambda2 {kind} n={n}: {rep.violations}")
    return not bad, "9 morphism checks, 9 Lambda^2 checks", bad


def _coeff_str(series):
    return ",".join(f"{c}@{d}" for d, c in series.coefficients)


def criterion_8():
    """Poincare polynomials and Euler characteristics."""
    bad, parts = [], []
    for space, chi in (("gr8r10", None), ("gr4c6", None), ("gr2h4", None), ("gr8r12", 30), ("gr8r16", 140), ("gr8perp-r16", 16)):
        res = compute_space(space)
        tag = space
        if res.attempts:
            tag += f" [{res.presentation_used}; " + ", ".join(f"{k} {'matches' if v else 'differs'}" for k, v in res.attempts) + "]"
        if not res.matches_reference:
            bad.append(f"{space}: computed {_coeff_str(res.series)}, printed {_coeff_str(REFERENCE_SERIES[space])}")
        if chi is not None and res.euler_characteristic != chi:
            bad.append(f"{space}: chi computed {res.euler_characteristic}, printed {chi}")
        parts.append(tag)
    return not bad, "; ".join(parts), bad


def _verify_json():
    cmd = [sys.executable, "-m", "cliffgrass", "verify", "--suite", "all", "--seed", str(SEED)]
    return subprocess.run(cmd, capture_output=True, timeout=1200).stdout


def criterion_9():
    """Two verify runs with the same seed are byte-identical."""
    first, second = _verify_json(), _verify_json()
    ok = bool(first) and first == second
    return ok, f"{len(first)} bytes, identical={first == second}", [] if ok else ["reports differ or are empty"]


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


def _line(number, ok, summary):
    return f"{'PASS' if ok else 'FAIL'}  criterion {number}: {summary}"


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    ok, summary, problems = CRITERIA[number - 1]()
    with capsys.disabled():
        print()
        print(_line(number, ok, summary))
        for p in problems:
            print(f"      {p}")
    assert ok, "\n".join(problems)


if __name__ == "__main__":
    failed = 0
    for number, fn in enumerate(CRITERIA, 1):
        ok, summary, problems = fn()
        print(_line(number, ok, summary))
        for p in problems:
            print(f"      {p}")
        failed += not ok
    sys.exit(1 if failed else 0)
