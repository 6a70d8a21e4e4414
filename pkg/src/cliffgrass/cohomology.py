"""Hilbert series of graded quotient rings and the Grassmannian presentations.

A presentation is a weighted polynomial ring over Q with homogeneous
relations.  The degree-d piece of the quotient has dimension

    #(monomials of degree d) - rank(ideal slice in degree d)

where the ideal slice is spanned by (monomial) x (relation) products.  No
Groebner bases: each slice is one exact sparse elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DualityViolationError, PreconditionError, ValidationError
from .exact import Scalar, Subspace, as_rational

Monomial = tuple[int, ...]
Poly = dict  # Monomial -> Fraction


@dataclass(frozen=True)
class PoincarePolynomial:
    """Finitely supported integer series in t.

    ``truncation`` is the degree through which the coefficients are known;
    None means the polynomial is complete.
    """

    coefficients: tuple[tuple[int, int], ...]
    truncation: int | None = None

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = (), truncation=None):
        items = dict(coefficients)
        for d, c in items.items():
            if d < 0 or c < 0 or int(c) != c:
                raise ValidationError(f"bad coefficient {c} at degree {d}")
        object.__setattr__(self, "coefficients", tuple(sorted((int(d), int(c)) for d, c in items.items() if c)))
        object.__setattr__(self, "truncation", truncation)

    @classmethod
    def from_list(cls, values: Sequence[int], step: int = 1, truncation=None) -> "PoincarePolynomial":
        return cls({step * i: c for i, c in enumerate(values)}, truncation)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)

    def coefficient(self, d: int) -> int:
        return self.as_dict().get(d, 0)

    @property
    def degree(self) -> int:
        return self.coefficients[-1][0] if self.coefficients else 0

    def __call__(self, t: Scalar) -> Fraction:
        t = as_rational(t)
        return sum((c * t**d for d, c in self.coefficients), Fraction(0))

    def through(self, d: int) -> "PoincarePolynomial":
        return PoincarePolynomial({k: c for k, c in self.coefficients if k <= d}, d)

    def is_palindromic(self, top: int | None = None) -> bool:
        top = self.degree if top is None else top
        b = self.as_dict()
        return all(b.get(d, 0) == b.get(top - d, 0) for d in range(top + 1))

    def __eq__(self, other):
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for d, c in self.coefficients:
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            parts.append(mono if c == 1 and d else (str(c) if d == 0 else f"{c}{mono}"))
        s = " + ".join(parts)
        return s + (" + ..." if self.truncation is not None else "")


@dataclass(frozen=True)
class GradedRingPresentation:
    generators: tuple[tuple[str, int], ...]
    relations: tuple[tuple[tuple[Monomial, Fraction], ...], ...]
    name: str = ""

    def __init__(self, generators: Sequence[tuple[str, int]], relations: Iterable[Mapping[Monomial, Scalar]] = (), name: str = ""):
        gens = tuple((str(n), int(d)) for n, d in generators)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise ValidationError("generator names must be distinct")
        if any(d <= 0 for _, d in gens):
            raise ValidationError("generator degrees must be positive")
        degs = [d for _, d in gens]
        rels = []
        for rel in relations:
            clean = {}
            for mono, c in dict(rel).items():
                mono = tuple(int(a) for a in mono)
                if len(mono) != len(gens) or any(a < 0 for a in mono):
                    raise ValidationError(f"monomial {mono} does not fit {len(gens)} generators")
                c = as_rational(c)
                if c:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c}
            if not clean:
                continue
            weights = {sum(a * d for a, d in zip(m, degs)) for m in clean}
            if len(weights) != 1:
                raise ValidationError(f"relation is not homogeneous (degrees {sorted(weights)})")
            rels.append(tuple(sorted(clean.items())))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", tuple(rels))
        object.__setattr__(self, "name", name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.generators)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def degree_of(self, mono: Monomial) -> int:
        return sum(a * d for a, d in zip(mono, self.degrees))

    def relation_degree(self, rel) -> int:
        return self.degree_of(rel[0][0])

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        return _monomials(self.degrees, d)


@lru_cache(maxsize=None)
def _monomials(degrees: tuple[int, ...], d: int) -> tuple[Monomial, ...]:
    if not degrees:
        return ((),) if d == 0 else ()
    first, rest = degrees[0], degrees[1:]
    out = []
    for a in range(d // first, -1, -1):
        for tail in _monomials(rest, d - a * first):
            out.append((a,) + tail)
    return tuple(out)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _ideal_rows(p: GradedRingPresentation, d: int) -> Iterable[dict[int, Fraction]]:
    index = {m: i for i, m in enumerate(p.monomials(d))}
    for rel in p.relations:
        rd = p.relation_degree(rel)
        if rd > d:
            continue
        for m in p.monomials(d - rd):
            yield {index[_mono_mul(m, r)]: c for r, c in rel}


@lru_cache(maxsize=256)
def ideal_slice(p: GradedRingPresentation, d: int) -> Subspace:
    """Exact span of the degree-d part of the relation ideal, in monomial coordinates."""
    return Subspace(_ideal_rows(p, d))


def _check_degree(max_degree: int):
    if max_degree < 0:
        raise PreconditionError("max_degree must be >= 0")


def hilbert_series(p: GradedRingPresentation, max_degree: int) -> PoincarePolynomial:
    _check_degree(max_degree)
    coeffs = {}
    for d in range(max_degree + 1):
        coeffs[d] = len(p.monomials(d)) - ideal_slice(p, d).dimension
    return PoincarePolynomial(coeffs, max_degree)


def _poly_vector(p: GradedRingPresentation, poly: Mapping[Monomial, Scalar]) -> tuple[int, dict[int, Fraction]]:
    degrees = {p.degree_of(m) for m, c in poly.items() if c}
    if len(degrees) != 1:
        raise ValidationError("expected a nonzero homogeneous polynomial")
    d = degrees.pop()
    index = {m: i for i, m in enumerate(p.monomials(d))}
    return d, {index[m]: as_rational(c) for m, c in poly.items() if c}


def quotient_span_dimension(p: GradedRingPresentation, polys: Sequence[Mapping[Monomial, Scalar]]) -> int:
    """Dimension of the span of the classes of homogeneous polys of one degree."""
    vectors = [_poly_vector(p, q) for q in polys]
    if len({d for d, _ in vectors}) > 1:
        raise ValidationError("polynomials of different degrees")
    space = ideal_slice(p, vectors[0][0]).copy()
    base = space.dimension
    for _, v in vectors:
        space.add(v)
    return space.dimension - base


# involutions ---------------------------------------------------------------------


@dataclass(frozen=True)
class RingInvolution:
    """Generator substitution name -> sign * name'."""

    mapping: tuple[tuple[str, int, str], ...]

    def __init__(self, mapping: Mapping[str, tuple[int, str] | str]):
        items = []
        for src, tgt in dict(mapping).items():
            sign, name = (1, tgt) if isinstance(tgt, str) else tgt
            if sign not in (1, -1):
                raise ValidationError("involution signs must be +1 or -1")
            items.append((src, sign, name))
        object.__setattr__(self, "mapping", tuple(sorted(items)))

    @classmethod
    def identity(cls) -> "RingInvolution":
        return cls({})

    @classmethod
    def swap(cls, pairs: Iterable[tuple[str, str]]) -> "RingInvolution":
        m = {}
        for a, b in pairs:
            m[a] = b
            m[b] = a
        return cls(m)

    def table(self, p: GradedRingPresentation) -> list[tuple[int, int]]:
        """Per generator index: (sign, target index); unlisted generators are fixed."""
        lookup = {src: (sign, tgt) for src, sign, tgt in self.mapping}
        unknown = set(lookup) - set(p.names) | {t for _, t in lookup.values()} - set(p.names)
        if unknown:
            raise ValidationError(f"involution names unknown generators {sorted(unknown)}")
        out = []
        for i, (name, deg) in enumerate(p.generators):
            sign, tgt = lookup.get(name, (1, name))
            j = p.index(tgt)
            if p.degrees[j] != deg:
                raise ValidationError(f"involution changes the degree of {name}")
            out.append((sign, j))
        for i, (sign, j) in enumerate(out):
            sign2, k = out[j]
            if k != i or sign * sign2 != 1:
                raise ValidationError(f"substitution is not an involution on {p.names[i]}")
        return out

    def act(self, p: GradedRingPresentation, mono: Monomial, table=None) -> tuple[int, Monomial]:
        table = self.table(p) if table is None else table
        out = [0] * len(mono)
        sign = 1
        for i, a in enumerate(mono):
            if a:
                s, j = table[i]
                out[j] += a
                if s < 0 and a % 2:
                    sign = -sign
        return sign, tuple(out)

    def act_poly(self, p: GradedRingPresentation, poly: Mapping[Monomial, Scalar]) -> Poly:
        table = self.table(p)
        out: Poly = {}
        for m, c in poly.items():
            s, m2 = self.act(p, m, table)
            out[m2] = out.get(m2, Fraction(0)) + s * as_rational(c)
        return {m: c for m, c in out.items() if c}


def check_involution(p: GradedRingPresentation, inv: RingInvolution, max_degree: int) -> None:
    """Raise ValidationError unless inv maps the ideal into itself through max_degree.

    It is enough to test the relations: the image of (monomial x relation) is
    +- (monomial) x (image of relation).
    """
    for rel in p.relations:
        d = p.relation_degree(rel)
        if d > max_degree:
            continue
        _, vec = _poly_vector(p, inv.act_poly(p, dict(rel)))
        if not ideal_slice(p, d).contains(vec):
            raise ValidationError(f"involution does not preserve the ideal in degree {d}")


def involution_invariant_series(
    p: GradedRingPresentation, inv: RingInvolution, max_degree: int, sign: int = 1
) -> PoincarePolynomial:
    """Graded dimensions of the (sign)-eigenspace of inv on the quotient ring."""
    _check_degree(max_degree)
    if sign not in (1, -1):
        raise PreconditionError("sign must be +1 or -1")
    check_involution(p, inv, max_degree)
    table = inv.table(p)
    coeffs = {}
    for d in range(max_degree + 1):
        monos = p.monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        space = ideal_slice(p, d).copy()
        base = space.dimension
        for i, m in enumerate(monos):
            s, m2 = inv.act(p, m, table)
            vec = {i: Fraction(1)}
            j = index[m2]
            vec[j] = vec.get(j, Fraction(0)) + sign * s
            space.add({k: v for k, v in vec.items() if v})
        coeffs[d] = space.dimension - base
    return PoincarePolynomial(coeffs, max_degree)


# Euler characteristic and q-binomials ----------------------------------------------


def complete_by_duality(series: PoincarePolynomial, full_dimension: int) -> PoincarePolynomial:
    if full_dimension < 0:
        raise PreconditionError("full_dimension must be >= 0")
    half = full_dimension // 2
    if series.truncation is not None and series.truncation < half:
        raise PreconditionError(
            f"series known through degree {series.truncation}, need {half} for duality completion"
        )
    known = series.as_dict()
    if any(d > full_dimension for d in known):
        raise DualityViolationError(f"nonzero coefficient above the dimension {full_dimension}")
    limit = full_dimension if series.truncation is None else series.truncation
    out = {}
    for d in range(full_dimension + 1):
        low = min(d, full_dimension - d)
        b = known.get(low, 0)
        if d <= limit and known.get(d, 0) != b:
            raise DualityViolationError(
                f"b_{d} = {known.get(d, 0)} but b_{full_dimension - d} = {known.get(full_dimension - d, 0)}"
            )
        out[d] = b
    return PoincarePolynomial(out)


def euler_characteristic(series: PoincarePolynomial, full_dimension: int) -> int:
    """Alternating sum of the duality-completed Betti numbers."""
    full = complete_by_duality(series, full_dimension)
    return sum((-1) ** d * c for d, c in full.coefficients)


def gaussian_binomial(n: int, k: int, weight: int) -> PoincarePolynomial:
    """[n choose k]_q as a polynomial in t with q = t^weight."""
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got n={n}, k={k}")
    if weight <= 0 or weight % 2:
        raise PreconditionError("weight must be a positive even integer")
    # Pascal rule [n, k] = [n-1, k-1] + q^k [n-1, k] on coefficient lists in q
    row = [[1]]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = row[j - 1] if j >= 1 else []
            right = row[j] if j < m else []
            size = max(len(left), len(right) + j)
            c = [0] * size
            for i, x in enumerate(left):
                c[i] += x
            for i, x in enumerate(right):
                c[i + j] += x
            new.append(c)
        row = new
    return PoincarePolynomial.from_list(row[k], step=weight)


# built-in spaces ---------------------------------------------------------------------


def _pres_poly(names: Sequence[str], terms: Mapping[tuple[tuple[str, int], ...], Scalar]) -> Poly:
    out: Poly = {}
    for factors, c in terms.items():
        mono = [0] * len(names)
        for name, a in factors:
            mono[names.index(name)] += a
        mono = tuple(mono)
        out[mono] = out.get(mono, Fraction(0)) + as_rational(c)
    return out


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for m, x in a.items():
        for n, y in b.items():
            k = _mono_mul(m, n)
            out[k] = out.get(k, Fraction(0)) + x * y
    return {m: c for m, c in out.items() if c}


def whitney_relations(
    generators: Sequence[tuple[str, int]],
    left: Sequence[tuple[tuple[str, int], ...]],
    right: Sequence[tuple[tuple[str, int], ...]],
) -> list[Poly]:
    """Positive-degree homogeneous components of (1 + sum left)(1 + sum right) - 1.

    Each term is a monomial given as ((name, exponent), ...).
    """
    names = [n for n, _ in generators]
    degs = dict(generators)
    a = _pres_poly(names, {(): 1, **{t: 1 for t in left}})
    b = _pres_poly(names, {(): 1, **{t: 1 for t in right}})
    prod = _poly_mul(a, b)
    by_degree: dict[int, Poly] = {}
    for m, c in prod.items():
        d = sum(x * degs[n] for x, n in zip(m, names))
        if d:
            by_degree.setdefault(d, {})[m] = c
    return [by_degree[d] for d in sorted(by_degree)]


def _x(name: str, a: int = 1) -> tuple[tuple[str, int], ...]:
    return ((name, a),)


def _gr8r10() -> GradedRingPresentation:
    gens = [("e", 8), ("e_perp", 2)]
    names = [n for n, _ in gens]
    rho5 = _pres_poly(names, {(("e", 1), ("e_perp", 1)): 1})
    rho8 = _pres_poly(names, {_x("e", 2): 1, _x("e_perp", 8): -1})
    return GradedRingPresentation(gens, [rho5, rho8], "gr8r10")


_GR8R16_GENS = [
    ("e", 8), ("p1", 4), ("p2", 8), ("p3", 12),
    ("e_perp", 8), ("p1_perp", 4), ("p2_perp", 8), ("p3_perp", 12),
]


def _gr8r16(with_euler_squares: bool) -> GradedRingPresentation:
    gens = _GR8R16_GENS
    names = [n for n, _ in gens]
    left = [_x("p1"), _x("p2"), _x("p3")]
    right = [_x("p1_perp"), _x("p2_perp"), _x("p3_perp")]
    if with_euler_squares:
        left.append(_x("e", 2))
        right.append(_x("e_perp", 2))
    euler = _pres_poly(names, {(("e", 1), ("e_perp", 1)): 1})
    rels = [euler] + whitney_relations(gens, left, right)
    return GradedRingPresentation(gens, rels, "gr8r16-variant" if with_euler_squares else "gr8r16")


def _gr8r12() -> GradedRingPresentation:
    gens = [("p1", 4), ("p2", 8), ("p3", 12), ("e", 8), ("p1_perp", 4), ("e_perp", 4)]
    names = [n for n, _ in gens]
    euler = _pres_poly(names, {(("e", 1), ("e_perp", 1)): 1})
    left = [_x("p1"), _x("p2"), _x("p3"), _x("e", 2)]
    right = [_x("p1_perp"), _x("e_perp", 2)]
    return GradedRingPresentation(gens, [euler] + whitney_relations(gens, left, right), "gr8r12")


PERP_INVOLUTION = RingInvolution.swap(
    [("e", "e_perp"), ("p1", "p1_perp"), ("p2", "p2_perp"), ("p3", "p3_perp")]
)


@dataclass(frozen=True)
class GaussianOracle:
    n: int
    k: int
    weight: int

    def series(self) -> PoincarePolynomial:
        return gaussian_binomial(self.n, self.k, self.weight)


@dataclass(frozen=True)
class InvariantQuotient:
    """Cohomology of a Z_2 quotient: the invariant part under an involution."""

    candidates: tuple[str, ...]
    involution: RingInvolution


FULL_DIMENSION = {
    "gr8r10": 16,
    "gr4c6": 16,
    "gr2h4": 16,
    "gr8r12": 32,
    "gr8r16": 64,
    "gr8r16-variant": 64,
    "gr8perp-r16": 64,
}

# Poincare polynomials as printed; the last two are printed through t^32 only.
REFERENCE_SERIES = {
    "gr8r10": PoincarePolynomial.from_list([1, 1, 1, 1, 2, 1, 1, 1, 1], step=2),
    "gr4c6": PoincarePolynomial.from_list([1, 1, 2, 2, 3, 2, 2, 1, 1], step=2),
    "gr2h4": PoincarePolynomial.from_list([1, 1, 2, 1, 1], step=4),
    "gr8r12": PoincarePolynomial.from_list([1, 2, 4, 5, 6, 5, 4, 2, 1], step=4),
    "gr8r16": PoincarePolynomial.from_list([1, 1, 4, 5, 9, 11, 15, 15, 18], step=4, truncation=32),
    "gr8perp-r16": PoincarePolynomial.from_list([1, 0, 2, 0, 2, 0, 2, 0, 2], step=4, truncation=32),
}
REFERENCE_SERIES["gr8r16-variant"] = REFERENCE_SERIES["gr8r16"]

SPACES = tuple(FULL_DIMENSION)


def builtin_presentation(space_id: str):
    """Presentation, Gaussian-binomial oracle or invariant-quotient descriptor."""
    if space_id == "gr8r10":
        return _gr8r10()
    if space_id == "gr4c6":
        return GaussianOracle(6, 2, 2)
    if space_id == "gr2h4":
        return GaussianOracle(4, 2, 4)
    if space_id == "gr8r12":
        return _gr8r12()
    if space_id == "gr8r16":
        return _gr8r16(False)
    if space_id == "gr8r16-variant":
        return _gr8r16(True)
    if space_id == "gr8perp-r16":
        return InvariantQuotient(("gr8r16", "gr8r16-variant"), PERP_INVOLUTION)
    raise PreconditionError(f"unknown space {space_id!r}; expected one of {SPACES}")


@dataclass(frozen=True)
class SpaceResult:
    space: str
    series: PoincarePolynomial
    euler_characteristic: int | None
    presentation_used: str
    matches_reference: bool
    attempts: tuple[tuple[str, bool], ...] = ()

    def to_json(self) -> dict:
        out = {
            "space": self.space,
            "coefficients": {str(d): c for d, c in self.series.coefficients},
            "euler_characteristic": self.euler_characteristic,
            "presentation_used": self.presentation_used,
            "matches_reference": self.matches_reference,
        }
        if self.attempts:
            out["attempts"] = {name: ok for name, ok in self.attempts}
        return out


def _matches(space_id: str, series: PoincarePolynomial) -> bool:
    ref = REFERENCE_SERIES[space_id]
    top = series.truncation if series.truncation is not None else series.degree
    if ref.truncation is not None:
        top = min(top, ref.truncation)
    return series.through(top) == ref.through(top)


def _kind(space_id: str) -> str:
    return "variant" if space_id.endswith("-variant") else "literal"


def compute_space(space_id: str, max_degree: int | None = None) -> SpaceResult:
    """Poincare data of a built-in space.

    For presentations with more than one candidate (Gr_8(R^16) and its
    quotient) every candidate is computed and the first one reproducing the
    printed polynomial is reported.
    """
    desc = builtin_presentation(space_id)
    full = FULL_DIMENSION[space_id]
    if max_degree is None:
        ref = REFERENCE_SERIES[space_id]
        max_degree = full if ref.truncation is None else ref.truncation
    _check_degree(max_degree)

    def euler(series):
        if max_degree < full // 2:
            return None
        return euler_characteristic(series, full)

    if isinstance(desc, GaussianOracle):
        series = desc.series().through(max_degree)
        return SpaceResult(space_id, series, euler(series), "oracle", _matches(space_id, series))
    if isinstance(desc, InvariantQuotient):
        attempts = []
        chosen = None
        for cand in desc.candidates:
            series = involution_invariant_series(builtin_presentation(cand), desc.involution, max_degree)
            ok = _matches(space_id, series)
            attempts.append((_kind(cand), ok))
            if ok and chosen is None:
                chosen = (cand, series)
        cand, series = chosen if chosen else (desc.candidates[-1], series)
        return SpaceResult(space_id, series, euler(series), _kind(cand), chosen is not None, tuple(attempts))
    if space_id == "gr8r16":
        attempts = []
        chosen = None
        for cand in ("gr8r16", "gr8r16-variant"):
            series = hilbert_series(builtin_presentation(cand), max_degree)
            ok = _matches(space_id, series)
            attempts.append((_kind(cand), ok))
            if ok and chosen is None:
                chosen = (cand, series)
        cand, series = chosen if chosen else ("gr8r16-variant", series)
        return SpaceResult(space_id, series, euler(series), _kind(cand), chosen is not None, tuple(attempts))
    series = hilbert_series(desc, max_degree)
    return SpaceResult(space_id, series, euler(series), _kind(space_id), _matches(space_id, series))
