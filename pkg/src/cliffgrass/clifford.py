"""Even Clifford algebras Cl^0_r and the morphism phi on Grassmannian tangent models.

Cl^0_r is modelled abstractly: an element is a rational combination of
even-cardinality subsets ``S = {s1 < ... < s2k}`` of ``{1..r}``, standing for
``e_{s1} ... e_{s2k}`` with ``e_s e_t = -e_t e_s`` and ``e_s^2 = -1``.

phi sends a generator pair ``e_s e_t`` to a fixed endomorphism of one fibre
block and acts diagonally on the ``n`` blocks of the tangent model:

* rank8: ``m_{u_s, u_t}`` on ``O + O`` (16x16), ``u`` in 1, i, j, k, e, f, g, h
* rank6: the same for the first six generators, on the realified ``C^4 + C^4``
* rank5: ``-sigma_s sigma_t`` on ``H + H`` (8x8)

The rank5 sign is forced by ``e_s^2 = -1``: since ``sigma_s^2 = +1``, only
``e_s e_t -> -sigma_s sigma_t`` respects ``(e1 e2)(e2 e3) = -e1 e3``.  The
octonionic images already have the form ``-I_s I_t`` for involutions ``I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, PreconditionError, ValidationError
from .exact import ExactMatrix, GaussComplex, Scalar, Subspace, as_rational, rational_to_str
from .octonion import OCTONION_BASIS, Octonion, Quaternion
from .spin import build_m_uv, clifford_system

RANK_OF_KIND = {"rank8": 8, "rank6": 6, "rank5": 5}
BLOCK_DIM = {"rank8": 16, "rank6": 16, "rank5": 8}

Subset = tuple[int, ...]


def _check_rank(r: int) -> int:
    if r not in (8, 6, 5):
        raise PreconditionError(f"unsupported rank {r}; expected 8, 6 or 5")
    return r


def _check_kind(kind: str) -> int:
    if kind not in RANK_OF_KIND:
        raise PreconditionError(f"unknown structure kind {kind!r}")
    return RANK_OF_KIND[kind]


@lru_cache(maxsize=None)
def _even_basis(r: int) -> tuple[Subset, ...]:
    return tuple(
        s for size in range(0, r + 1, 2) for s in combinations(range(1, r + 1), size)
    )


def even_basis(r: int) -> list[Subset]:
    """Even subsets of {1..r}, by size then lexicographically; 2^(r-1) of them."""
    return list(_even_basis(_check_rank(r)))


def blade_product(s: Subset, t: Subset) -> tuple[int, Subset]:
    """(sign, subset) with e_S e_T = sign * e_{S xor T}, using e_s^2 = -1."""
    inversions = 0
    for a in s:
        for b in t:
            if a > b:
                inversions += 1
    common = len(set(s) & set(t))
    sign = -1 if (inversions + common) % 2 else 1
    return sign, tuple(sorted(set(s) ^ set(t)))


class EvenCliffordElement:
    """Immutable element of Cl^0_r."""

    __slots__ = ("_rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Iterable[int], Scalar | str] = ()):
        self._rank = _check_rank(rank)
        clean: dict[Subset, Fraction] = {}
        for subset, coeff in dict(terms).items():
            key = tuple(sorted(subset))
            if len(set(key)) != len(key) or len(key) % 2:
                raise ValidationError(f"{key} is not an even subset of distinct generators")
            if key and (key[0] < 1 or key[-1] > rank):
                raise ValidationError(f"{key} is not a subset of 1..{rank}")
            c = clean.get(key, Fraction(0)) + as_rational(coeff)
            clean[key] = c
        self._terms = tuple(sorted((k, v) for k, v in clean.items() if v))

    @classmethod
    def unit(cls, rank: int) -> "EvenCliffordElement":
        return cls(rank, {(): 1})

    @classmethod
    def blade(cls, rank: int, subset: Iterable[int], coeff: Scalar = 1) -> "EvenCliffordElement":
        """The signed product of generators listed in ``subset``, in the given order."""
        word = list(subset)
        sign, canon = 1, ()
        for s in word:
            # multiply by a single generator on the right
            inv = sum(1 for a in canon if a > s)
            if s in canon:
                inv += 1
            sign *= -1 if inv % 2 else 1
            canon = tuple(sorted(set(canon) ^ {s}))
        if len(word) % 2:
            raise ValidationError("an odd word is not in the even Clifford algebra")
        return cls(rank, {canon: sign * as_rational(coeff)})

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def terms(self) -> dict[Subset, Fraction]:
        return dict(self._terms)

    def __mul__(self, other):
        if isinstance(other, EvenCliffordElement):
            return even_mul(self, other)
        c = as_rational(other)
        return EvenCliffordElement(self._rank, {k: c * v for k, v in self._terms})

    def __rmul__(self, c):
        return self * c

    def __add__(self, other: "EvenCliffordElement") -> "EvenCliffordElement":
        if other._rank != self._rank:
            raise DimensionMismatchError("rank mismatch")
        acc = dict(self._terms)
        for k, v in other._terms:
            acc[k] = acc.get(k, Fraction(0)) + v
        return EvenCliffordElement(self._rank, acc)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, EvenCliffordElement):
            return NotImplemented
        return self._rank == other._rank and self._terms == other._terms

    def __hash__(self):
        return hash((self._rank, self._terms))

    def __repr__(self):
        if not self._terms:
            return f"EvenCliffordElement({self._rank}, 0)"
        parts = []
        for k, v in self._terms:
            blade = "".join(f"e{s}" for s in k) or "1"
            parts.append(f"{rational_to_str(v)}*{blade}")
        return f"EvenCliffordElement({self._rank}, {' + '.join(parts)})"

    def to_json(self) -> list[dict]:
        return [{"subset": list(k), "coeff": rational_to_str(v)} for k, v in self._terms]

    @classmethod
    def from_json(cls, rank: int, obj) -> "EvenCliffordElement":
        if not isinstance(obj, list):
            raise ValidationError("an even Clifford element is a JSON list of terms")
        acc: dict[Subset, Fraction] = {}
        for term in obj:
            try:
                key = tuple(int(s) for s in term["subset"])
                coeff = term["coeff"]
            except (KeyError, TypeError, ValueError) as exc:
                raise ValidationError("terms need 'subset' (ints) and 'coeff' ('p/q')") from exc
            if not isinstance(coeff, str):
                raise ValidationError("coefficients are 'p/q' strings")
            if tuple(sorted(key)) != key:
                raise ValidationError(f"subset {list(key)} is not canonically ordered")
            acc[key] = acc.get(key, Fraction(0)) + as_rational(coeff)
        return cls(rank, acc)


def even_mul(a: EvenCliffordElement, b: EvenCliffordElement) -> EvenCliffordElement:
    if a.rank != b.rank:
        raise DimensionMismatchError(f"rank mismatch: {a.rank} vs {b.rank}")
    acc: dict[Subset, Fraction] = {}
    for s, x in a._terms:
        for t, y in b._terms:
            sign, u = blade_product(s, t)
            acc[u] = acc.get(u, Fraction(0)) + sign * x * y
    return EvenCliffordElement(a.rank, acc)


# tangent models -------------------------------------------------------------------


@dataclass(frozen=True)
class TangentModel:
    """n fibre blocks of O+O (rank8), realified C^4+C^4 (rank6) or H+H (rank5)."""

    kind: str
    n: int
    blocks: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        _check_kind(self.kind)
        blocks = tuple(tuple(as_rational(x) for x in b) for b in self.blocks)
        if self.n < 1 or len(blocks) != self.n:
            raise DimensionMismatchError(f"expected {self.n} blocks, got {len(blocks)}")
        dim = BLOCK_DIM[self.kind]
        if any(len(b) != dim for b in blocks):
            raise DimensionMismatchError(f"{self.kind} blocks have dimension {dim}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_octonion_pairs(cls, pairs: Sequence[tuple[Octonion, Octonion]]) -> "TangentModel":
        return cls("rank8", len(pairs), [x.coords + y.coords for x, y in pairs])

    @classmethod
    def from_complex_pairs(
        cls, pairs: Sequence[tuple[Sequence[GaussComplex], Sequence[GaussComplex]]]
    ) -> "TangentModel":
        blocks = []
        for z, w in pairs:
            zs = [GaussComplex.coerce(c) for c in list(z) + list(w)]
            if len(zs) != 8:
                raise DimensionMismatchError("rank6 blocks are pairs of complex 4-vectors")
            blocks.append([x for c in zs for x in (c.re, c.im)])
        return cls("rank6", len(pairs), blocks)

    @classmethod
    def from_quaternion_pairs(cls, pairs: Sequence[tuple[Quaternion, Quaternion]]) -> "TangentModel":
        return cls("rank5", len(pairs), [p.coords + q.coords for p, q in pairs])

    @property
    def dimension(self) -> int:
        return self.n * BLOCK_DIM[self.kind]

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for b in self.blocks for x in b)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "blocks": [[rational_to_str(x) for x in b] for b in self.blocks],
        }

    @classmethod
    def from_json(cls, obj) -> "TangentModel":
        try:
            kind, n, blocks = obj["kind"], int(obj["n"]), obj["blocks"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError("tangent model JSON needs 'kind', 'n' and 'blocks'") from exc
        if not all(isinstance(x, str) for b in blocks for x in b):
            raise ValidationError("block entries must be 'p/q' strings")
        return cls(kind, n, blocks)


# phi ----------------------------------------------------------------------------

PairImages = Callable[[int, int], ExactMatrix]


@lru_cache(maxsize=None)
def pair_image(kind: str, s: int, t: int) -> ExactMatrix:
    """phi(e_s e_t) on one fibre block, 1 <= s < t <= rank."""
    r = _check_kind(kind)
    if not 1 <= s < t <= r:
        raise PreconditionError(f"generator pair ({s}, {t}) outside 1..{r}")
    if kind == "rank5":
        sigma = clifford_system("spin5").involutions
        return -(sigma[s - 1] @ sigma[t - 1])
    return build_m_uv(OCTONION_BASIS[s - 1], OCTONION_BASIS[t - 1])


def _blade_matrix(kind: str, subset: Subset, images: PairImages) -> ExactMatrix:
    m = ExactMatrix.identity(BLOCK_DIM[kind])
    for a, b in zip(subset[::2], subset[1::2]):
        m = m @ images(a, b)
    return m


@lru_cache(maxsize=None)
def _blade_matrix_cached(kind: str, subset: Subset) -> ExactMatrix:
    return _blade_matrix(kind, subset, lambda a, b: pair_image(kind, a, b))


def phi_block_matrix(kind: str, elem: EvenCliffordElement) -> ExactMatrix:
    """phi(elem) on a single fibre block."""
    r = _check_kind(kind)
    if elem.rank != r:
        raise DimensionMismatchError(f"{kind} needs a rank {r} element, got rank {elem.rank}")
    dim = BLOCK_DIM[kind]
    out = ExactMatrix.zeros(dim, dim)
    for subset, coeff in elem.terms.items():
        out = out + _blade_matrix_cached(kind, subset).scale(coeff)
    return out


def model_operator(kind: str, elem: EvenCliffordElement, n: int) -> ExactMatrix:
    """phi(elem) on the whole model R^{16n} or R^{8n}: n diagonal copies."""
    if n < 1:
        raise PreconditionError("need n >= 1")
    block = phi_block_matrix(kind, elem)
    return ExactMatrix.block_diag(*([block] * n))


def phi_apply(kind: str, elem: EvenCliffordElement, t: TangentModel) -> TangentModel:
    if t.kind != kind:
        raise DimensionMismatchError(f"model of kind {t.kind} given for {kind}")
    m = phi_block_matrix(kind, elem)
    return TangentModel(kind, t.n, [m.apply(b) for b in t.blocks])


# checks -------------------------------------------------------------------------


@dataclass(frozen=True)
class Lambda2Report:
    kind: str
    n: int
    dimension: int
    pairs_checked: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def lambda2_image_check(kind: str, n: int) -> Lambda2Report:
    """Every e_s e_t must act on the full model as a skew complex structure."""
    r = _check_kind(kind)
    if n < 1:
        raise PreconditionError("need n >= 1")
    dim = n * BLOCK_DIM[kind]
    ident = ExactMatrix.identity(dim)
    violations = []
    pairs = list(combinations(range(1, r + 1), 2))
    for s, t in pairs:
        m = model_operator(kind, EvenCliffordElement(r, {(s, t): 1}), n)
        problems = []
        if m.T != -m:
            problems.append("not skew")
        if m @ m != -ident:
            problems.append("square is not -Id")
        if problems:
            violations.append(f"e{s}e{t}: {', '.join(problems)}")
    return Lambda2Report(kind, n, dim, len(pairs), tuple(violations))


def morphism_defects(kind: str, n: int, images: PairImages | None = None) -> list[tuple[Subset, Subset]]:
    """Pairs (S, T) of even blades with phi(e_S) phi(e_T) != phi(e_S e_T)."""
    r = _check_kind(kind)
    if n < 1:
        raise PreconditionError("need n >= 1")
    basis = _even_basis(r)
    if images is None:
        blocks = {s: _blade_matrix_cached(kind, s) for s in basis}
    else:
        blocks = {s: _blade_matrix(kind, s, images) for s in basis}
    full = {s: ExactMatrix.block_diag(*([m] * n)) for s, m in blocks.items()}
    defects = []
    for s in basis:
        a = full[s]
        for t in basis:
            sign, u = blade_product(s, t)
            expected = full[u] if sign > 0 else -full[u]
            if a @ full[t] != expected:
                defects.append((s, t))
    return defects


def even_image_dimension(kind: str, n: int = 1) -> int:
    r = _check_kind(kind)
    return Subspace(
        model_operator(kind, EvenCliffordElement(r, {s: 1}), n).vectorize() for s in _even_basis(r)
    ).dimension


def morphism_check(kind: str, n: int) -> bool:
    if morphism_defects(kind, n):
        return False
    if kind == "rank8" and n == 1:
        # two half-spinor blocks of the even part of Cl(R^8) = M_16(R)
        return even_image_dimension(kind, n) == 128
    return True
