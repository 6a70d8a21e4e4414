"""Quaternions and octonions over the rationals.

Octonions use the ordered real basis ``1, i, j, k, e, f, g, h`` and are
stored as a pair ``(a, b)`` of quaternions, ``a`` on ``1, i, j, k`` and
``b`` on ``e, f, g, h``.  The product is the Cayley-Dickson rule

    (a, b)(c, d) = (ac - conj(d) b,  d a + b conj(c))

which is the convention under which right multiplication by ``e`` is the
block matrix ``[[0, -Id], [Id, 0]]`` and right multiplication by ``f`` is
``[[0, L_i], [L_i, 0]]`` (``L_i`` = left multiplication by ``i`` on H).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, PreconditionError, ValidationError
from .exact import ExactMatrix, Scalar, as_rational, rational_to_str

QUATERNION_BASIS = ("1", "i", "j", "k")
OCTONION_BASIS = ("1", "i", "j", "k", "e", "f", "g", "h")


def _coords(values: Sequence[Scalar | str], n: int) -> tuple[Fraction, ...]:
    values = tuple(as_rational(x) for x in values)
    if len(values) != n:
        raise DimensionMismatchError(f"expected {n} coordinates, got {len(values)}")
    return values


@dataclass(frozen=True)
class Quaternion:
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", _coords(coords, 4))

    @classmethod
    def basis(cls, name: str | int) -> "Quaternion":
        idx = QUATERNION_BASIS.index(name) if isinstance(name, str) else name
        return cls([int(s == idx) for s in range(4)])

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion([x * as_rational(other) for x in self.coords])
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return Quaternion(
            (
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        )

    def __rmul__(self, c):
        return Quaternion([as_rational(c) * x for x in self.coords])

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion([x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion([x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> "Quaternion":
        return Quaternion([-x for x in self.coords])

    def conj(self) -> "Quaternion":
        a0, a1, a2, a3 = self.coords
        return Quaternion((a0, -a1, -a2, -a3))

    def norm_sq(self) -> Fraction:
        return sum((x * x for x in self.coords), Fraction(0))


@dataclass(frozen=True)
class Octonion:
    coords: tuple[Fraction, ...]

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", _coords(coords, 8))

    @classmethod
    def basis(cls, name: str | int) -> "Octonion":
        idx = OCTONION_BASIS.index(name) if isinstance(name, str) else name
        return cls([int(s == idx) for s in range(8)])

    @classmethod
    def zero(cls) -> "Octonion":
        return cls([0] * 8)

    @classmethod
    def from_pair(cls, a: Quaternion, b: Quaternion) -> "Octonion":
        return cls(a.coords + b.coords)

    @property
    def pair(self) -> tuple[Quaternion, Quaternion]:
        return Quaternion(self.coords[:4]), Quaternion(self.coords[4:])

    @property
    def real(self) -> Fraction:
        return self.coords[0]

    def is_imaginary(self) -> bool:
        return self.coords[0] == 0

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        c = as_rational(other)
        return Octonion([c * x for x in self.coords])

    def __rmul__(self, c):
        c = as_rational(c)
        return Octonion([c * x for x in self.coords])

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion([x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion([x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> "Octonion":
        return Octonion([-x for x in self.coords])

    def conj(self) -> "Octonion":
        return oct_conj(self)

    def norm_sq(self) -> Fraction:
        return oct_norm_sq(self)

    def inner(self, other: "Octonion") -> Fraction:
        return inner(self, other)

    def __str__(self):
        terms = []
        for name, x in zip(OCTONION_BASIS, self.coords):
            if x:
                terms.append(rational_to_str(x) if name == "1" else f"{rational_to_str(x)}{name}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[str]:
        return [rational_to_str(x) for x in self.coords]

    @classmethod
    def from_json(cls, obj) -> "Octonion":
        if not isinstance(obj, list) or not all(isinstance(x, str) for x in obj):
            raise ValidationError("an octonion is a JSON array of 8 'p/q' strings")
        return cls(obj)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    a, b = x.pair
    c, d = y.pair
    return Octonion.from_pair(a * c - d.conj() * b, d * a + b * c.conj())


def oct_conj(x: Octonion) -> Octonion:
    return Octonion((x.coords[0],) + tuple(-t for t in x.coords[1:]))


def oct_norm_sq(x: Octonion) -> Fraction:
    return sum((t * t for t in x.coords), Fraction(0))


def inner(u: Octonion, v: Octonion) -> Fraction:
    """Euclidean inner product of coordinate vectors."""
    return sum((s * t for s, t in zip(u.coords, v.coords)), Fraction(0))


def _operator_matrix(images: list[tuple[Fraction, ...]]) -> ExactMatrix:
    n = len(images)
    return ExactMatrix.from_sparse(
        n, n, {(r, c): images[c][r] for c in range(n) for r in range(n) if images[c][r]}
    )


def right_mult_matrix(u: Octonion) -> ExactMatrix:
    """Matrix of x -> x u; column s is the image of the s-th basis octonion."""
    return _operator_matrix([(Octonion.basis(s) * u).coords for s in range(8)])


def left_mult_matrix(u: Octonion) -> ExactMatrix:
    """Matrix of x -> u x."""
    return _operator_matrix([(u * Octonion.basis(s)).coords for s in range(8)])


def quat_right_matrix(q: Quaternion) -> ExactMatrix:
    return _operator_matrix([(Quaternion.basis(s) * q).coords for s in range(4)])


def quat_left_matrix(q: Quaternion) -> ExactMatrix:
    return _operator_matrix([(q * Quaternion.basis(s)).coords for s in range(4)])


def orthogonal_identity_check(z: Octonion, u: Octonion, v: Octonion) -> bool:
    """Whether (z conj(v)) u == -(z conj(u)) v; requires <u, v> = 0."""
    if inner(u, v) != 0:
        raise PreconditionError(f"u and v are not orthogonal: <u,v> = {inner(u, v)}")
    return (z * v.conj()) * u == -((z * u.conj()) * v)


# random exact samples ---------------------------------------------------------


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_octonion(rng: random.Random, bound: int = 9) -> Octonion:
    return Octonion([random_rational(rng, bound) for _ in range(8)])


def unit_from_stereographic(t: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Rational point on the unit sphere S^n from a point of Q^n."""
    t = [as_rational(x) for x in t]
    s = sum((x * x for x in t), Fraction(0))
    return ((1 - s) / (1 + s),) + tuple(2 * x / (1 + s) for x in t)


def random_unit_octonion(rng: random.Random, imaginary: bool = False, bound: int = 5) -> Octonion:
    if imaginary:
        p = unit_from_stereographic([random_rational(rng, bound) for _ in range(6)])
        return Octonion((0,) + p)
    return Octonion(unit_from_stereographic([random_rational(rng, bound) for _ in range(7)]))


def random_orthogonal_pair(rng: random.Random, bound: int = 9) -> tuple[Octonion, Octonion]:
    """A random pair with <u, v> = 0, via one exact Gram-Schmidt step."""
    while True:
        u = random_octonion(rng, bound)
        if u.norm_sq():
            break
    w = random_octonion(rng, bound)
    v = w - u * (inner(w, u) / u.norm_sq())
    return u, v


def random_orthonormal_pair(rng: random.Random) -> tuple[Octonion, Octonion]:
    """Unit u and v = w u with w a unit imaginary octonion, so <u, v> = 0."""
    u = random_unit_octonion(rng)
    w = random_unit_octonion(rng, imaginary=True)
    return u, w * u
