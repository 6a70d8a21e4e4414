"""Exact rational scalars, Gaussian rationals and dense exact matrices.

Everything here is exact: there is no floating point and no tolerance.
Matrices are immutable values.  They present a dense row-major interface
but only store their nonzero entries, because almost every matrix in this
package is a signed permutation matrix or a small sum of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    DimensionMismatchError,
    NoSolutionError,
    NotUniqueError,
    PreconditionError,
    ValidationError,
)

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "as_rational",
    "rational_to_str",
    "rational_from_str",
    "GaussComplex",
    "ExactMatrix",
    "Subspace",
    "OperatorFlags",
    "rank_exact",
    "span_dimension",
    "commutator",
    "classify_operator",
    "solve_exact",
]


def as_rational(x: Scalar | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rational_from_str(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_to_str(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    s = s.strip()
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not an exact rational 'p/q' string: {s!r}") from exc


def _norm(v: Scalar) -> Scalar:
    # Integral values are kept as int: int arithmetic is much faster.
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


@dataclass(frozen=True)
class GaussComplex:
    """An element re + i*im of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @classmethod
    def coerce(cls, x: "GaussComplex | Scalar") -> "GaussComplex":
        return x if isinstance(x, GaussComplex) else cls(as_rational(x), Fraction(0))

    def __add__(self, other):
        other = GaussComplex.coerce(other)
        return GaussComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussComplex.coerce(other)
        return GaussComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussComplex.coerce(other) - self

    def __neg__(self):
        return GaussComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussComplex.coerce(other)
        return GaussComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussComplex":
        return GaussComplex(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussComplex.coerce(other)
        if not isinstance(other, GaussComplex):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return rational_to_str(self.re)
        if self.re == 0:
            return f"{rational_to_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{rational_to_str(self.re)}{sign}{rational_to_str(abs(self.im))}i"


class ExactMatrix:
    """Immutable matrix of exact rationals.

    >>> m = ExactMatrix.from_rows([[1, 2], [3, 4]])
    >>> (m @ ExactMatrix.identity(2)) == m
    True
    """

    __slots__ = ("_rows", "_cols", "_nz", "_byrow", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar | str]):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError("negative matrix shape")
        values = [as_rational(x) for x in entries]
        if len(values) != rows * cols:
            raise DimensionMismatchError(
                f"{len(values)} entries for a {rows}x{cols} matrix"
            )
        nz = {}
        for idx, v in enumerate(values):
            if v:
                nz[divmod(idx, cols)] = _norm(v)
        self._init(rows, cols, nz)

    def _init(self, rows, cols, nz):
        for name, value in (("_rows", rows), ("_cols", cols), ("_nz", nz), ("_byrow", None), ("_hash", None)):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def _from_nz(cls, rows: int, cols: int, nz: dict) -> "ExactMatrix":
        # nz must already be normalized and zero-free; it is adopted, not copied
        m = cls.__new__(cls)
        m._init(rows, cols, nz)
        return m

    # construction -----------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar | str]]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls._from_nz(rows, rows if cols is None else cols, {})

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._from_nz(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_sparse(
        cls, rows: int, cols: int, items: Mapping[tuple[int, int], Scalar]
    ) -> "ExactMatrix":
        nz = {}
        for (i, j), v in items.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatchError(f"index {(i, j)} outside {rows}x{cols}")
            v = as_rational(v)
            if v:
                nz[(i, j)] = _norm(v)
        return cls._from_nz(rows, cols, nz)

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["ExactMatrix | int"]]) -> "ExactMatrix":
        """Assemble a block matrix; the integer 0 stands for a zero block."""
        heights = []
        for brow in grid:
            h = {b.rows for b in brow if isinstance(b, ExactMatrix)}
            if len(h) != 1:
                raise DimensionMismatchError("inconsistent block row heights")
            heights.append(h.pop())
        ncols_blocks = len(grid[0])
        if any(len(brow) != ncols_blocks for brow in grid):
            raise DimensionMismatchError("ragged block grid")
        widths = []
        for c in range(ncols_blocks):
            w = {brow[c].cols for brow in grid if isinstance(brow[c], ExactMatrix)}
            if len(w) != 1:
                raise DimensionMismatchError("inconsistent block column widths")
            widths.append(w.pop())
        nz = {}
        r0 = 0
        for brow, h in zip(grid, heights):
            c0 = 0
            for b, w in zip(brow, widths):
                if isinstance(b, ExactMatrix):
                    for (i, j), v in b._nz.items():
                        nz[(r0 + i, c0 + j)] = v
                elif b != 0:
                    raise ValidationError("only the integer 0 may stand in for a block")
                c0 += w
            r0 += h
        return cls._from_nz(sum(heights), sum(widths), nz)

    @classmethod
    def block_diag(cls, *ms: "ExactMatrix") -> "ExactMatrix":
        nz = {}
        r0 = c0 = 0
        for m in ms:
            for (i, j), v in m._nz.items():
                nz[(r0 + i, c0 + j)] = v
            r0 += m.rows
            c0 += m.cols
        return cls._from_nz(r0, c0, nz)

    # access -----------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        get = self._nz.get
        return tuple(
            Fraction(get((i, j), 0)) for i in range(self._rows) for j in range(self._cols)
        )

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(index)
        return Fraction(self._nz.get((i, j), 0))

    def to_rows(self) -> list[list[Fraction]]:
        e = self.entries
        c = self._cols
        return [list(e[i * c:(i + 1) * c]) for i in range(self._rows)]

    def nonzero_items(self) -> Iterator[tuple[tuple[int, int], Scalar]]:
        return iter(self._nz.items())

    @property
    def nnz(self) -> int:
        return len(self._nz)

    def is_zero(self) -> bool:
        return not self._nz

    def submatrix(self, r0: int, c0: int, nrows: int, ncols: int) -> "ExactMatrix":
        if r0 < 0 or c0 < 0 or r0 + nrows > self._rows or c0 + ncols > self._cols:
            raise DimensionMismatchError("submatrix outside the matrix")
        nz = {
            (i - r0, j - c0): v
            for (i, j), v in self._nz.items()
            if r0 <= i < r0 + nrows and c0 <= j < c0 + ncols
        }
        return ExactMatrix._from_nz(nrows, ncols, nz)

    def vectorize(self) -> dict[int, Scalar]:
        """Row-major vectorization as a sparse {index: value} mapping."""
        c = self._cols
        return {i * c + j: v for (i, j), v in self._nz.items()}

    def apply(self, vec: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(vec) != self._cols:
            raise DimensionMismatchError(f"vector of length {len(vec)} for {self.shape} matrix")
        out = [0] * self._rows
        for (i, j), v in self._nz.items():
            x = vec[j]
            if x:
                out[i] += v * x
        return tuple(Fraction(x) for x in out)

    # arithmetic -------------------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix"):
        if not isinstance(other, ExactMatrix):
            raise TypeError("expected an ExactMatrix")
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        nz = dict(self._nz)
        for k, v in other._nz.items():
            x = nz.get(k, 0) + v
            if x:
                nz[k] = _norm(x)
            else:
                del nz[k]
        return ExactMatrix._from_nz(self._rows, self._cols, nz)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._from_nz(self._rows, self._cols, {k: -v for k, v in self._nz.items()})

    def scale(self, c: Scalar) -> "ExactMatrix":
        c = _norm(as_rational(c))
        if not c:
            return ExactMatrix.zeros(self._rows, self._cols)
        return ExactMatrix._from_nz(
            self._rows, self._cols, {k: _norm(c * v) for k, v in self._nz.items()}
        )

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def _row_index(self):
        if self._byrow is None:
            byrow: dict[int, list] = {}
            for (i, j), v in self._nz.items():
                byrow.setdefault(i, []).append((j, v))
            object.__setattr__(self, "_byrow", byrow)
        return self._byrow

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self._cols != other._rows:
            raise DimensionMismatchError(f"cannot compose {self.shape} with {other.shape}")
        orows = other._row_index()
        out: dict = {}
        get = out.get
        for (i, k), a in self._nz.items():
            r = orows.get(k)
            if r:
                for j, b in r:
                    key = (i, j)
                    out[key] = get(key, 0) + a * b
        nz = {k: _norm(v) for k, v in out.items() if v}
        return ExactMatrix._from_nz(self._rows, other._cols, nz)

    def __pow__(self, n: int) -> "ExactMatrix":
        if not self.is_square or n < 0:
            raise DimensionMismatchError("powers need a square matrix and n >= 0")
        result = ExactMatrix.identity(self._rows)
        for _ in range(n):
            result = result @ self
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._from_nz(
            self._cols, self._rows, {(j, i): v for (i, j), v in self._nz.items()}
        )

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    # comparison -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._nz == other._nz

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._rows, self._cols, frozenset(self._nz.items()))))
        return self._hash

    def __repr__(self):
        if self._rows * self._cols > 64:
            return f"ExactMatrix({self._rows}x{self._cols}, nnz={len(self._nz)})"
        return f"ExactMatrix.from_rows({[[rational_to_str(x) for x in r] for r in self.to_rows()]})"

    def pretty(self) -> str:
        cells = [[rational_to_str(x) for x in r] for r in self.to_rows()]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self._rows,
            "cols": self._cols,
            "entries": [rational_to_str(x) for x in self.entries],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "ExactMatrix":
        try:
            rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError("matrix JSON needs 'rows', 'cols' and 'entries'") from exc
        if not all(isinstance(e, str) for e in entries):
            raise ValidationError("matrix entries must be 'p/q' strings")
        return cls(rows, cols, entries)


# --------------------------------------------------------------------------
# fraction-free sparse elimination


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _integer_row(vec: Mapping[int, Scalar]) -> dict[int, int]:
    den = 1
    for v in vec.values():
        if type(v) is Fraction:
            d = v.denominator
            den = den * d // gcd(den, d)
    row = {}
    for k, v in vec.items():
        if v:
            x = v * den
            row[k] = x.numerator if type(x) is Fraction else int(x)
    return _primitive(row)


class Subspace:
    """Exact span of sparse rational vectors, kept in row-echelon form.

    Rows are stored with integer entries and reduced by fraction-free
    combination ``p*row - a*pivot`` followed by removal of the content, so
    no rational division ever happens during elimination.
    """

    __slots__ = ("_pivots",)

    def __init__(self, vectors: Iterable[Mapping[int, Scalar]] = ()):
        self._pivots: dict[int, dict[int, int]] = {}
        for v in vectors:
            self.add(v)

    @property
    def dimension(self) -> int:
        return len(self._pivots)

    def __len__(self):
        return len(self._pivots)

    def copy(self) -> "Subspace":
        s = Subspace()
        s._pivots = dict(self._pivots)
        return s

    def _reduce(self, row: dict[int, int]) -> tuple[dict[int, int], int | None]:
        pivots = self._pivots
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                return row, lead
            a = row[lead]
            p = prow[lead]
            g = gcd(a, p)
            ma, mp = p // g, a // g
            new = {k: ma * v for k, v in row.items()} if ma != 1 else dict(row)
            for k, v in prow.items():
                x = new.get(k, 0) - mp * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row, None

    def add(self, vec: Mapping[int, Scalar]) -> bool:
        """Insert a vector; return True iff the dimension grew."""
        row, lead = self._reduce(_integer_row(vec))
        if lead is None:
            return False
        self._pivots[lead] = row
        return True

    def contains(self, vec: Mapping[int, Scalar]) -> bool:
        row, lead = self._reduce(_integer_row(vec))
        return lead is None


def rank_exact(m: ExactMatrix) -> int:
    rows: dict[int, dict[int, Scalar]] = {}
    for (i, j), v in m.nonzero_items():
        rows.setdefault(i, {})[j] = v
    space = Subspace()
    for i in sorted(rows):
        space.add(rows[i])
    return space.dimension


def _uniform_shape(ms: Sequence[ExactMatrix]) -> tuple[int, int]:
    if not ms:
        raise PreconditionError("need at least one matrix")
    shape = ms[0].shape
    for m in ms:
        if m.shape != shape:
            raise DimensionMismatchError(f"shapes {shape} and {m.shape} differ")
    return shape


def span_dimension(ms: Sequence[ExactMatrix]) -> int:
    _uniform_shape(ms)
    return Subspace(m.vectorize() for m in ms).dimension


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if not (a.is_square and b.is_square) or a.shape != b.shape:
        raise DimensionMismatchError(f"commutator of {a.shape} and {b.shape}")
    return a @ b - b @ a


@dataclass(frozen=True)
class OperatorFlags:
    orthogonal: bool
    symmetric: bool
    skew: bool
    involution: bool
    complex_structure: bool

    def names(self) -> frozenset[str]:
        return frozenset(k for k, v in self.__dict__.items() if v)


def classify_operator(m: ExactMatrix) -> OperatorFlags:
    if not m.is_square:
        raise DimensionMismatchError(f"classify_operator needs a square matrix, got {m.shape}")
    ident = ExactMatrix.identity(m.rows)
    t = m.T
    orthogonal = t @ m == ident
    square = m @ m
    return OperatorFlags(
        orthogonal=orthogonal,
        symmetric=t == m,
        skew=t == -m,
        involution=square == ident,
        complex_structure=orthogonal and square == -ident,
    )


def solve_exact(a: ExactMatrix, b: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Unique solution of a @ x = b, by exact Gauss-Jordan elimination."""
    if len(b) != a.rows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {a.shape}")
    n = a.cols
    rows: list[list[Fraction]] = [[Fraction(0)] * n + [as_rational(x)] for x in b]
    for (i, j), v in a.nonzero_items():
        rows[i][j] = Fraction(v)
    pivot_rows = []
    remaining = rows
    for col in range(n):
        piv = next((r for r in remaining if r[col]), None)
        if piv is None:
            raise NotUniqueError(f"column {col} has no pivot: solution is not unique")
        inv = 1 / piv[col]
        piv[:] = [x * inv if x else x for x in piv]
        nxt = []
        for r in remaining:
            if r is piv:
                continue
            f = r[col]
            if f:
                r[:] = [x - f * y if y else x for x, y in zip(r, piv)]
            nxt.append(r)
        for r in pivot_rows:
            f = r[col]
            if f:
                r[:] = [x - f * y if y else x for x, y in zip(r, piv)]
        pivot_rows.append(piv)
        remaining = nxt
    if any(r[n] for r in remaining):
        raise NoSolutionError("inconsistent linear system")
    return tuple(r[n] for r in pivot_rows)
