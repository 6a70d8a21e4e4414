"""Slow, obviously-correct reference implementations used only by the tests.

None of these share code with the package: they work on plain lists.
"""

from fractions import Fraction
from itertools import combinations


def naive_rank(rows):
    """Textbook Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


# quaternions as 4-lists, octonions as 8-lists -------------------------------------

_QTABLE = {
    # (x, y) -> (sign, z) for basis units 0=1, 1=i, 2=j, 3=k
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
}


def qmul(p, q):
    out = [Fraction(0)] * 4
    for a in range(4):
        for b in range(4):
            if a == 0:
                sign, c = 1, b
            elif b == 0:
                sign, c = 1, a
            else:
                sign, c = _QTABLE[(a, b)]
            out[c] += sign * p[a] * q[b]
    return out


def qconj(p):
    return [p[0], -p[1], -p[2], -p[3]]


def omul(x, y):
    """(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)) on 8-lists."""
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    first = [s - t for s, t in zip(qmul(a, c), qmul(qconj(d), b))]
    second = [s + t for s, t in zip(qmul(d, a), qmul(b, qconj(c)))]
    return first + second


def unit(s, n=8):
    return [Fraction(int(i == s)) for i in range(n)]


# Clifford words ----------------------------------------------------------------------


def reduce_word(word):
    """Bubble-sort a generator word with e_s e_t = -e_t e_s and e_s^2 = -1."""
    w, sign = list(word), 1
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                sign = -sign
                changed = True
            elif w[i] == w[i + 1]:
                del w[i:i + 2]
                sign = -sign
                changed = True
                break
    return sign, tuple(w)


# counting ---------------------------------------------------------------------------------


def box_partitions(n, k):
    """Coefficients of [n choose k]_q: partitions in a k x (n-k) box, by size."""
    counts = {}
    for sub in combinations(range(n), k):
        size = sum(s - i for i, s in enumerate(sub))
        counts[size] = counts.get(size, 0) + 1
    return counts


def monomials(degrees, d):
    if not degrees:
        return [()] if d == 0 else []
    out = []
    for a in range(d // degrees[0] + 1):
        out += [(a,) + t for t in monomials(degrees[1:], d - a * degrees[0])]
    return out
