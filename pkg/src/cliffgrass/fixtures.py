"""Reference matrices, transcribed by hand.

These are golden fixtures for the verification suites and the tests.  No
builder imports this module: every constructed matrix comes from the
octonion product, and this file is only ever compared against.

Blocks are written in their reference layout: quaternionic 4x4 operators
``RH_*`` / ``LH_*``, their printed products ``RL[(lam, mu)]``, and 8x8 or
16x16 block layouts assembled from them.
"""

from __future__ import annotations

from .exact import ExactMatrix, GaussComplex

_M = ExactMatrix.from_rows
_B = ExactMatrix.blocks

ID4 = ExactMatrix.identity(4)
ID8 = ExactMatrix.identity(8)

# right / left multiplication on H in the basis 1, i, j, k
RH = {
    "i": _M([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
    "j": _M([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    "k": _M([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]),
}
LH = {
    "i": _M([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    "j": _M([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
    "k": _M([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
}

# the nine printed products RH_lam LH_mu
RL = {
    ("i", "i"): _M([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
    ("i", "j"): _M([[0, 0, 0, -1], [0, 0, -1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]),
    ("i", "k"): _M([[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]]),
    ("j", "i"): _M([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]),
    ("j", "j"): _M([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    ("j", "k"): _M([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    ("k", "i"): _M([[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
    ("k", "j"): _M([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]),
    ("k", "k"): _M([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
}

# right multiplications on O = H + H e, as 2x2 blocks of quaternionic operators
R = {
    "1": ID8,
    "i": _B([[RH["i"], 0], [0, -RH["i"]]]),
    "j": _B([[RH["j"], 0], [0, -RH["j"]]]),
    "k": _B([[RH["k"], 0], [0, -RH["k"]]]),
    "e": _B([[0, -ID4], [ID4, 0]]),
    "f": _B([[0, LH["i"]], [LH["i"], 0]]),
    "g": _B([[0, LH["j"]], [LH["j"], 0]]),
    "h": _B([[0, LH["k"]], [LH["k"], 0]]),
}


def _off(a):
    return _B([[0, a], [-a, 0]])


def _rl(lam, mu):
    return RH[lam] @ LH[mu]


# the 21 compositions R_{lam,mu} = R_lam R_mu, lam < mu imaginary.  Products
# written "RH_lam LH_mu" in these blocks are the compositions of the printed
# RH / LH operators, not the separately printed RL values (three of those carry
# the opposite sign, which the RL fixture check reports).  The printed label
# "R_{ef}" is read as R_{e,f}.
R2 = {
    ("i", "j"): _B([[-RH["k"], 0], [0, -RH["k"]]]),
    ("i", "k"): _B([[RH["j"], 0], [0, RH["j"]]]),
    ("i", "e"): _B([[0, -RH["i"]], [-RH["i"], 0]]),
    ("i", "f"): _off(_rl("i", "i")),
    ("i", "g"): _off(_rl("i", "j")),
    ("i", "h"): _off(_rl("i", "k")),
    ("j", "k"): _B([[-RH["i"], 0], [0, -RH["i"]]]),
    ("j", "e"): _B([[0, -RH["j"]], [-RH["j"], 0]]),
    ("j", "f"): _off(_rl("j", "i")),
    ("j", "g"): _off(_rl("j", "j")),
    ("j", "h"): _off(_rl("j", "k")),
    ("k", "e"): _B([[0, -RH["k"]], [-RH["k"], 0]]),
    ("k", "f"): _off(_rl("k", "i")),
    ("k", "g"): _off(_rl("k", "j")),
    ("k", "h"): _off(_rl("k", "k")),
    ("e", "f"): _B([[-LH["i"], 0], [0, LH["i"]]]),
    ("e", "g"): _B([[-LH["j"], 0], [0, LH["j"]]]),
    ("e", "h"): _B([[-LH["k"], 0], [0, LH["k"]]]),
    ("f", "g"): _B([[LH["k"], 0], [0, LH["k"]]]),
    ("f", "h"): _B([[-LH["j"], 0], [0, -LH["j"]]]),
    ("g", "h"): _B([[LH["i"], 0], [0, LH["i"]]]),
}

# the eight complex structures m_u on O + O
M_U = {"1": _B([[0, ID8], [-ID8, 0]])}
for _u in "ijkefgh":
    M_U[_u] = _B([[0, R[_u]], [R[_u], 0]])

# the 28 compositions m_{u,v}
M_UV = {}
for _u in "ijkefgh":
    M_UV[("1", _u)] = _B([[R[_u], 0], [0, -R[_u]]])
for (_a, _b), _blk in R2.items():
    M_UV[(_a, _b)] = _B([[_blk, 0], [0, _blk]])

# the eight self-dual anticommuting involutions (the first six serve Spin(6))
INVOLUTIONS = {"1": _B([[0, -ID8], [-ID8, 0]])}
for _u in "ijkefgh":
    INVOLUTIONS[_u] = _B([[0, -R[_u]], [R[_u], 0]])

# Pauli-type involutions of H + H and their compositions sigma_a sigma_b
SIGMA = {
    1: _B([[0, ID4], [ID4, 0]]),
    2: _B([[0, -RH["i"]], [RH["i"], 0]]),
    3: _B([[0, -RH["j"]], [RH["j"], 0]]),
    4: _B([[0, -RH["k"]], [RH["k"], 0]]),
    5: _B([[ID4, 0], [0, -ID4]]),
}
SIGMA2 = {
    (1, 2): _B([[RH["i"], 0], [0, -RH["i"]]]),
    (1, 3): _B([[RH["j"], 0], [0, -RH["j"]]]),
    (1, 4): _B([[RH["k"], 0], [0, -RH["k"]]]),
    (2, 3): _B([[RH["k"], 0], [0, RH["k"]]]),
    (2, 4): _B([[-RH["j"], 0], [0, -RH["j"]]]),
    (3, 4): _B([[RH["i"], 0], [0, RH["i"]]]),
    (1, 5): _B([[0, -ID4], [ID4, 0]]),
    (2, 5): _B([[0, RH["i"]], [RH["i"], 0]]),
    (3, 5): _B([[0, RH["j"]], [RH["j"], 0]]),
    (4, 5): _B([[0, RH["k"]], [RH["k"], 0]]),
}

# R_i, R_j, R_k, R_e, R_f as 4x4 complex matrices, z_s = x_{2s-1} + i x_{2s};
# R_1 = Id is not printed but completes the six
_I = GaussComplex(0, 1)


def _c(rows):
    return tuple(tuple(GaussComplex.coerce(x) for x in r) for r in rows)


COMPLEX = {
    "1": _c([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
    "i": _c([[_I, 0, 0, 0], [0, -_I, 0, 0], [0, 0, -_I, 0], [0, 0, 0, _I]]),
    "j": _c([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
    "k": _c([[0, _I, 0, 0], [_I, 0, 0, 0], [0, 0, 0, -_I], [0, 0, -_I, 0]]),
    "e": _c([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    "f": _c([[0, 0, _I, 0], [0, 0, 0, _I], [_I, 0, 0, 0], [0, _I, 0, 0]]),
}

del _u, _a, _b, _blk
