"""Pyramids over a square and a pentagon: side planes through the apex plus the base.

The base plane is the last hyperplane.  Regions are ordered with the ones
beyond the base first, matched one to one with the regions on the apex
side that carry the same side labels.
"""
from __future__ import annotations

from typing import List

from ..matrix import BlockLayout, PolyMat, block_diag, from_blocks, ones, shift_matrix
from ..poly import ONE, PolyZ, Q, qpow
from . import cyclic
from .structured import unit_lower


def _labels(text: str) -> List[frozenset]:
    return [frozenset() if w == "0" else frozenset(int(c) for c in w) for w in text.split()]


def _exp_matrix(text: str) -> PolyMat:
    return PolyMat([[qpow(int(e)) for e in line.split()] for line in text.strip().splitlines()])


T = ONE - Q * Q

# --- square base --------------------------------------------------------------

# Listed pairs whose base-side region does not exist (1235, 2345, ...) are
# dropped: the side planes meet in the apex, so only 9 regions lie past the base.
PYRAMID4_LABELS = (
    "5 15 25 35 45 125 235 345 145 "
    "0 1 2 3 4 12 23 34 14 123 234 134 124 1234"
)

# V_q of the four side planes alone, regions 0 1 2 3 4 12 23 34 41 123 234 341 412 1234
_APEX_FAN4_EXPS = """
0 1 1 1 1 2 2 2 2 3 3 3 3 4
1 0 2 2 2 1 3 3 1 2 4 2 2 3
1 2 0 2 2 1 1 3 3 2 2 4 2 3
1 2 2 0 2 3 1 1 3 2 2 2 4 3
1 2 2 2 0 3 3 1 1 4 2 2 2 3
2 1 1 3 3 0 2 4 2 1 3 3 1 2
2 3 1 1 3 2 0 2 4 1 1 3 3 2
2 3 3 1 1 4 2 0 2 3 1 1 3 2
2 1 3 3 1 2 4 2 0 3 3 1 1 2
3 2 2 2 4 1 1 3 3 0 2 2 2 1
3 4 2 2 2 3 1 1 3 2 0 2 2 1
3 2 4 2 2 3 3 1 1 2 2 0 2 1
3 2 2 4 2 1 3 3 1 2 2 2 0 1
4 3 3 3 3 2 2 2 2 1 1 1 1 0
"""


def pyramid4_labels() -> List[frozenset]:
    return _labels(PYRAMID4_LABELS)


def apex_fan4_varchenko() -> PolyMat:
    """V_q of the arrangement with the base plane deleted (14 regions)."""
    return _exp_matrix(_APEX_FAN4_EXPS)


def pyramid4_split() -> PolyMat:
    """``P``: subtracts ``q`` times each apex-side partner from a region past the base."""
    return unit_lower((9, 9, 5), {(0, 1): PolyMat.identity(9).scale(-Q)})


def pyramid4_split_form() -> PolyMat:
    """``P V P^t``: the restriction to the base (a square, scaled by ``1-q^2``) beside the fan."""
    return block_diag(cyclic.cyclic_varchenko(4).scale(T), apex_fan4_varchenko())


def pyramid4_varchenko() -> PolyMat:
    """Recovered from the split form by undoing ``P``."""
    inv = unit_lower((9, 9, 5), {(0, 1): PolyMat.identity(9).scale(Q)})
    return inv @ pyramid4_split_form() @ inv.T


def pyramid4_transforms():
    """``(W, L, T, P, R)``; the SNF is ``W L T P V (T P)^t R W^t``."""
    eye = PolyMat.identity(4)
    j = shift_matrix(4)
    t9 = unit_lower((1, 4, 4), {
        (1, 0): ones(4, 1, -Q),
        (2, 0): ones(4, 1, Q**2),
        (2, 1): (eye + j).scale(-Q),
    })
    u1 = unit_lower((1, 4, 4, 4, 1), {
        (1, 0): ones(4, 1, -Q),
        (2, 0): ones(4, 1, Q**2),
        (2, 1): (eye + j).scale(-Q),
        (3, 1): j.scale(Q**2),
        (3, 2): (eye + j).scale(-Q),
        (4, 0): PolyMat([[-Q**4]]),
        (4, 1): PolyMat([[Q**3, 0, 0, Q**3]]),
        (4, 2): PolyMat([[0, Q**2, 0, -Q**2]]),
        (4, 3): PolyMat([[-Q, -Q, 0, 0]]),
    })
    u2 = unit_lower((1, 4, 4, 2, 2, 1), {(4, 3): PolyMat.identity(2).scale(-Q**2)})
    t = block_diag(t9, u2 @ u1)
    left = block_diag(PolyMat.identity(20), PolyMat([
        [1, Q**2, -Q],
        [0, 1, 0],
        [-Q, Q**5, ONE + Q * Q],
    ]))
    right = block_diag(PolyMat.identity(20), PolyMat([
        [1, -Q**4, Q**5],
        [0, 1, -Q],
        [0, -Q, ONE + Q * Q],
    ]))
    w = _strip_permutation((1, 4, 4, 1, 4, 6, 2, 1), [3, 0, 4, 1, 5, 2, 6, 7])
    return w, left, t, pyramid4_split(), right


def _strip_permutation(col_sizes, picks) -> PolyMat:
    """Row strip ``k`` is the identity on column strip ``picks[k]``."""
    starts = [sum(col_sizes[:k]) for k in range(len(col_sizes))]
    perm = []
    for c in picks:
        perm += range(starts[c], starts[c] + col_sizes[c])
    return PolyMat.permutation(perm)


def pyramid4_claimed_snf() -> List[PolyZ]:
    return [ONE] + [T] * 5 + [T**2] * 10 + [T**3] * 6 + [T**2 * (ONE - qpow(8))]


# --- pentagonal base -----------------------------------------------------------

PYRAMID5_LABELS = (
    "6 16 26 36 46 56 126 236 346 456 156 1236 2346 3456 1456 1256 "
    "0 1 2 3 4 5 12 23 34 45 15 123 234 345 145 125 "
    "1234 2345 1345 1245 1235 12345"
)

APEX_FAN5_HEAD = (1, 2, 3, 4)
APEX_FAN5_WORDS = {
    (1, 1): (0, 2, 2, 2, 2),
    (1, 2): (1, 3, 3, 3, 1),
    (1, 3): (2, 4, 4, 2, 2),
    (1, 4): (3, 5, 3, 3, 3),
    (2, 2): (0, 2, 4, 4, 2),
    (2, 3): (1, 3, 5, 3, 1),
    (2, 4): (2, 4, 4, 2, 2),
    (3, 3): (0, 2, 4, 4, 2),
    (3, 4): (1, 3, 3, 3, 1),
    (4, 4): (0, 2, 2, 2, 2),
}


def pyramid5_labels() -> List[frozenset]:
    return _labels(PYRAMID5_LABELS)


def apex_fan5_varchenko() -> PolyMat:
    """V_q with the base plane deleted (22 regions): four rings of five plus the far cone."""
    from .structured import word_block

    sizes = (5, 5, 5, 5)
    grid = [[PolyMat([[ONE]])] + [ones(1, 5, qpow(e)) for e in APEX_FAN5_HEAD] + [PolyMat([[qpow(5)]])]]
    for i in range(1, 5):
        row = [ones(5, 1, qpow(APEX_FAN5_HEAD[i - 1]))]
        for j in range(1, 5):
            key = (min(i, j), max(i, j))
            blk = word_block(APEX_FAN5_WORDS[key], sizes[i - 1], sizes[j - 1])
            row.append(blk if i <= j else blk.transpose())
        row.append(ones(5, 1, qpow(5 - i)))
        grid.append(row)
    grid.append([PolyMat([[qpow(5)]])] + [ones(1, 5, qpow(5 - e)) for e in range(1, 5)] + [PolyMat([[ONE]])])
    return from_blocks(grid)


def pyramid5_split() -> PolyMat:
    return unit_lower((16, 16, 6), {(0, 1): PolyMat.identity(16).scale(-Q)})


def pyramid5_split_form() -> PolyMat:
    return block_diag(cyclic.cyclic_varchenko(5).scale(T), apex_fan5_varchenko())


def pyramid5_varchenko() -> PolyMat:
    inv = unit_lower((16, 16, 6), {(0, 1): PolyMat.identity(16).scale(Q)})
    return inv @ pyramid5_split_form() @ inv.T


def _p(*coeffs) -> PolyZ:
    return PolyZ(coeffs)


def pyramid5_transforms():
    """``(W, L, T, P, R)`` as printed.  ``W`` is 33 x 33 while the rest are 38 x 38."""
    eye = PolyMat.identity(5)
    j = shift_matrix(5)
    jt = j.T
    t16 = unit_lower((1, 5, 5, 5), {
        (1, 0): ones(5, 1, -Q),
        (2, 0): ones(5, 1, Q**2),
        (2, 1): (eye + j).scale(-Q),
        (3, 1): (j @ j).scale(Q**2),
        (3, 2): (eye + j).scale(-Q),
    })
    u1 = unit_lower((1, 5, 5, 5, 5, 1), {
        (1, 0): ones(5, 1, -Q),
        (2, 0): ones(5, 1, Q**2),
        (2, 1): (eye + j).scale(-Q),
        (3, 1): j.scale(Q**2),
        (3, 2): (eye + j).scale(-Q),
        (4, 1): jt.scale(-Q**5),
        (4, 2): j.scale(Q**2) + (j**3 + jt).scale(Q**4),
        (4, 3): (eye + j).scale(-Q) - (j**3).scale(Q**3),
        (5, 0): PolyMat([[-Q**5]]),
        (5, 1): PolyMat([[Q**4, 0, 0, 0, Q**4]]),
        (5, 2): PolyMat([[0, 0, 0, 0, -Q**3]]),
        (5, 3): PolyMat([[0, Q**2, 0, 0, 0]]),
        (5, 4): PolyMat([[-Q, -Q, 0, 0, 0]]),
    })
    qt = -(Q**2) * T
    u2 = unit_lower((1, 5, 5, 5, 5, 1), {(5, 3): PolyMat([[0, 0, 0, qt, qt]])})
    t = block_diag(t16, u2 @ u1)
    left0 = PolyMat([
        [1, 0, -1, -Q**2, 0, 0],
        [0, 1, 0, 0, -(ONE + Q**2), 0],
        [0, Q**2, 1, -(ONE + Q**4 - Q**8), -(Q**2) * (ONE + Q**2), -Q * (ONE - Q**4)],
        [0, -Q**3, -Q, -Q * (ONE - Q**2 - Q**4 + Q**8), Q**3 * (ONE + Q**2), ONE + Q**2 - Q**6],
        [0, -(Q**2) * (ONE + Q**2), -Q**2, Q**2 * (ONE - Q**6 - Q**8),
         ONE + 2 * Q**2 + 2 * Q**4 + Q**6, -(Q**5) * (ONE + Q**2)],
        [-Q**2, -2 * Q**2, 0, ONE + Q**2 - Q**8, ONE + Q**2 + Q**4, -Q * (ONE + Q**4)],
    ])
    right0 = PolyMat([
        [1, Q**4, ONE + Q**4 + Q**6 + Q**8,
         Q * (2 + 2 * Q**4 + 3 * Q**6 + Q**8 + 2 * Q**10 + 2 * Q**12 + Q**14),
         -(ONE - 2 * Q**2 - 2 * Q**8 - Q**10), ONE - Q**2 + Q**6],
        [0, 1, Q**2 * (ONE + Q**2), Q**3 * (2 + Q**2 + Q**4 + 2 * Q**6 + Q**8),
         ONE + Q**2 + Q**4 + Q**6, -(Q**2) * (ONE + Q**2)],
        [0, 0, 1, Q * (ONE + Q**6), -(ONE - Q**4), ONE + Q**2],
        [0, 0, 0, 0, -1, ONE + Q**2],
        [0, 0, 0, -Q * (ONE - Q**2), ONE - Q**2, Q**2],
        [0, 0, 0, 1, Q, -Q * (2 + Q**2)],
    ])
    left = block_diag(PolyMat.identity(32), left0)
    right = block_diag(PolyMat.identity(32), right0)
    w = _strip_permutation((1, 5, 5, 1, 5, 10, 3, 3), [3, 0, 4, 1, 5, 2, 6, 7])
    return w, left, t, pyramid5_split(), right


def pyramid5_claimed_snf() -> List[PolyZ]:
    return [ONE] + [T] * 6 + [T**2] * 15 + [T**3] * 8 + [T**2 * (ONE - qpow(10))] * 3
