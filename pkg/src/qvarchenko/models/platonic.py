"""Tetrahedron, cube and octahedron arrangements: printed data and transition matrices.

Regions are labelled by the hyperplanes separating them from the central
region, in the orders listed by :func:`tetrahedron_labels` and friends.
"""
from __future__ import annotations

from typing import List

from ..matrix import BlockLayout, PolyMat, from_blocks, ones, shift_matrix
from ..poly import ONE, PolyZ, Q, qpow
from .structured import assemble_symmetric, unit_lower


def _labels(text: str) -> List[frozenset]:
    return [frozenset() if w == "0" else frozenset(int(c) for c in w) for w in text.split()]


def _stack(*mats: PolyMat) -> PolyMat:
    """Place blocks side by side."""
    return from_blocks([list(mats)])


def _bar(n: int, copies: int) -> PolyMat:
    """``(I_n | I_n | ...)``, ``copies`` identities side by side."""
    return _stack(*([PolyMat.identity(n)] * copies))


T = ONE - Q * Q

# --- tetrahedron ------------------------------------------------------------

TETRAHEDRON_LABELS = "0 1 2 3 4 12 23 34 14 13 24 123 234 341 412"

_TETRA_EXPS = """
0 1 1 1 1 2 2 2 2 2 2 3 3 3 3
1 0 2 2 2 1 3 3 1 1 3 2 4 2 2
1 2 0 2 2 1 1 3 3 3 1 2 2 4 2
1 2 2 0 2 3 1 1 3 1 3 2 2 2 4
1 2 2 2 0 3 3 1 1 3 1 4 2 2 2
2 1 1 3 3 0 2 4 2 2 2 1 3 3 1
2 3 1 1 3 2 0 2 4 2 2 1 1 3 3
2 3 3 1 1 4 2 0 2 2 2 3 1 1 3
2 1 3 3 1 2 4 2 0 2 2 3 3 1 1
2 1 3 1 3 2 2 2 2 0 4 1 3 1 3
2 3 1 3 1 2 2 2 2 4 0 3 1 3 1
3 2 2 2 4 1 1 3 3 1 3 0 2 2 2
3 4 2 2 2 3 1 1 3 3 1 2 0 2 2
3 2 4 2 2 3 3 1 1 1 3 2 2 0 2
3 2 2 4 2 1 3 3 1 3 1 2 2 2 0
"""


def tetrahedron_labels() -> List[frozenset]:
    return _labels(TETRAHEDRON_LABELS)


def tetrahedron_varchenko() -> PolyMat:
    rows = [[qpow(int(e)) for e in line.split()] for line in _TETRA_EXPS.strip().splitlines()]
    return PolyMat(rows)


def tetrahedron_transform() -> PolyMat:
    """Left transition matrix ``P``; the right one is its transpose."""
    eye = PolyMat.identity(4)
    j = shift_matrix(4)
    bar = _bar(2, 2)
    return unit_lower((1, 4, 4, 2, 4), {
        (1, 0): ones(4, 1, -Q),
        (2, 0): ones(4, 1, Q**2),
        (2, 1): (eye + j).scale(-Q),
        (3, 0): ones(2, 1, Q**2),
        (3, 1): bar.scale(-Q),
        (4, 0): ones(4, 1, -Q**3),
        (4, 1): (eye + j + j @ j).scale(Q**2),
        (4, 2): (eye + j).scale(-Q),
        (4, 3): bar.T.scale(-Q),
    })


def tetrahedron_claimed_snf() -> List[PolyZ]:
    return [ONE] + [T] * 4 + [T**2] * 6 + [T**3] * 4


# --- cube -------------------------------------------------------------------

CUBE_LABELS = (
    "0 1 2 3 4 5 6 12 23 34 45 56 61 13 24 35 46 15 26 "
    "123 234 345 456 561 612 135 246"
)
CUBE_SIZES = (6, 6, 6, 6, 2)
CUBE_HEAD = (1, 2, 2, 3, 3)
CUBE_WORDS = {
    (1, 1): (0, 2, 2, 2, 2, 2),
    (1, 2): (1, 3, 3, 3, 3, 1),
    (1, 3): (1, 3, 3, 3, 1, 3),
    (1, 4): (2, 4, 4, 4, 2, 2),
    (1, 5): (2, 4),
    (2, 2): (0, 2, 4, 4, 4, 2),
    (2, 3): (2, 2, 4, 4, 2, 2),
    (2, 4): (1, 3, 5, 5, 3, 1),
    (2, 5): (3, 3),
    (3, 3): (0, 4, 2, 4, 2, 4),
    (3, 4): (1, 3, 3, 5, 3, 3),
    (3, 5): (1, 5),
    (4, 4): (0, 2, 4, 6, 4, 2),
    (4, 5): (2, 4),
    (5, 5): (0, 6),
}


def cube_labels() -> List[frozenset]:
    return _labels(CUBE_LABELS)


def cube_varchenko() -> PolyMat:
    return assemble_symmetric(CUBE_HEAD, CUBE_SIZES, CUBE_WORDS)


def cube_transform() -> PolyMat:
    """Left transition matrix ``U``; the right one is its transpose."""
    eye = PolyMat.identity(6)
    j = shift_matrix(6)
    bar = _bar(2, 3)
    return unit_lower((1, 6, 6, 6, 6, 2), {
        (1, 0): ones(6, 1, -Q),
        (2, 0): ones(6, 1, Q**2),
        (2, 1): (eye + j).scale(-Q),
        (3, 0): ones(6, 1, Q**2),
        (3, 1): (eye + j @ j).scale(-Q),
        (4, 0): ones(6, 1, -Q**3),
        (4, 1): (eye + j + j @ j).scale(Q**2),
        (4, 2): (eye + j).scale(-Q),
        (4, 3): eye.scale(-Q),
        (5, 0): ones(2, 1, -Q**3),
        (5, 1): bar.scale(Q**2),
        (5, 3): bar.scale(-Q),
    })


def cube_claimed_snf() -> List[PolyZ]:
    return [ONE] + [T] * 6 + [T**2] * 12 + [T**3] * 8


# --- octahedron -------------------------------------------------------------

OCTAHEDRON_LABELS = (
    "0 1 2 3 4 5 6 7 8 "
    "16 12 23 34 45 56 17 28 37 48 57 68 "
    "167 128 237 348 457 568 157 268 137 248 357 468 "
    "567 168 127 238 347 458 156 126 123 234 345 456 "
    "1267 1238 2347 3458 4567 1568 1357 2468 1567 1268 1237 2348 3457 4568"
)
OCTAHEDRON_SIZES = (6, 2, 6, 6, 6, 6, 6, 6, 6, 2, 6)
OCTAHEDRON_HEAD = (1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4)
OCTAHEDRON_WORDS = {
    (1, 1): (0, 2, 2, 2, 2, 2),
    (1, 2): (2, 2),
    (1, 3): (1, 1, 3, 3, 3, 3),
    (1, 4): (1, 3, 3, 3, 3, 3),
    (1, 5): (2, 2, 4, 4, 4, 4),
    (1, 6): (2, 4, 2, 4, 4, 4),
    (1, 7): (4, 2, 2, 4, 4, 4),
    (1, 8): (2, 2, 2, 4, 4, 4),
    (1, 9): (3, 3, 5, 5, 5, 3),
    (1, 10): (3, 5),
    (1, 11): (3, 3, 3, 5, 5, 5),
    (2, 2): (0, 2),
    (2, 3): (3, 3, 3, 3, 3, 3),
    (2, 4): (1, 3, 1, 3, 1, 3),
    (2, 5): (2, 4, 2, 4, 2, 4),
    (2, 6): (2, 4, 2, 4, 2, 4),
    (2, 7): (2, 4, 2, 4, 2, 4),
    (2, 8): (4, 4, 4, 4, 4, 4),
    (2, 9): (3, 5, 3, 5, 3, 5),
    (2, 10): (3, 5),
    (2, 11): (3, 5, 3, 5, 3, 5),
    (3, 3): (0, 2, 4, 4, 4, 2),
    (3, 4): (2, 4, 4, 4, 4, 2),
    (3, 5): (1, 3, 5, 5, 5, 3),
    (3, 6): (3, 3, 3, 5, 5, 3),
    (3, 7): (3, 1, 3, 5, 5, 5),
    (3, 8): (1, 1, 3, 5, 5, 3),
    (3, 9): (2, 4, 6, 6, 4, 2),
    (3, 10): (4, 4),
    (3, 11): (2, 2, 4, 6, 6, 4),
    (4, 4): (0, 4, 2, 4, 2, 4),
    (4, 5): (1, 3, 3, 5, 3, 5),
    (4, 6): (1, 5, 1, 5, 3, 5),
    (4, 7): (3, 3, 1, 5, 3, 5),
    (4, 8): (3, 3, 3, 5, 5, 5),
    (4, 9): (2, 4, 4, 6, 4, 4),
    (4, 10): (2, 6),
    (4, 11): (2, 4, 2, 6, 4, 6),
    (5, 5): (0, 4, 4, 6, 4, 4),
    (5, 6): (2, 4, 2, 6, 4, 4),
    (5, 7): (2, 2, 2, 6, 4, 6),
    (5, 8): (2, 2, 4, 6, 6, 4),
    (5, 9): (1, 5, 5, 7, 3, 3),
    (5, 10): (3, 5),
    (5, 11): (1, 3, 3, 7, 5, 5),
    (6, 6): (0, 6, 2, 6, 2, 6),
    (6, 7): (2, 4, 2, 6, 4, 4),
    (6, 8): (2, 4, 4, 6, 4, 4),
    (6, 9): (3, 5, 5, 5, 3, 3),
    (6, 10): (1, 7),
    (6, 11): (1, 5, 3, 7, 3, 5),
    (7, 7): (0, 4, 4, 6, 4, 4),
    (7, 8): (2, 4, 6, 6, 4, 2),
    (7, 9): (3, 7, 5, 5, 1, 3),
    (7, 10): (3, 5),
    (7, 11): (1, 5, 5, 7, 3, 3),
    (8, 8): (0, 2, 4, 6, 4, 2),
    (8, 9): (3, 5, 7, 5, 3, 1),
    (8, 10): (3, 5),
    (8, 11): (1, 3, 5, 7, 5, 3),
    (9, 9): (0, 4, 4, 8, 4, 4),
    (9, 10): (4, 4),
    (9, 11): (2, 2, 2, 6, 6, 6),
    (10, 10): (0, 8),
    (10, 11): (2, 6, 2, 6, 2, 6),
    (11, 11): (0, 4, 4, 8, 4, 4),
}

# Printed words that disagree with the region geometry, as (printed, used).
# 1357 and 2468 are separated by all eight planes.
OCTAHEDRON_CORRECTIONS = {
    (10, 10): ((0, 2), (0, 8)),
}


def octahedron_printed_varchenko() -> PolyMat:
    """The matrix exactly as the words were printed, corrections undone."""
    words = dict(OCTAHEDRON_WORDS)
    for key, (printed, _) in OCTAHEDRON_CORRECTIONS.items():
        words[key] = printed
    return assemble_symmetric(OCTAHEDRON_HEAD, OCTAHEDRON_SIZES, words)


def octahedron_labels() -> List[frozenset]:
    return _labels(OCTAHEDRON_LABELS)


def octahedron_varchenko() -> PolyMat:
    return assemble_symmetric(OCTAHEDRON_HEAD, OCTAHEDRON_SIZES, OCTAHEDRON_WORDS)


def octahedron_transforms():
    """``(L, U, R)``: the SNF is ``L U V U^t R``."""
    eye = PolyMat.identity(6)
    j = shift_matrix(6)
    jp = lambda k: j**k  # noqa: E731
    bar = _bar(2, 3)
    u = unit_lower((1,) + OCTAHEDRON_SIZES, {
        (1, 0): ones(6, 1, -Q),
        (2, 0): ones(2, 1, -Q),
        (3, 0): ones(6, 1, Q**2),
        (3, 1): (eye + jp(5)).scale(-Q),
        (4, 0): ones(6, 1, Q**2),
        (4, 1): eye.scale(-Q),
        (4, 2): bar.T.scale(-Q),
        (5, 1): eye.scale(Q**2),
        (5, 3): eye.scale(-Q),
        (5, 4): eye.scale(-Q),
        (6, 2): bar.T.scale(Q**2),
        (6, 4): (eye + jp(4)).scale(-Q),
        (7, 1): eye.scale(-Q**4) + jp(4).scale(Q**2),
        (7, 3): eye.scale(Q**3) - jp(5).scale(Q),
        (7, 4): eye.scale(Q**3) - jp(4).scale(Q),
        (7, 5): eye.scale(-Q**2),
        (8, 1): jp(5).scale(Q**2),
        (8, 2): bar.T.scale(-Q**4),
        (8, 3): (eye + jp(5)).scale(-Q),
        (8, 4): (eye + jp(4)).scale(Q**3),
        (8, 6): eye.scale(-Q**2),
        (9, 1): eye.scale(-Q**3),
        (9, 3): (eye + j).scale(Q**2),
        (9, 4): eye.scale(Q**2),
        (9, 5): eye.scale(-Q),
        (9, 7): jp(2).scale(-Q),
        (9, 8): j.scale(-Q),
        (10, 2): PolyMat.identity(2).scale(-Q**3),
        (10, 4): bar.scale(Q**2),
        (10, 6): bar.scale(-Q),
        (11, 0): ones(6, 1, -Q**4),
        (11, 1): (jp(4) + jp(5)).scale(Q**3),
        (11, 3): jp(5).scale(-Q**2),
        (11, 4): eye.scale(Q**2),
        (11, 5): eye.scale(-Q),
        (11, 6): eye.scale(-Q),
    })
    two = ONE + Q * Q
    sizes = (33, 6, 6, 6, 2, 6)
    left = _tail_block(sizes, {
        (1, 2): eye.scale(Q**2), (1, 5): eye.scale(-Q),
        (5, 1): eye.scale(-Q), (5, 2): eye.scale(Q**5), (5, 5): eye.scale(two),
    })
    right = _tail_block(sizes, {
        (1, 2): eye.scale(-Q**4), (1, 5): eye.scale(Q**5), (2, 5): eye.scale(-Q),
        (5, 2): eye.scale(-Q), (5, 5): eye.scale(two),
    })
    return left, u, right


def _tail_block(sizes, entries) -> PolyMat:
    m = len(sizes)
    grid = [[None] * m for _ in range(m)]
    for b, s in enumerate(sizes):
        grid[b][b] = PolyMat.identity(s)
    for (i, j), blk in entries.items():
        grid[i][j] = blk
    return from_blocks(BlockLayout(sizes, sizes, tuple(map(tuple, grid))))


def octahedron_claimed_snf() -> List[PolyZ]:
    """The last six entries read ``(1-q^2)^2 (1-q^8)``."""
    return [ONE] + [T] * 8 + [T**2] * 24 + [T**3] * 20 + [T**2 * (ONE - qpow(8))] * 6
