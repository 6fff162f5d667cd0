"""The n-gon prism cut by one transverse plane (dihedral model).

Matrix order: ``R_0^+, R_0^-``, then for each ring ``i`` the ``n`` regions
above the plane followed by the ``n`` regions below it.  Below the plane
the ring labels are reflected: region ``x`` of ring ``j`` is cut off by
``h_{n+1-x}, ..., h_{n+1-(x+j-1)}``.
"""
from __future__ import annotations

from typing import List, Tuple

from ..matrix import BlockLayout, PolyMat, antidiag_matrix, from_blocks, ones, shift_matrix
from ..poly import ONE, PolyZ, Q, qpow
from . import cyclic
from .cyclic import rings


def _check(n: int):
    if n < 3:
        raise ValueError(f"dihedral model needs n >= 3, got {n}")


def cross_block(n: int, i: int, j: int) -> PolyMat:
    """``q J^{i-1} K C_ij`` for ``i <= j``: the block between ring ``i`` above and ring ``j`` below."""
    if i > j:
        return cross_block(n, j, i).transpose()
    jk = (shift_matrix(n) ** (i - 1)) @ antidiag_matrix(n)
    return (jk @ cyclic.block(n, i, j)).scale(Q)


def _sizes(n: int) -> tuple:
    return (1, 1) + (n,) * (2 * rings(n))


def dihedral_varchenko(n: int) -> PolyMat:
    _check(n)
    p = rings(n)
    one = PolyMat([[ONE]])
    qq = PolyMat([[Q]])
    top = [one, qq]
    bot = [qq, one]
    for r in range(1, p + 1):
        top += [ones(1, n, qpow(r)), ones(1, n, qpow(r + 1))]
        bot += [ones(1, n, qpow(r + 1)), ones(1, n, qpow(r))]
    grid = [top, bot]
    for i in range(1, p + 1):
        up = [ones(n, 1, qpow(i)), ones(n, 1, qpow(i + 1))]
        down = [ones(n, 1, qpow(i + 1)), ones(n, 1, qpow(i))]
        for j in range(1, p + 1):
            c = cyclic.block(n, i, j)
            x = cross_block(n, i, j)
            up += [c, x]
            down += [x, c]
        grid += [up, down]
    return from_blocks(grid)


def dihedral_transforms(n: int) -> Tuple[PolyMat, PolyMat, PolyMat, PolyMat]:
    """``(P, S, T, R)``; the SNF is reached by the congruent action of ``R T S P``."""
    _check(n)
    p = rings(n)
    sizes = _sizes(n)
    m = len(sizes)
    eye = PolyMat.identity(n)
    jm = shift_matrix(n)
    k = antidiag_matrix(n)

    def grid():
        g = [[None] * m for _ in range(m)]
        g[0][0] = PolyMat([[ONE]])
        g[1][1] = PolyMat([[ONE]])
        for b in range(2, m):
            g[b][b] = eye
        return g

    def build(g):
        return from_blocks(BlockLayout(sizes, sizes, tuple(map(tuple, g))))

    # block index of ring i above / below
    def up(i):
        return 2 * i

    def down(i):
        return 2 * i + 1

    pg = grid()
    pg[1][0] = PolyMat([[-Q]])
    pg[up(1)][0] = ones(n, 1, -Q)
    pg[down(1)][1] = ones(n, 1, -Q)
    for i in range(2, p + 1):
        pg[up(i)][up(i - 1)] = eye.scale(-Q)
        pg[down(i)][down(i - 1)] = eye.scale(-Q)

    sg = grid()
    for i in range(2, p + 1):
        sg[up(i)][up(i - 1)] = jm.scale(-Q)
        sg[down(i)][down(i - 1)] = jm.scale(-Q)

    tg = grid()
    for i in range(1, p + 1):
        tg[down(i)][up(i)] = ((jm ** (i - 1)) @ k).scale(-Q)

    # R moves the rings below the plane (from ring 2 on) to the end
    start = lambda b: 2 + (b - 2) * n  # noqa: E731
    blocks_new = [up(1), down(1)] + [up(i) for i in range(2, p + 1)] + [down(i) for i in range(2, p + 1)]
    perm = [0, 1]
    for b in blocks_new:
        perm += list(range(start(b), start(b) + n))
    r = PolyMat.permutation(perm)
    return build(pg), build(sg), build(tg), r


def dihedral_claimed_snf(n: int) -> List[PolyZ]:
    _check(n)
    p = rings(n)
    t = ONE - Q * Q
    return [ONE] + [t] * (n + 1) + [t**2] * (n * p) + [t**3] * (n * (p - 1))


def dihedral_labels(n: int) -> List[frozenset]:
    """sep-set labels from ``R_0^+``; the transverse plane is label ``n+1``."""
    _check(n)
    h = n + 1
    out = [frozenset(), frozenset({h})]
    for i in range(1, rings(n) + 1):
        out += [frozenset((x - 1 + t) % n + 1 for t in range(i)) for x in range(1, n + 1)]
        out += [
            frozenset({h} | {(n + 1 - (x + t) - 1) % n + 1 for t in range(i)})
            for x in range(1, n + 1)
        ]
    return out
