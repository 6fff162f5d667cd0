"""The regular n-gon line arrangement (cyclic model).

Regions are ordered as the centre, then ``p = (n+1)//2`` rings of ``n``
regions; region ``x`` of ring ``i`` is separated from the centre by the
``i`` consecutive edge lines ``h_x, ..., h_{x+i-1}`` (indices mod n).
"""
from __future__ import annotations

from typing import List, Tuple

from ..matrix import BlockLayout, PolyMat, circulant, from_blocks, ones, shift_matrix
from ..poly import ONE, PolyZ, Q, qpow
from .structured import ascending_exps, constant_exps, descending_exps, powers


def rings(n: int) -> int:
    return (n + 1) // 2


def _check(n: int):
    if n < 3:
        raise ValueError(f"cyclic model needs n >= 3, got {n}")


def block_word_exps(n: int, i: int, j: int) -> List[int]:
    """Exponents of the first row of the circulant block ``C_ij``, ``i <= j``."""
    if not 1 <= i <= j <= rings(n):
        raise ValueError(f"block ({i},{j}) out of range for n={n}")
    return (
        ascending_exps(j - i, i)
        + constant_exps(i + j, n + 1 - i - j)
        + descending_exps(j - i + 2 * (i - 1), i - 1)
        + constant_exps(j - i, j - i)
    )


def block(n: int, i: int, j: int) -> PolyMat:
    """``C_ij`` for any ``1 <= i, j <= p``; the lower blocks are transposes."""
    if i > j:
        return block(n, j, i).transpose()
    return circulant(powers(block_word_exps(n, i, j)))


def cyclic_varchenko(n: int) -> PolyMat:
    _check(n)
    p = rings(n)
    grid = [[PolyMat([[ONE]])] + [ones(1, n, qpow(r)) for r in range(1, p + 1)]]
    for i in range(1, p + 1):
        grid.append([ones(n, 1, qpow(i))] + [block(n, i, j) for j in range(1, p + 1)])
    return from_blocks(grid)


def cyclic_transforms(n: int) -> Tuple[PolyMat, PolyMat]:
    """The lower block-bidiagonal ``P`` and ``S`` (with ``-qJ`` blocks)."""
    _check(n)
    p = rings(n)
    eye = PolyMat.identity(n)
    minus_q_eye = eye.scale(-Q)
    minus_q_j = shift_matrix(n).scale(-Q)
    pg = [[PolyMat([[ONE]])] + [None] * p]
    sg = [[PolyMat([[ONE]])] + [None] * p]
    for i in range(1, p + 1):
        prow = [ones(n, 1, -Q) if i == 1 else None] + [None] * p
        srow = [None] * (p + 1)
        prow[i] = eye
        srow[i] = eye
        if i >= 2:
            prow[i - 1] = minus_q_eye
            srow[i - 1] = minus_q_j
        pg.append(prow)
        sg.append(srow)
    sizes = (1,) + (n,) * p

    def build(g):
        return from_blocks(BlockLayout(sizes, sizes, tuple(map(tuple, g))))

    return build(pg), build(sg)


def cyclic_claimed_snf(n: int) -> List[PolyZ]:
    _check(n)
    p = rings(n)
    t = ONE - Q * Q
    return [ONE] + [t] * n + [t * t] * (n * (p - 1))


def cyclic_after_p(n: int) -> PolyMat:
    """The printed form of ``P V P^t``: block ``(i, j)`` is ``q^|i-j| (1-q^2) J^((i-j) mod n)``."""
    _check(n)
    p = rings(n)
    t = ONE - Q * Q
    j = shift_matrix(n)
    grid = [[PolyMat([[ONE]])] + [PolyMat.zeros(1, n)] * p]
    for a in range(1, p + 1):
        row = [PolyMat.zeros(n, 1)]
        for b in range(1, p + 1):
            row.append((j ** ((a - b) % n)).scale(qpow(abs(a - b)) * t))
        grid.append(row)
    return from_blocks(grid)


def cyclic_labels(n: int) -> List[frozenset]:
    """sep-set labels (1-based) in matrix order."""
    _check(n)
    out = [frozenset()]
    for i in range(1, rings(n) + 1):
        for x in range(1, n + 1):
            out.append(frozenset((x - 1 + t) % n + 1 for t in range(i)))
    return out
