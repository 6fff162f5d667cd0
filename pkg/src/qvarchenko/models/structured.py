"""Exponent vectors used to write down circulant blocks.

Each helper returns a list of polynomials; the ``*_exps`` variants return
the bare exponents, which is what the tests compare.  The block helpers at
the end assemble matrices from such words.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from ..matrix import BlockLayout, PolyMat, circulant_slab, from_blocks, ones
from ..poly import ONE, PolyZ, qpow


def constant_exps(r: int, m: int) -> List[int]:
    """``q^r`` repeated ``m`` times."""
    return [r] * m


def descending_exps(r: int, i: int) -> List[int]:
    """``(q^r, q^{r-2}, ..., q^{r-2i+2})``."""
    return [r - 2 * k for k in range(i)]


def ascending_exps(r: int, i: int) -> List[int]:
    """``(q^r, q^{r+2}, ..., q^{r+2i-2})``."""
    return [r + 2 * k for k in range(i)]


def folded_exps(n: int, i: int, j: int) -> List[int]:
    """Rises by two from ``j-i`` to ``i+j-2``, plateaus at ``i+j``, falls back.

    The rise has ``i`` entries and the plateau ``n+1-i-j``, so the total
    length is ``n-j+i+1``.
    """
    if not i < j:
        raise ValueError("folded vector needs i < j")
    if i + j > n + 1:
        raise ValueError("plateau length n+1-i-j is negative")
    rise = list(range(j - i, i + j - 1, 2))
    plateau = [i + j] * (n + 1 - i - j)
    return rise + plateau + rise[::-1]


@dataclass(frozen=True)
class StructuredVector:
    kind: str  # "constant" | "descending" | "ascending" | "folded"
    r: int = 0
    length: int = 0
    n: int = 0
    i: int = 0
    j: int = 0

    def exponents(self) -> List[int]:
        if self.kind == "constant":
            return constant_exps(self.r, self.length)
        if self.kind == "descending":
            return descending_exps(self.r, self.length)
        if self.kind == "ascending":
            return ascending_exps(self.r, self.length)
        if self.kind == "folded":
            return folded_exps(self.n, self.i, self.j)
        raise ValueError(f"unknown vector kind {self.kind!r}")

    def expand(self) -> List[PolyZ]:
        return [qpow(e) for e in self.exponents()]


def powers(exps) -> List[PolyZ]:
    return [qpow(e) for e in exps]


def word_block(exps: Sequence[int], rows: int, cols: int | None = None) -> PolyMat:
    """Circulant block from an exponent word; rows shift right by one."""
    return circulant_slab(powers(exps), rows, cols)


def assemble_symmetric(head: Sequence[int], sizes: Sequence[int], words: dict) -> PolyMat:
    """Symmetric block matrix with a leading ``1``.

    ``head[k]`` is the exponent of the constant row vector over block ``k``;
    ``words[(i, j)]`` for ``i <= j`` is the exponent word of block ``(i, j)``
    (1-based); lower blocks are transposes.
    """
    m = len(sizes)
    grid = [[PolyMat([[ONE]])] + [ones(1, s, qpow(e)) for s, e in zip(sizes, head)]]
    for i in range(1, m + 1):
        row = [ones(sizes[i - 1], 1, qpow(head[i - 1]))]
        for j in range(1, m + 1):
            if i <= j:
                row.append(word_block(words[(i, j)], sizes[i - 1], sizes[j - 1]))
            else:
                row.append(word_block(words[(j, i)], sizes[j - 1], sizes[i - 1]).transpose())
        grid.append(row)
    return from_blocks(grid)


def unit_lower(sizes: Sequence[int], entries: dict) -> PolyMat:
    """Block matrix with identity diagonal blocks and the given off-diagonal blocks."""
    m = len(sizes)
    grid = [[None] * m for _ in range(m)]
    for b, s in enumerate(sizes):
        grid[b][b] = PolyMat.identity(s)
    for (i, j), blk in entries.items():
        grid[i][j] = blk
    return from_blocks(BlockLayout(tuple(sizes), tuple(sizes), tuple(map(tuple, grid))))
