"""Dense matrices of polynomials in ``q``.

Matrices are immutable; entries are :class:`PolyZ` (or :class:`PolyQ` for the
field computations).  The structured constructors follow the usual
conventions: ``circulant`` shifts each row one step to the right,
``reverse_circulant`` one step to the left.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence

from .poly import PolyQ, PolyZ, _Poly, _trim, poly_to_json, render


class DimensionError(ValueError):
    """Raised on incompatible matrix or block dimensions."""


def _as_poly(x, cls=PolyZ):
    if isinstance(x, _Poly):
        return x
    return cls([x])


class PolyMat:
    """Dense ``rows x cols`` matrix over Z[q] (or Q[q])."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        rows = [tuple(_as_poly(x) for x in r) for r in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = tuple(rows)

    @classmethod
    def _raw(cls, rows: int, cols: int, data: tuple) -> "PolyMat":
        m = object.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, data
        return m

    # --- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, ring=PolyZ) -> "PolyMat":
        cols = rows if cols is None else cols
        z = ring.zero()
        return cls._raw(rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, ring=PolyZ) -> "PolyMat":
        z, one = ring.zero(), ring.one()
        return cls._raw(
            n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))
        )

    @classmethod
    def scalar(cls, n: int, value) -> "PolyMat":
        v = _as_poly(value)
        z = type(v).zero()
        return cls._raw(
            n, n, tuple(tuple(v if i == j else z for j in range(n)) for i in range(n))
        )

    @classmethod
    def diagonal(cls, entries: Sequence) -> "PolyMat":
        ent = [_as_poly(e) for e in entries]
        n = len(ent)
        z = type(ent[0]).zero() if ent else PolyZ.zero()
        return cls._raw(
            n, n, tuple(tuple(ent[i] if i == j else z for j in range(n)) for i in range(n))
        )

    @classmethod
    def filled(cls, rows: int, cols: int, value) -> "PolyMat":
        v = _as_poly(value)
        return cls._raw(rows, cols, tuple((v,) * cols for _ in range(rows)))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "PolyMat":
        """Matrix with a one at ``(i, perm[i])`` for each row ``i``."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError("not a permutation")
        z, one = PolyZ.zero(), PolyZ.one()
        return cls._raw(
            n, n, tuple(tuple(one if j == perm[i] else z for j in range(n)) for i in range(n))
        )

    # --- access ------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def tolist(self) -> List[List]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"PolyMat({self.rows}x{self.cols})"

    def pretty(self) -> str:
        cells = [[render(x) for x in r] for r in self._data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "PolyMat":
        return PolyMat._raw(
            r1 - r0, c1 - c0, tuple(r[c0:c1] for r in self._data[r0:r1])
        )

    def transpose(self) -> "PolyMat":
        return PolyMat._raw(self.cols, self.rows, tuple(zip(*self._data)) if self.rows else ())

    @property
    def T(self) -> "PolyMat":
        return self.transpose()

    def map(self, fn) -> "PolyMat":
        return PolyMat._raw(self.rows, self.cols, tuple(tuple(fn(x) for x in r) for r in self._data))

    def to_q(self) -> "PolyMat":
        return self.map(lambda p: p.to_q() if isinstance(p, PolyZ) else p)

    def eval_at(self, x) -> List[List[Fraction]]:
        return [[p.eval(x) for p in r] for r in self._data]

    # --- predicates ----------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def is_diagonal(self) -> bool:
        return self.is_square() and all(
            not x for i, r in enumerate(self._data) for j, x in enumerate(r) if i != j
        )

    def diag(self) -> list:
        return [self._data[i][i] for i in range(min(self.rows, self.cols))]

    def is_lower_triangular(self) -> bool:
        return all(not x for i, r in enumerate(self._data) for x in r[i + 1:])

    def is_upper_triangular(self) -> bool:
        return all(not x for i, r in enumerate(self._data) for x in r[:i])

    def nonzero_offdiagonal(self) -> list:
        return [
            (i, j)
            for i, r in enumerate(self._data)
            for j, x in enumerate(r)
            if i != j and x
        ]

    # --- arithmetic ----------------------------------------------------------

    def __add__(self, other: "PolyMat") -> "PolyMat":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return PolyMat._raw(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
        )

    def __neg__(self):
        return self.map(lambda p: -p)

    def __sub__(self, other: "PolyMat") -> "PolyMat":
        return self + (-other)

    def scale(self, c) -> "PolyMat":
        c = _as_poly(c)
        return self.map(lambda p: p * c)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other: "PolyMat") -> "PolyMat":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "PolyMat":
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        result = PolyMat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # --- serialisation -------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[poly_to_json(p) for p in r] for r in self._data],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PolyMat":
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"matrix object missing key: {exc}") from None
        if not isinstance(entries, list) or len(entries) != rows:
            raise ValueError(f"expected {rows} rows, found {len(entries) if isinstance(entries, list) else entries!r}")
        data = []
        rational = False
        for i, r in enumerate(entries):
            if not isinstance(r, list) or len(r) != cols:
                raise ValueError(f"row {i}: expected {cols} entries")
            out = []
            for j, c in enumerate(r):
                if not isinstance(c, list):
                    raise ValueError(f"entry ({i},{j}): expected a coefficient list")
                try:
                    coeffs = [_json_coeff(x) for x in c]
                except (TypeError, ValueError, ZeroDivisionError):
                    raise ValueError(f"entry ({i},{j}): bad coefficient list {c!r}") from None
                rational = rational or any(x.denominator != 1 for x in coeffs)
                out.append(coeffs)
            data.append(out)
        ring = PolyQ if rational else PolyZ
        return cls._raw(rows, cols, tuple(tuple(ring(c) for c in r) for r in data))

    @classmethod
    def from_json(cls, text: str) -> "PolyMat":
        return cls.from_json_obj(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self._data:
            w.writerow([render(p) for p in r])
        return buf.getvalue()


# --- structured constructors ----------------------------------------------


def _json_coeff(x) -> Fraction:
    """A coefficient is an integer or a string such as ``"3"`` or ``"-1/2"``."""
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"bad coefficient {x!r}")
    return Fraction(x)


def _polys(seq) -> list:
    return [_as_poly(x) for x in seq]


def circulant(first_row: Sequence) -> PolyMat:
    """``C(a_1..a_n)``: row ``r`` is the first row shifted right ``r`` times."""
    a = _polys(first_row)
    if not a:
        raise ValueError("circulant of an empty row")
    n = len(a)
    return PolyMat._raw(n, n, tuple(tuple(a[(c - r) % n] for c in range(n)) for r in range(n)))


def reverse_circulant(first_row: Sequence) -> PolyMat:
    """``RC(a_1..a_n)``: row ``r`` is the first row shifted left ``r`` times."""
    a = _polys(first_row)
    if not a:
        raise ValueError("reverse circulant of an empty row")
    n = len(a)
    return PolyMat._raw(n, n, tuple(tuple(a[(c + r) % n] for c in range(n)) for r in range(n)))


def circulant_slab(first_row: Sequence, rows: int, out_cols: int | None = None, mode: str = "cycle") -> PolyMat:
    """A ``rows x out_cols`` block cut from a circulant pattern.

    ``mode="cycle"``: row ``r`` is the word shifted right ``r`` times and cut
    to ``out_cols`` (so a 2-letter word alternates down a 6x2 block).
    ``mode="pad"``: the word is zero-padded to length ``rows`` and the first
    ``out_cols`` columns of that circulant are kept.
    """
    a = _polys(first_row)
    if not a:
        raise ValueError("circulant slab of an empty word")
    period = len(a)
    if out_cols is None:
        out_cols = period
    if rows < 1 or out_cols < 1:
        raise DimensionError("slab dimensions must be positive")
    if mode == "cycle":
        if out_cols > period:
            raise DimensionError(f"{out_cols} columns exceed the word period {period}")
        data = tuple(tuple(a[(c - r) % period] for c in range(out_cols)) for r in range(rows))
    elif mode == "pad":
        size = max(rows, out_cols, period)
        word = a + [PolyZ.zero()] * (size - period)
        data = tuple(tuple(word[(c - r) % size] for c in range(out_cols)) for r in range(rows))
    else:
        raise ValueError(f"unknown slab mode {mode!r}")
    return PolyMat._raw(rows, out_cols, data)


def shift_matrix(n: int) -> PolyMat:
    """Cyclic shift ``J`` with ``J[r, r+1 mod n] = 1``; ``J**n = I``."""
    if n < 1:
        raise ValueError("shift matrix needs n >= 1")
    return PolyMat.permutation([(r + 1) % n for r in range(n)])


def antidiag_matrix(n: int) -> PolyMat:
    """Order-reversing involution ``K``."""
    if n < 1:
        raise ValueError("antidiagonal matrix needs n >= 1")
    return PolyMat.permutation([n - 1 - r for r in range(n)])


def ones(rows: int, cols: int = 1, value=1) -> PolyMat:
    return PolyMat.filled(rows, cols, value)


# --- products --------------------------------------------------------------


def _ring_of(m: PolyMat):
    # matrices are kept homogeneous, so the first entry decides
    if m.rows and m.cols:
        return type(m._data[0][0])
    return PolyZ


def mat_mul(a: PolyMat, b: PolyMat) -> PolyMat:
    """Exact product; zero entries of either factor are skipped."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    ring = PolyQ if _ring_of(a) is PolyQ or _ring_of(b) is PolyQ else PolyZ
    bsparse = [[(j, x.coeffs) for j, x in enumerate(r) if x.coeffs] for r in b._data]
    cols = b.cols
    out = []
    for r in a._data:
        acc: List[list | None] = [None] * cols
        for k, x in enumerate(r):
            xc = x.coeffs
            if not xc:
                continue
            for j, yc in bsparse[k]:
                cur = acc[j]
                need = len(xc) + len(yc) - 1
                if cur is None:
                    cur = acc[j] = [0] * need
                elif len(cur) < need:
                    cur.extend([0] * (need - len(cur)))
                if len(xc) == 1:
                    c = xc[0]
                    for t, y in enumerate(yc):
                        if y:
                            cur[t] += c * y
                elif len(yc) == 1:
                    c = yc[0]
                    for s, xv in enumerate(xc):
                        if xv:
                            cur[s] += xv * c
                else:
                    for s, xv in enumerate(xc):
                        if xv:
                            for t, y in enumerate(yc):
                                if y:
                                    cur[s + t] += xv * y
        out.append(tuple(ring.zero() if c is None else ring._raw(_trim(c)) for c in acc))
    return PolyMat._raw(a.rows, cols, tuple(out))


def congruence(t: PolyMat, m: PolyMat) -> PolyMat:
    """``t @ m @ t.T``."""
    if not m.is_square() or t.cols != m.rows:
        raise DimensionError(f"congruence of {m.shape} by {t.shape}")
    return mat_mul(mat_mul(t, m), t.transpose())


def product(factors: Iterable[PolyMat]) -> PolyMat:
    it = iter(factors)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("empty product") from None
    for f in it:
        acc = mat_mul(acc, f)
    return acc


# --- block assembly --------------------------------------------------------


@dataclass(frozen=True)
class BlockLayout:
    """Grid of blocks with declared strip sizes.

    ``blocks[i][j]`` may be a :class:`PolyMat`, ``None`` (zero block) or a
    scalar/polynomial, which is expanded to a constant block.
    """

    row_sizes: tuple
    col_sizes: tuple
    blocks: tuple

    @classmethod
    def infer(cls, blocks: Sequence[Sequence]) -> "BlockLayout":
        """Read strip sizes off the matrix blocks; every strip needs one."""
        nr, nc = len(blocks), len(blocks[0])
        row_sizes = [None] * nr
        col_sizes = [None] * nc
        for i, brow in enumerate(blocks):
            if len(brow) != nc:
                raise DimensionError("ragged block grid")
            for j, b in enumerate(brow):
                if isinstance(b, PolyMat):
                    if row_sizes[i] is None:
                        row_sizes[i] = b.rows
                    if col_sizes[j] is None:
                        col_sizes[j] = b.cols
        if None in row_sizes or None in col_sizes:
            raise DimensionError("cannot infer strip sizes from the blocks")
        return cls(tuple(row_sizes), tuple(col_sizes), tuple(tuple(r) for r in blocks))


def from_blocks(layout: BlockLayout | Sequence[Sequence]) -> PolyMat:
    """Flatten a block grid into one matrix."""
    if not isinstance(layout, BlockLayout):
        layout = BlockLayout.infer(layout)
    rs, cs = layout.row_sizes, layout.col_sizes
    if len(layout.blocks) != len(rs):
        raise DimensionError("block grid row count differs from row_sizes")
    out = []
    for i, brow in enumerate(layout.blocks):
        if len(brow) != len(cs):
            raise DimensionError(f"block row {i} has {len(brow)} blocks, expected {len(cs)}")
        strips = []
        for j, b in enumerate(brow):
            if b is None:
                b = PolyMat.zeros(rs[i], cs[j])
            elif not isinstance(b, PolyMat):
                b = PolyMat.filled(rs[i], cs[j], b)
            if b.shape != (rs[i], cs[j]):
                raise DimensionError(
                    f"block ({i},{j}) is {b.rows}x{b.cols}, expected {rs[i]}x{cs[j]}"
                )
            strips.append(b)
        for r in range(rs[i]):
            row = []
            for b in strips:
                row.extend(b._data[r])
            out.append(tuple(row))
    return PolyMat._raw(sum(rs), sum(cs), tuple(out))


def block_diag(*mats: PolyMat) -> PolyMat:
    n = len(mats)
    grid = [[mats[i] if i == j else None for j in range(n)] for i in range(n)]
    return from_blocks(BlockLayout(tuple(m.rows for m in mats), tuple(m.cols for m in mats), tuple(map(tuple, grid))))


# --- determinant -----------------------------------------------------------


def determinant(m: PolyMat) -> PolyZ:
    """Exact determinant over Z[q] by fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return PolyZ.one()
    if m.is_lower_triangular() or m.is_upper_triangular():
        d = PolyZ.one()
        for x in m.diag():
            d = d * x
        return d
    a = [list(r) for r in m._data]
    sign = 1
    prev = PolyZ.one()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return PolyZ.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        same = piv == prev
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                if aik:
                    v = piv * row_i[j] - aik * row_k[j]
                elif same:
                    continue
                else:
                    v = piv * row_i[j]
                row_i[j] = v if prev.is_one() else v.exact_div(prev)
            row_i[k] = PolyZ.zero()
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_at(m: PolyMat, x) -> Fraction:
    """Determinant of ``m`` evaluated at ``q = x``, by rational elimination."""
    a = [[Fraction(v) for v in r] for r in m.eval_at(x)]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det
