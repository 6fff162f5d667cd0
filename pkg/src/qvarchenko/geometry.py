"""Exact rational hyperplane arrangements in low dimension.

Regions are found by testing sign vectors for feasibility with
Fourier-Motzkin elimination over :class:`~fractions.Fraction`; every region
carries an interior witness point.  The module also builds Varchenko
matrices from first principles, distance enumerators, deletions,
restrictions and the intersection poset with its Moebius function.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .matrix import PolyMat
from .poly import PolyZ, qpow

Vector = Tuple[Fraction, ...]
Label = FrozenSet[int]


class ArrangementError(ValueError):
    """Degenerate arrangement or inconsistent region data."""


class LabelError(ArrangementError):
    """A region label matches no region (or more than one)."""

    def __init__(self, label, message: str):
        super().__init__(message)
        self.label = label


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Hyperplane:
    """The locus ``normal . x = offset``."""

    normal: Vector
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(_frac(c) for c in self.normal))
        object.__setattr__(self, "offset", _frac(self.offset))
        if not any(self.normal):
            raise ArrangementError("hyperplane with zero normal")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x)), Fraction(0)) - self.offset

    def side(self, x: Sequence) -> int:
        v = self.value(x)
        return (v > 0) - (v < 0)

    def key(self) -> tuple:
        """Scale-invariant identity of the locus."""
        lead = next(c for c in self.normal if c)
        return tuple(c / lead for c in self.normal) + (self.offset / lead,)

    def to_json_obj(self) -> dict:
        return {"normal": [str(c) for c in self.normal], "offset": str(self.offset)}


@dataclass(frozen=True)
class Arrangement:
    """Ordered hyperplanes; position ``i`` carries the label ``h_{i+1}``."""

    dim: int
    hyperplanes: Tuple[Hyperplane, ...]

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        seen = {}
        for i, h in enumerate(hs):
            if h.dim != self.dim:
                raise ArrangementError(f"hyperplane {i + 1} has dimension {h.dim}, expected {self.dim}")
            k = h.key()
            if k in seen:
                raise ArrangementError(f"hyperplanes {seen[k] + 1} and {i + 1} coincide")
            seen[k] = i

    def __len__(self):
        return len(self.hyperplanes)

    @classmethod
    def from_equations(cls, eqs: Iterable[Sequence]) -> "Arrangement":
        """Build from rows ``(a_1, ..., a_d, c)`` meaning ``a . x = c``."""
        hs = [Hyperplane(tuple(e[:-1]), e[-1]) for e in eqs]
        if not hs:
            raise ArrangementError("cannot infer dimension of an empty arrangement")
        return cls(hs[0].dim, tuple(hs))

    def permuted(self, order: Sequence[int]) -> "Arrangement":
        """New arrangement whose ``i``-th hyperplane is ``self[order[i]]``."""
        return Arrangement(self.dim, tuple(self.hyperplanes[k] for k in order))

    def sign_vector(self, x: Sequence) -> Tuple[int, ...]:
        return tuple(h.side(x) for h in self.hyperplanes)

    def to_json_obj(self) -> dict:
        return {"dim": self.dim, "hyperplanes": [h.to_json_obj() for h in self.hyperplanes]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Arrangement":
        try:
            dim = int(obj["dim"])
            hs = tuple(
                Hyperplane(tuple(Fraction(c) for c in h["normal"]), Fraction(h["offset"]))
                for h in obj["hyperplanes"]
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ArrangementError(f"malformed arrangement: {exc}") from None
        return cls(dim, hs)

    @classmethod
    def from_json(cls, text: str) -> "Arrangement":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class Region:
    sign_vector: Tuple[int, ...]
    witness: Vector = field(compare=False)


# --- Fourier-Motzkin --------------------------------------------------------

# An inequality (a, b) stands for the strict constraint a . x > b.
Ineq = Tuple[Vector, Fraction]


def _normalise(a: Sequence[Fraction], b: Fraction) -> Ineq:
    scale = max((abs(c) for c in a), default=0) or abs(b) or 1
    return tuple(c / scale for c in a), b / scale


def _eliminate(system: List[Ineq], var: int) -> List[Ineq]:
    lower, upper, out = [], [], set()
    for a, b in system:
        if a[var] > 0:
            lower.append((a, b))
        elif a[var] < 0:
            upper.append((a, b))
        else:
            out.add((a, b))
    for al, bl in lower:
        for au, bu in upper:
            wl, wu = -au[var], al[var]
            a = [wl * x + wu * y for x, y in zip(al, au)]
            a[var] = Fraction(0)
            out.add(_normalise(a, wl * bl + wu * bu))
    return sorted(out)


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def strict_feasible_point(system: Sequence[Ineq], dim: int) -> Optional[Vector]:
    """Exact point with ``a . x > b`` for every row, or ``None`` if none exists."""
    stages = [sorted({_normalise(a, b) for a, b in system})]
    for var in range(dim - 1, -1, -1):
        stages.append(_eliminate(stages[-1], var))
    if any(b >= 0 for _, b in stages[-1]):
        return None
    x = [Fraction(0)] * dim
    for var in range(dim):
        lo = hi = None
        for a, b in stages[dim - 1 - var]:
            c = a[var]
            if not c:
                continue
            rest = b - sum((a[j] * x[j] for j in range(var)), Fraction(0))
            bound = rest / c
            if c > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None and not lo < hi:
            raise ArithmeticError("Fourier-Motzkin back-substitution lost feasibility")
        x[var] = _pick(lo, hi)
    return tuple(x)


def _constraint(h: Hyperplane, s: int) -> Ineq:
    return tuple(s * c for c in h.normal), s * h.offset


def region_witness(a: Arrangement, signs: Sequence[int]) -> Optional[Vector]:
    return strict_feasible_point([_constraint(h, s) for h, s in zip(a.hyperplanes, signs)], a.dim)


# --- regions ---------------------------------------------------------------


def enumerate_regions(a: Arrangement) -> List[Region]:
    """All regions, one per feasible sign vector.

    Sign vectors are grown one hyperplane at a time and infeasible prefixes
    are pruned; the order is lexicographic with ``+1`` before ``-1``.
    """
    if len(a) > 20:
        raise ArrangementError("more than 20 hyperplanes")
    out: List[Region] = []
    k = len(a)

    def grow(prefix: List[int], system: List[Ineq], witness):
        if len(prefix) == k:
            out.append(Region(tuple(prefix), witness))
            return
        h = a.hyperplanes[len(prefix)]
        for s in (1, -1):
            sys2 = system + [_constraint(h, s)]
            w = strict_feasible_point(sys2, a.dim)
            if w is not None:
                prefix.append(s)
                grow(prefix, sys2, w)
                prefix.pop()

    grow([], [], tuple(Fraction(0) for _ in range(a.dim)))
    return out


def region_containing(a: Arrangement, point: Sequence) -> Region:
    pt = tuple(_frac(c) for c in point)
    sv = a.sign_vector(pt)
    if 0 in sv:
        raise ArrangementError(f"point {point} lies on hyperplane {sv.index(0) + 1}")
    return Region(sv, pt)


def sep_set(r1: Region, r2: Region) -> FrozenSet[int]:
    """0-based indices of the hyperplanes separating two regions."""
    if len(r1.sign_vector) != len(r2.sign_vector):
        raise ArrangementError("regions come from different arrangements")
    return frozenset(i for i, (s, t) in enumerate(zip(r1.sign_vector, r2.sign_vector)) if s != t)


def sep_count(r1: Region, r2: Region) -> int:
    return len(sep_set(r1, r2))


def label(region: Region, base: Region) -> Label:
    """1-based hyperplane labels of ``sep(base, region)``."""
    return frozenset(i + 1 for i in sep_set(base, region))


def varchenko_matrix(a: Arrangement, ordering: Sequence[Region]) -> PolyMat:
    """Matrix with ``(i, j)`` entry ``q ** #sep(R_i, R_j)``."""
    regions = enumerate_regions(a)
    if sorted(r.sign_vector for r in ordering) != sorted(r.sign_vector for r in regions):
        raise ArrangementError("ordering is not a permutation of the regions")
    n = len(ordering)
    powers = [qpow(k) for k in range(len(a) + 1)]
    return PolyMat._raw(
        n, n, tuple(tuple(powers[sep_count(r, s)] for s in ordering) for r in ordering)
    )


def distance_enumerator(a: Arrangement, base: Region, regions: Optional[Sequence[Region]] = None) -> PolyZ:
    """``sum_R t ** d(base, R)`` as a polynomial in ``t``."""
    regions = enumerate_regions(a) if regions is None else regions
    if base.sign_vector not in {r.sign_vector for r in regions}:
        raise ArrangementError("base is not a region of the arrangement")
    counts = [0] * (len(a) + 1)
    for r in regions:
        counts[sep_count(base, r)] += 1
    return PolyZ(counts)


def _as_base(a: Arrangement, base) -> Region:
    if isinstance(base, Region):
        return base
    return region_containing(a, base)


def parse_label(text) -> Label:
    """``"0"`` or ``""`` is the empty label; ``"134"`` is {1, 3, 4}."""
    if isinstance(text, (set, frozenset, tuple, list)):
        return frozenset(int(x) for x in text)
    s = str(text).strip()
    if s in ("", "0"):
        return frozenset()
    return frozenset(int(ch) for ch in s)


def match_ordering(a: Arrangement, labels: Sequence, base, regions: Optional[Sequence[Region]] = None) -> List[Region]:
    """Regions in the order given by their sep-set labels from ``base``.

    ``base`` is a :class:`Region` or a point inside it.  Every label must
    name exactly one region; otherwise :class:`LabelError` reports it.
    """
    regions = enumerate_regions(a) if regions is None else regions
    b = _as_base(a, base)
    by_label: Dict[Label, List[Region]] = {}
    for r in regions:
        by_label.setdefault(label(r, b), []).append(r)
    out, used = [], set()
    for raw in labels:
        lab = parse_label(raw)
        hits = by_label.get(lab, [])
        if len(hits) != 1:
            kind = "no" if not hits else "several"
            raise LabelError(lab, f"label {sorted(lab)} matches {kind} region(s)")
        if lab in used:
            raise LabelError(lab, f"label {sorted(lab)} used twice")
        used.add(lab)
        out.append(hits[0])
    return out


def realized_labels(a: Arrangement, labels: Sequence, base) -> Tuple[list, list]:
    """Split ``labels`` into those naming a region and those naming none."""
    b = _as_base(a, base)
    present = {label(r, b) for r in enumerate_regions(a)}
    hit, miss = [], []
    for raw in labels:
        (hit if parse_label(raw) in present else miss).append(raw)
    return hit, miss


def find_labeling(a: Arrangement, labels: Sequence, base) -> Optional[Tuple[int, ...]]:
    """A hyperplane order under which the labels are exactly the region labels.

    Returns ``order`` such that ``a.permuted(order)`` realizes ``labels``, or
    ``None`` if no relabelling does.  Brute force over permutations with a
    cheap degree-sequence prefilter.
    """
    b = _as_base(a, base)
    actual = [frozenset(sep_set(b, r)) for r in enumerate_regions(a)]
    wanted = {parse_label(x) for x in labels}
    if len(wanted) != len(actual):
        return None
    k = len(a)
    for perm in itertools.permutations(range(k)):
        # perm[i] = printed label (0-based) of hyperplane i
        mapped = {frozenset(perm[i] for i in s) for s in actual}
        if mapped == {frozenset(x - 1 for x in w) for w in wanted}:
            order = [0] * k
            for i, lab in enumerate(perm):
                order[lab] = i
            return tuple(order)
    return None


# --- deletion / restriction ------------------------------------------------


def deletion(a: Arrangement, k: int) -> Arrangement:
    """Drop the 0-based hyperplane ``k``."""
    return Arrangement(a.dim, a.hyperplanes[:k] + a.hyperplanes[k + 1:])


def restriction(a: Arrangement, k: int) -> Arrangement:
    """The arrangement induced on hyperplane ``k``, in affine coordinates on it."""
    h = a.hyperplanes[k]
    piv = next(i for i, c in enumerate(h.normal) if c)
    x0 = [Fraction(0)] * a.dim
    x0[piv] = h.offset / h.normal[piv]
    basis = []
    for j in range(a.dim):
        if j == piv:
            continue
        v = [Fraction(0)] * a.dim
        v[j] = Fraction(1)
        v[piv] = -h.normal[j] / h.normal[piv]
        basis.append(v)
    out, seen = [], set()
    for i, g in enumerate(a.hyperplanes):
        if i == k:
            continue
        normal = tuple(sum((g.normal[t] * v[t] for t in range(a.dim)), Fraction(0)) for v in basis)
        offset = g.offset - sum((g.normal[t] * x0[t] for t in range(a.dim)), Fraction(0))
        if not any(normal):
            continue  # parallel to h, hence disjoint from it
        hp = Hyperplane(normal, offset)
        if hp.key() in seen:
            continue
        seen.add(hp.key())
        out.append(hp)
    return Arrangement(a.dim - 1, tuple(out))


def region_count(a: Arrangement) -> int:
    if a.dim == 0:
        return 1
    return len(enumerate_regions(a))


# --- intersection poset ----------------------------------------------------


def _rank(rows: List[List[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class Flat:
    hyperplanes: FrozenSet[int]  # 0-based indices of hyperplanes containing it
    dim: int


@dataclass
class IntersectionPoset:
    ambient_dim: int
    elements: List[Flat]
    mobius: List[int]

    def leq(self, x: int, y: int) -> bool:
        """``x <= y`` iff flat ``y`` is contained in flat ``x``."""
        return self.elements[x].hyperplanes <= self.elements[y].hyperplanes

    def codim(self, x: int) -> int:
        return self.ambient_dim - self.elements[x].dim


def intersection_poset(a: Arrangement) -> IntersectionPoset:
    """All nonempty intersections, bottom (the whole space) first."""
    d = a.dim
    eqs = [list(h.normal) + [h.offset] for h in a.hyperplanes]

    def closure(subset: FrozenSet[int]) -> Optional[Flat]:
        rows = [eqs[i] for i in subset]
        r_aug = _rank(rows)
        r_lin = _rank([row[:-1] for row in rows])
        if r_aug != r_lin:
            return None
        full = frozenset(
            i for i in range(len(eqs)) if i in subset or _rank(rows + [eqs[i]]) == r_aug
        )
        return Flat(full, d - r_lin)

    bottom = Flat(frozenset(), d)
    flats = {bottom.hyperplanes: bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for f in frontier:
            for i in range(len(eqs)):
                if i in f.hyperplanes:
                    continue
                g = closure(f.hyperplanes | {i})
                if g is not None and g.hyperplanes not in flats:
                    flats[g.hyperplanes] = g
                    nxt.append(g)
        frontier = nxt
    elements = sorted(flats.values(), key=lambda f: (-f.dim, sorted(f.hyperplanes)))
    mobius: List[int] = []
    for y, fy in enumerate(elements):
        if y == 0:
            mobius.append(1)
            continue
        mobius.append(-sum(mobius[z] for z in range(y) if elements[z].hyperplanes < fy.hyperplanes))
    return IntersectionPoset(d, elements, mobius)


def poincare_polynomial(p: IntersectionPoset) -> PolyZ:
    """``sum_x |mu(x)| t ** codim(x)``; coefficients are the Betti numbers."""
    counts = [0] * (p.ambient_dim + 1)
    for x, mu in enumerate(p.mobius):
        counts[p.codim(x)] += abs(mu)
    return PolyZ(counts)
