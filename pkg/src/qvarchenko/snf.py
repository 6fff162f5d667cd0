"""Pipeline verification over Z[q] and an independent Smith normal form over Q[q].

Z[q] is not a principal ideal domain, so diagonal forms there are checked
rather than computed: a printed chain of unimodular factors is applied
exactly and the result compared entrywise.  The invariant factors over Q[q]
come from Euclidean elimination and serve as the cross-check.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .matrix import DimensionError, PolyMat, det_at, determinant, product
from .poly import ONE, PolyQ, PolyZ, Q, as_q, divides, polyq_divmod, render, valuation

Q_MINUS_ONE = Q - ONE
Q_PLUS_ONE = Q + ONE


def _factor_pairs(factors) -> List[Tuple[str, PolyMat]]:
    out = []
    for k, f in enumerate(factors):
        if isinstance(f, tuple):
            out.append(f)
        else:
            out.append((f"factor {k}", f))
    return out


def apply_pipeline(v: PolyMat, lefts: Sequence, rights: Sequence) -> PolyMat:
    """``(prod lefts) @ v @ (prod rights)``, exactly.

    Factors may be bare matrices or ``(name, matrix)`` pairs; a factor of the
    wrong size raises :class:`DimensionError` naming it.
    """
    n = v.rows
    for name, f in _factor_pairs(lefts) + _factor_pairs(rights):
        if f.shape != (n, n):
            raise DimensionError(f"{name} is {f.rows}x{f.cols} but the matrix is {n}x{n}")
    mats = [f for _, f in _factor_pairs(lefts)] + [v] + [f for _, f in _factor_pairs(rights)]
    return product(mats)


def is_claimed_diagonal(m: PolyMat, diag: Sequence) -> bool:
    """True iff ``m`` is diagonal with exactly the entries ``diag`` (no unit slack)."""
    if not m.is_square() or len(diag) != m.rows:
        return False
    return m.is_diagonal() and all(m[i, i] == d for i, d in enumerate(diag))


# --- Smith normal form over Q[q] ----------------------------------------------


def _clear_denominators(row: Sequence) -> List[PolyZ]:
    """Scale a row of rational polynomials by a positive integer into Z[q]."""
    den = 1
    for p in row:
        if isinstance(p, PolyQ):
            for c in p.coeffs:
                den = den * c.denominator // gcd(den, c.denominator)
    out = []
    for p in row:
        if isinstance(p, PolyQ):
            out.append(PolyZ([int(c * den) for c in p.coeffs]))
        else:
            out.append(p * den if den != 1 else p)
    return out


def _content(polys) -> int:
    g = 0
    for p in polys:
        for c in p.coeffs:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


def _pivot_key(p: PolyZ, i: int, j: int):
    return (p.degree, abs(p.lc), i, j)


class _Eliminator:
    """Row and column operations on an integer-coefficient working copy."""

    def __init__(self, rows: List[List[PolyZ]]):
        self.a = rows
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0

    def swap_rows(self, i, j):
        self.a[i], self.a[j] = self.a[j], self.a[i]

    def swap_cols(self, i, j):
        for row in self.a:
            row[i], row[j] = row[j], row[i]

    def _primitive_row(self, i, start):
        g = _content(self.a[i][start:])
        if g > 1:
            self.a[i][start:] = [PolyZ._raw(tuple(c // g for c in p.coeffs)) for p in self.a[i][start:]]

    def _primitive_col(self, j, start):
        g = _content(self.a[r][j] for r in range(start, self.m))
        if g > 1:
            for r in range(start, self.m):
                p = self.a[r][j]
                self.a[r][j] = PolyZ._raw(tuple(c // g for c in p.coeffs))

    @staticmethod
    def _multipliers(p: PolyZ, b: PolyZ):
        g = gcd(p.lc, b.lc)
        ca, cb = p.lc // g, b.lc // g
        if ca < 0:
            ca, cb = -ca, -cb
        return ca, cb

    def reduce_row(self, i, k):
        """Lower the degree of ``a[i][k]`` below the pivot's using row ``k``."""
        a = self.a
        p = a[k][k]
        while a[i][k] and a[i][k].degree >= p.degree:
            b = a[i][k]
            s = b.degree - p.degree
            ca, cb = self._multipliers(p, b)
            ri, rk = a[i], a[k]
            for j in range(k, self.n):
                x, y = ri[j], rk[j]
                if y:
                    ri[j] = x * ca - y.shift(s) * cb
                elif ca != 1:
                    ri[j] = x * ca
            self._primitive_row(i, k)

    def reduce_col(self, j, k):
        a = self.a
        p = a[k][k]
        while a[k][j] and a[k][j].degree >= p.degree:
            b = a[k][j]
            s = b.degree - p.degree
            ca, cb = self._multipliers(p, b)
            for r in range(k, self.m):
                x, y = a[r][j], a[r][k]
                if y:
                    a[r][j] = x * ca - y.shift(s) * cb
                elif ca != 1:
                    a[r][j] = x * ca
            self._primitive_col(j, k)

    def best_pivot(self, k):
        best = None
        for i in range(k, self.m):
            for j in range(k, self.n):
                p = self.a[i][j]
                if p:
                    key = _pivot_key(p, i, j)
                    if best is None or key < best:
                        best = key
        return best

    def step(self, k) -> Optional[PolyZ]:
        """Diagonalise row and column ``k``; returns the pivot or ``None`` if the rest is zero."""
        a = self.a
        while True:
            best = self.best_pivot(k)
            if best is None:
                return None
            _, _, i, j = best
            if i != k:
                self.swap_rows(i, k)
            if j != k:
                self.swap_cols(j, k)
            for r in range(k + 1, self.m):
                self.reduce_row(r, k)
            for c in range(k + 1, self.n):
                self.reduce_col(c, k)
            clear = all(not a[r][k] for r in range(k + 1, self.m)) and all(
                not a[k][c] for c in range(k + 1, self.n)
            )
            if not clear:
                continue
            p = a[k][k]
            if p.degree == 0:
                return p
            bad = self._non_multiple(k, p)
            if bad is None:
                return p
            # fold the offending row into row k; the next pass lowers the pivot
            r = bad
            a[k] = [x + y for x, y in zip(a[k], a[r])]

    def _non_multiple(self, k, p) -> Optional[int]:
        pq = p.to_q()
        for r in range(k + 1, self.m):
            for c in range(k + 1, self.n):
                x = self.a[r][c]
                if x and polyq_divmod(x, pq)[1]:
                    return r
        return None


def snf_over_field(m: PolyMat) -> List[PolyQ]:
    """Monic invariant factors ``d_1 | d_2 | ...`` of ``m`` over Q[q].

    Rows are kept in Z[q] by scaling with nonzero integers (units of Q[q]).
    Pivots are chosen by least degree, then least absolute leading
    coefficient, then position, so the run is deterministic.  A rectangular
    input gives ``min(rows, cols)`` factors, zeros last.
    """
    rows = [_clear_denominators(r) for r in m.tolist()]
    el = _Eliminator(rows)
    size = min(el.m, el.n)
    out: List[PolyQ] = []
    for k in range(size):
        p = el.step(k)
        if p is None:
            out.extend([PolyQ.zero()] * (size - k))
            break
        out.append(p.to_q().monic())
    return out


def is_divisibility_chain(diag: Sequence) -> bool:
    return all(divides(a, b) for a, b in zip(diag, diag[1:]))


def monic_normal(p) -> PolyQ:
    return as_q(p).monic()


# --- audits -----------------------------------------------------------------


def unimodularity_audit(factors: Sequence) -> List[PolyZ]:
    """Determinant of each factor; a valid Z[q] congruence needs every one to be +1 or -1."""
    out = []
    for name, f in _factor_pairs(factors):
        if not f.is_square():
            raise DimensionError(f"{name} is not square")
        out.append(determinant(f))
    return out


def is_unit(d: PolyZ) -> bool:
    return d == 1 or d == -1


def valuation_profile(diag: Sequence, at: PolyZ = Q_MINUS_ONE) -> Dict[int, int]:
    """Histogram of the exact ``at``-adic valuations of the diagonal entries."""
    hist: Dict[int, int] = {}
    for k, d in enumerate(diag):
        if not d:
            raise ValueError(f"diagonal entry {k} is zero")
        if isinstance(d, PolyQ):
            d = d.primitive_z()
        v = valuation(d, at)
        hist[v] = hist.get(v, 0) + 1
    return dict(sorted(hist.items()))


def profile_as_list(hist: Dict[int, int]) -> List[int]:
    if not hist:
        return []
    top = max(hist)
    return [hist.get(k, 0) for k in range(top + 1)]


# --- reports ----------------------------------------------------------------


@dataclass
class SnfReport:
    """Outcome of every check on one model.  ``notes`` lists the discrepancies."""

    model_id: str
    size: int
    pipeline_result: Optional[PolyMat] = None
    pipeline_factors: List[str] = field(default_factory=list)
    claimed_diag: List[PolyZ] = field(default_factory=list)
    pipeline_matches_claim: bool = False
    q_field_snf: List[PolyQ] = field(default_factory=list)
    oracle_matches_claim: bool = False
    oracle_varchenko_matches: Optional[bool] = None
    unimodularity: Dict[str, PolyZ] = field(default_factory=dict)
    determinant_consistent: Optional[bool] = None
    valuation_profile: Dict[int, int] = field(default_factory=dict)
    plus_one_profile: Dict[int, int] = field(default_factory=dict)
    betti: List[int] = field(default_factory=list)
    betti_matches: Optional[bool] = None
    data_notes: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.notes

    @property
    def status(self) -> str:
        return "verified" if self.ok else "verified-with-discrepancy"

    def to_json_obj(self) -> dict:
        def polys(seq):
            return [render(p) for p in seq]

        diag = None
        if self.pipeline_result is not None and self.pipeline_result.is_diagonal():
            diag = polys(self.pipeline_result.diag())
        return {
            "model": self.model_id,
            "size": self.size,
            "status": self.status,
            "pipeline": self.pipeline_factors,
            "pipeline_diagonal": diag,
            "pipeline_matches_claim": self.pipeline_matches_claim,
            "claimed_snf": polys(self.claimed_diag),
            "q_field_snf": polys(self.q_field_snf),
            "oracle_matches_claim": self.oracle_matches_claim,
            "oracle_varchenko_matches": self.oracle_varchenko_matches,
            "unimodularity": {k: render(v) for k, v in self.unimodularity.items()},
            "determinant_consistent": self.determinant_consistent,
            "valuation_profile": {str(k): v for k, v in self.valuation_profile.items()},
            "plus_one_profile": {str(k): v for k, v in self.plus_one_profile.items()},
            "betti": self.betti,
            "betti_matches": self.betti_matches,
            "data_notes": self.data_notes,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def pretty(self) -> str:
        lines = [f"{self.model_id}: {self.status} ({self.size} regions)"]
        lines.append(f"  pipeline {' '.join(self.pipeline_factors) or '-'}: "
                     f"{'matches claim' if self.pipeline_matches_claim else 'does not match claim'}")
        lines.append(f"  geometry oracle V_q: {_yes_no(self.oracle_varchenko_matches)}")
        lines.append(f"  Q[q] invariant factors agree with claim: {_yes_no(self.oracle_matches_claim)}")
        lines.append("  Q[q] invariant factors: " + _grouped(self.q_field_snf))
        lines.append("  unimodular factors: " + ", ".join(f"{k}={render(v)}" for k, v in self.unimodularity.items()))
        lines.append(f"  (q-1) profile {profile_as_list(self.valuation_profile)} "
                     f"vs Betti {self.betti}: {_yes_no(self.betti_matches)}")
        lines.append(f"  (q+1) profile {profile_as_list(self.plus_one_profile)} (informational)")
        for n in self.data_notes:
            lines.append(f"  data: {n}")
        for n in self.notes:
            lines.append(f"  DISCREPANCY: {n}")
        return "\n".join(lines)


def _yes_no(x) -> str:
    return "n/a" if x is None else ("yes" if x else "NO")


def _grouped(seq) -> str:
    """``[a, a, b]`` rendered as ``a x2, b x1`` in order of first appearance."""
    groups: List[list] = []
    for p in seq:
        if groups and groups[-1][0] == p:
            groups[-1][1] += 1
        else:
            groups.append([p, 1])
    return ", ".join(f"({render(p)}) x{c}" for p, c in groups)


def _diff_coords(a: PolyMat, b: PolyMat, limit: int = 5) -> List[Tuple[int, int]]:
    out = []
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != b[i, j]:
                out.append((i, j))
                if len(out) >= limit:
                    return out
    return out


def verify_model(spec, oracle: bool = True) -> SnfReport:
    """Run every check on a :class:`~qvarchenko.models.ModelSpec`.

    Discrepancies go into ``notes`` with coordinates; nothing is corrected.
    """
    from . import geometry

    v = spec.varchenko
    n = v.rows
    rep = SnfReport(model_id=spec.title, size=n, claimed_diag=list(spec.claimed_snf))
    rep.data_notes.extend(spec.notes)

    if not v.is_symmetric():
        rep.notes.append("V_q is not symmetric")
    if any(v[i, i] != 1 for i in range(n)):
        rep.notes.append("V_q has a diagonal entry other than 1")
    if len(spec.claimed_snf) != n:
        rep.notes.append(f"claimed diagonal has {len(spec.claimed_snf)} entries but V_q is {n}x{n}")

    if oracle:
        try:
            order = geometry.match_ordering(spec.arrangement, spec.region_labels, spec.base_point)
            ov = geometry.varchenko_matrix(spec.arrangement, order)
            total = geometry.region_count(spec.arrangement)
            if total != n:
                rep.oracle_varchenko_matches = False
                rep.notes.append(f"arrangement has {total} regions but V_q is {n}x{n}")
            else:
                rep.oracle_varchenko_matches = ov == v
                if not rep.oracle_varchenko_matches:
                    rep.notes.append(f"V_q differs from the geometry oracle at {_diff_coords(v, ov)}")
        except geometry.ArrangementError as exc:
            rep.oracle_varchenko_matches = False
            rep.notes.append(f"region labels do not fit the geometry: {exc}")

    lefts, rights = list(spec.left_pipeline), list(spec.right_pipeline)
    wrong = [(name, f.shape) for name, f in lefts + rights if f.shape != (n, n)]
    for name, shape in wrong:
        rep.notes.append(f"factor {name} is {shape[0]}x{shape[1]}, V_q is {n}x{n}")
    if wrong:
        # keep what can be applied so the report still shows the partial result
        lefts = [(k, f) for k, f in lefts if f.shape == (n, n)]
        rights = [(k, f) for k, f in rights if f.shape == (n, n)]
        rep.notes.append("pipeline applied without " + ", ".join(sorted({k for k, _ in wrong})))
    rep.pipeline_factors = [k for k, _ in lefts] + ["V"] + [k for k, _ in rights]
    rep.pipeline_result = apply_pipeline(v, lefts, rights)

    rep.pipeline_matches_claim = is_claimed_diagonal(rep.pipeline_result, spec.claimed_snf)
    if not rep.pipeline_matches_claim:
        res = rep.pipeline_result
        off = res.nonzero_offdiagonal()
        if off:
            rep.notes.append(f"pipeline result has {len(off)} nonzero off-diagonal entries, first at {off[:5]}")
        bad = [i for i in range(min(n, len(spec.claimed_snf))) if res[i, i] != spec.claimed_snf[i]]
        if bad:
            rep.notes.append(f"pipeline diagonal differs from the claim at positions {bad[:10]}")

    for name, f in lefts + rights:
        d = determinant(f)
        rep.unimodularity[name] = d
        if not is_unit(d):
            rep.notes.append(f"factor {name} has determinant {render(d)}, not a unit of Z[q]")

    rep.q_field_snf = snf_over_field(v)
    claimed_monic = [monic_normal(p) for p in spec.claimed_snf]
    rep.oracle_matches_claim = claimed_monic == rep.q_field_snf
    if not rep.oracle_matches_claim:
        rep.notes.append("Q[q] invariant factors differ from the claimed diagonal")

    if rep.pipeline_matches_claim:
        rep.determinant_consistent = all(
            abs(det_at(v, x)) == abs(_prod_at(spec.claimed_snf, x)) for x in (2, 3, 5)
        )
        if not rep.determinant_consistent:
            rep.notes.append("det V_q disagrees with the product of the claimed diagonal")
        verified = list(spec.claimed_snf)
    else:
        verified = list(rep.q_field_snf)

    if all(verified):
        rep.valuation_profile = valuation_profile(verified, Q_MINUS_ONE)
        rep.plus_one_profile = valuation_profile(verified, Q_PLUS_ONE)
    poset = geometry.intersection_poset(spec.arrangement)
    rep.betti = list(geometry.poincare_polynomial(poset).coeffs)
    rep.betti_matches = profile_as_list(rep.valuation_profile) == rep.betti
    if not rep.betti_matches:
        rep.notes.append(
            f"(q-1) valuation profile {profile_as_list(rep.valuation_profile)} "
            f"differs from Betti numbers {rep.betti}"
        )
    return rep


def _prod_at(diag, x):
    acc = 1
    for d in diag:
        acc *= d.eval(x)
    return acc
