"""Command line: build, verify, oracle, snf, poincare, list.

Exit status: 0 when every check passes, 2 when a discrepancy is found,
1 for usage and input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence, Tuple

from . import geometry
from .matrix import PolyMat
from .models import CATALOGUE, ModelSpec, get_model
from .poly import render
from .snf import SnfReport, is_divisibility_chain, snf_over_field, verify_model

OK, USAGE, DISCREPANCY = 0, 1, 2

# sizes swept by ``verify --all`` for the families that take n
ALL_SIZES = {"cyclic": range(3, 11), "dihedral": range(3, 7)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qvarchenko", description=__doc__.splitlines()[0])
    p.add_argument("verb", choices=["build", "verify", "oracle", "snf", "poincare", "list"])
    p.add_argument("--model", help="catalogue id, see `list`")
    p.add_argument("--n", type=int, help="size parameter for cyclic and dihedral")
    p.add_argument("--file", help="matrix JSON (snf) or arrangement JSON (oracle, poincare)")
    p.add_argument("--format", choices=["json", "csv", "pretty"], default="pretty")
    p.add_argument("--all", action="store_true", help="verify every catalogue model")
    return p


def _model(args) -> ModelSpec:
    if not args.model:
        raise UsageError("--model is required")
    try:
        return get_model(args.model, args.n)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0]) if exc.args else str(exc)) from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(path: str):
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _csv_rows(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# --- verbs ------------------------------------------------------------------


def cmd_list(args, out) -> int:
    if args.format == "json":
        out.write(json.dumps([
            {"id": e.id, "needs_n": e.needs_n, "description": e.description} for e in CATALOGUE.values()
        ], indent=2) + "\n")
    elif args.format == "csv":
        out.write(_csv_rows([["id", "needs_n", "description"]] + [
            [e.id, str(e.needs_n).lower(), e.description] for e in CATALOGUE.values()
        ]))
    else:
        for e in CATALOGUE.values():
            out.write(f"{e.id:<12} {'(needs --n)' if e.needs_n else '':<12} {e.description}\n")
    return OK


def _manifest(spec: ModelSpec) -> dict:
    return {
        "model": spec.title,
        "size": spec.size,
        "claimed_snf": [render(p) for p in spec.claimed_snf],
        "region_labels": ["".join(map(str, sorted(lab))) or "0" for lab in spec.region_labels],
    }


def cmd_build(args, out) -> int:
    spec = _model(args)
    v = spec.varchenko
    if args.format == "json":
        obj = _manifest(spec)
        obj["matrix"] = v.to_json_obj()
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    elif args.format == "csv":
        out.write(v.to_csv())
    else:
        man = _manifest(spec)
        out.write(f"{man['model']}: {v.rows}x{v.cols}\n")
        out.write("regions: " + " ".join(man["region_labels"]) + "\n")
        out.write("claimed diagonal: " + ", ".join(man["claimed_snf"]) + "\n")
        out.write(v.pretty() + "\n")
    return OK


def _selected_models(args) -> List[ModelSpec]:
    if args.all:
        specs = []
        for key, entry in CATALOGUE.items():
            sizes = ALL_SIZES.get(key, [None])
            specs.extend(get_model(key, n) for n in sizes)
        return specs
    return [_model(args)]


def _report_rows(reports: Sequence[SnfReport]) -> str:
    header = ["model", "size", "status", "pipeline_matches_claim", "oracle_matches_claim",
              "oracle_varchenko_matches", "betti_matches", "notes"]
    rows = [header]
    for r in reports:
        rows.append([r.model_id, r.size, r.status, r.pipeline_matches_claim, r.oracle_matches_claim,
                     r.oracle_varchenko_matches, r.betti_matches, " | ".join(r.notes)])
    return _csv_rows([[str(x).lower() if isinstance(x, bool) else x for x in row] for row in rows])


def cmd_verify(args, out) -> int:
    reports = [verify_model(s) for s in _selected_models(args)]
    if args.format == "json":
        objs = [r.to_json_obj() for r in reports]
        out.write(json.dumps(objs if args.all else objs[0], indent=2) + "\n")
    elif args.format == "csv":
        out.write(_report_rows(reports))
    else:
        out.write("\n".join(r.pretty() for r in reports) + "\n")
    return OK if all(r.ok for r in reports) else DISCREPANCY


def _arrangement_source(args) -> Tuple[geometry.Arrangement, Optional[ModelSpec]]:
    if args.file:
        try:
            return geometry.Arrangement.from_json_obj(_load_json(args.file)), None
        except geometry.ArrangementError as exc:
            raise UsageError(f"{args.file}: {exc}") from None
    spec = _model(args)
    return spec.arrangement, spec


def cmd_oracle(args, out) -> int:
    arr, spec = _arrangement_source(args)
    regions = geometry.enumerate_regions(arr)
    if spec is not None:
        try:
            order = geometry.match_ordering(arr, spec.region_labels, spec.base_point, regions)
        except geometry.LabelError as exc:
            raise UsageError(f"labels do not fit the arrangement: {exc}") from None
        base = geometry.region_containing(arr, spec.base_point)
    else:
        order = regions
        base = regions[0]
    v = geometry.varchenko_matrix(arr, order)
    enum = geometry.distance_enumerator(arr, base, regions)
    verdict = None
    if spec is not None:
        verdict = len(order) == len(regions) and v == spec.varchenko
    if args.format == "json":
        obj = {
            "regions": len(regions),
            "distance_enumerator": render(enum, "t"),
            "labels": ["".join(map(str, sorted(geometry.label(r, base)))) or "0" for r in order],
            "matrix": v.to_json_obj(),
        }
        if verdict is not None:
            obj["matches_closed_form"] = verdict
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    elif args.format == "csv":
        out.write(v.to_csv())
    else:
        out.write(f"regions: {len(regions)}\n")
        out.write(f"distance enumerator: {render(enum, 't')}\n")
        if verdict is not None:
            out.write(f"matches closed form: {'yes' if verdict else 'NO'}\n")
        out.write(v.pretty() + "\n")
    return DISCREPANCY if verdict is False else OK


def cmd_snf(args, out) -> int:
    if not args.file:
        raise UsageError("snf needs --file <matrix.json>")
    try:
        m = PolyMat.from_json_obj(_load_json(args.file))
    except ValueError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    if not m.is_square():
        raise UsageError(f"{args.file}: matrix is {m.rows}x{m.cols}, expected square")
    factors = snf_over_field(m)
    chain = is_divisibility_chain(factors)
    texts = [render(p) for p in factors]
    if args.format == "json":
        out.write(json.dumps({"invariant_factors": texts, "divisibility_chain": chain}) + "\n")
    elif args.format == "csv":
        out.write(_csv_rows([["index", "factor"]] + [[i, t] for i, t in enumerate(texts)]))
    else:
        for i, t in enumerate(texts):
            out.write(f"d{i + 1} = {t}\n")
        out.write(f"divisibility chain: {'yes' if chain else 'NO'}\n")
    return OK if chain else DISCREPANCY


def cmd_poincare(args, out) -> int:
    arr, _ = _arrangement_source(args)
    poly = geometry.poincare_polynomial(geometry.intersection_poset(arr))
    coeffs = list(poly.coeffs)
    if args.format == "json":
        out.write(json.dumps({"poincare": render(poly, "t"), "betti": coeffs}) + "\n")
    elif args.format == "csv":
        out.write(_csv_rows([["degree", "betti"]] + [[k, c] for k, c in enumerate(coeffs)]))
    else:
        out.write(f"{render(poly, 't')}\n")
    return OK


VERBS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "snf": cmd_snf,
    "poincare": cmd_poincare,
    "list": cmd_list,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return VERBS[args.verb](args, out)
    except UsageError as exc:
        print(f"qvarchenko: error: {exc}", file=sys.stderr)
        return USAGE
    except geometry.ArrangementError as exc:
        print(f"qvarchenko: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
