"""Command-line front end.

Subcommands::

    classify          run a built-in or configured pipeline, emit the report
    invariants        print the invariant table, symbolically or at a point
    check-multidegree admissibility verdict for an integer degree sequence
    verify-table      re-check the embedded classification table
    admissible-types  enumerate integer solutions of the dimension relation

Exit codes: 0 success/pass, 1 expectation or check failure, 2 usage or
configuration error.  JSON reports are deterministic; the metadata header
(version) is excluded from golden comparison via ``--expect``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .config import TransformationConfig
from .invariants import (
    multidegree_of,
    pluridegrees,
    reduction_table,
    solve_invariants,
)
from .multidegree import Multidegree, admissible_types, multidegree_admissible
from .pipeline import (
    BUILTIN_STAGES,
    PipelineSpec,
    run_pipeline,
)
from .classification_table import verify_classification_table

_CONFIGS = {
    "cubic-p6": TransformationConfig.cubic_p6,
    "cubo-cubic-p7": TransformationConfig.cubo_cubic_p7,
}


class UsageError(Exception):
    pass


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )
    parser.add_argument(
        "--expect",
        metavar="PATH",
        help="golden JSON report to compare against; mismatch exits 1",
    )
    parser.add_argument(
        "--d2-threshold",
        type=int,
        choices=(1, 3),
        default=3,
        help="lower bound asserted for d2 in the log-general inequalities",
    )
    parser.add_argument(
        "--bound-delta",
        type=int,
        default=32,
        metavar="B",
        help="search bound on delta1, delta2 for type enumeration",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cremona-sieve",
        description="exact classification sieves for special Cremona transformations",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="run a classification pipeline")
    p.add_argument("--pipeline", help=f"built-in pipeline: {', '.join(BUILTIN_STAGES)}")
    p.add_argument("--config", metavar="PATH", help="JSON or TOML pipeline spec")
    p.add_argument("--stage", type=int, help="print a single stage report by index")
    _add_common(p)

    p = sub.add_parser("invariants", help="print the invariant table")
    p.add_argument("--pipeline", required=True)
    p.add_argument("--lambda", dest="lam", type=int, help="degree of the base locus")
    p.add_argument("--genus", type=int, help="sectional genus of the base locus")
    p.add_argument("--nu", type=int, help="number of blown-up points of the reduction")
    _add_common(p)

    p = sub.add_parser("check-multidegree", help="admissibility of a degree sequence")
    p.add_argument("sequence", help="comma-separated integers, e.g. 1,3,9,14,12,5,1")
    _add_common(p)

    p = sub.add_parser("verify-table", help="re-check the classification table")
    _add_common(p)

    p = sub.add_parser("admissible-types", help="enumerate admissible types")
    p.add_argument("--n", type=int, help="fix the ambient dimension")
    p.add_argument("--r", type=int, help="fix the base locus dimension")
    _add_common(p)

    return parser


def _with_meta(payload: dict) -> dict:
    return {"meta": {"version": __version__}, **payload}


def _strip_meta(payload: dict) -> dict:
    return {k: v for k, v in payload.items() if k != "meta"}


def _emit_json(payload: dict) -> None:
    print(json.dumps(_with_meta(payload), indent=2))


def _check_expect(payload: dict, path: str) -> int:
    expected = json.loads(Path(path).read_text())
    if _strip_meta(expected) == _strip_meta(payload):
        return 0
    print(f"report does not match golden file {path}", file=sys.stderr)
    return 1


def _fmt_value(v: Fraction) -> str:
    return str(int(v)) if v.denominator == 1 else str(v)


def cmd_classify(args) -> int:
    if bool(args.pipeline) == bool(args.config):
        raise UsageError("exactly one of --pipeline and --config is required")
    if args.pipeline:
        if args.pipeline not in BUILTIN_STAGES:
            raise UsageError(
                f"unknown pipeline {args.pipeline!r}; known: {', '.join(BUILTIN_STAGES)}"
            )
        spec = PipelineSpec(
            pipeline=args.pipeline,
            d2_threshold=args.d2_threshold,
            delta_bound=args.bound_delta,
        )
    else:
        try:
            spec = PipelineSpec.from_file(args.config)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"bad pipeline config {args.config}: {exc}") from exc
    report = run_pipeline(spec)

    if args.stage is not None:
        if not (0 <= args.stage < len(report.stages)):
            raise UsageError(
                f"stage index {args.stage} out of range 0..{len(report.stages) - 1}"
            )
        stage = report.stages[args.stage]
        payload = stage.to_dict()
        if args.format == "json":
            _emit_json(payload)
        elif args.format == "csv":
            print("stage,lambda,g,nu")
            for t in stage.survivors:
                nu = t[2] if len(t) > 2 else ""
                print(f"{stage.name},{t[0]},{t[1]},{nu}")
        else:
            print(f"stage {args.stage}: {stage.name} [{stage.mode}]")
            print(f"  filters: {', '.join(stage.filters) or '-'}")
            print(f"  in = {stage.input_count}, out = {stage.output_count}")
            print(f"  survivors: {', '.join(str(t) for t in stage.survivors) or '-'}")
        return _check_expect(payload, args.expect) if args.expect else 0

    payload = report.to_dict()
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        print("stage,lambda,g,nu")
        for stage in report.stages:
            for t in stage.survivors:
                nu = t[2] if len(t) > 2 else ""
                print(f"{stage.name},{t[0]},{t[1]},{nu}")
    else:
        print(f"pipeline {report.pipeline}")
        for i, stage in enumerate(report.stages):
            print(
                f"  [{i:2d}] {stage.name:36s} {stage.mode:6s} "
                f"in = {stage.input_count:5d}  out = {stage.output_count:5d}"
            )
        for branch, survivors in report.branches.items():
            shown = ", ".join(str(t) for t in survivors) or "-"
            print(f"  branch {branch}: {shown}")
        for f in report.finalists:
            print(
                f"  finalist {tuple(f['tuple'])}: {f['label']} "
                f"(pluridegrees {tuple(f['pluridegrees'])}, "
                f"multidegree {tuple(f['multidegree'])})"
            )
    return _check_expect(payload, args.expect) if args.expect else 0


def cmd_invariants(args) -> int:
    if args.pipeline not in _CONFIGS:
        raise UsageError(f"unknown pipeline {args.pipeline!r}")
    if (args.lam is None) != (args.genus is None):
        raise UsageError("--lambda and --genus must be given together")
    cfg = _CONFIGS[args.pipeline]()
    table = solve_invariants(cfg)
    threefold = table if table.section is None else table.section
    md = multidegree_of(cfg, table)
    reduction = reduction_table(threefold)
    d = pluridegrees(reduction)

    if args.lam is None:
        lines = {name: str(p) for name, p in table.entries.items()}
        if table.section is not None:
            lines.update({f"section.{n}": str(p) for n, p in table.section.entries.items()})
        payload = {
            "pipeline": args.pipeline,
            "entries": lines,
            "multidegree": [str(e) for e in md.entries],
            "pluridegrees": [str(p) for p in d],
        }
    else:
        lam, g = args.lam, args.genus
        if not (3 <= lam <= cfg.lambda_max):
            print(
                f"warning: lambda = {lam} outside [3, {cfg.lambda_max}]",
                file=sys.stderr,
            )
        point = {"lambda": lam, "g": g, "nu": args.nu if args.nu is not None else 0}
        values = {n: _fmt_value(p.eval_at(point)) for n, p in table.entries.items()}
        if table.section is not None:
            values.update(
                {f"section.{n}": _fmt_value(p.eval_at(point)) for n, p in table.section.entries.items()}
            )
        payload = {
            "pipeline": args.pipeline,
            "lambda": lam,
            "genus": g,
            "nu": args.nu if args.nu is not None else 0,
            "entries": values,
            "multidegree": [int(x) for x in md.at(lam, g).entries],
            "pluridegrees": [_fmt_value(p.eval_at(point)) for p in d],
        }

    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        print("name,value")
        for name, v in payload["entries"].items():
            print(f"{name},{v}")
    else:
        for name, v in payload["entries"].items():
            print(f"{name} = {v}")
        print("multidegree =", ", ".join(str(x) for x in payload["multidegree"]))
        print("pluridegrees =", ", ".join(str(x) for x in payload["pluridegrees"]))
    return _check_expect(payload, args.expect) if args.expect else 0


def cmd_check_multidegree(args) -> int:
    try:
        entries = tuple(int(tok.strip()) for tok in args.sequence.split(","))
    except ValueError as exc:
        raise UsageError(f"non-integer token in {args.sequence!r}") from exc
    if not entries:
        raise UsageError("empty degree sequence")
    violations = multidegree_admissible(Multidegree(entries))
    payload = {
        "multidegree": list(entries),
        "admissible": not violations,
        "violations": violations,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        if violations:
            print("fail")
            for v in violations:
                print(f"  {v}")
        else:
            print("pass")
    if args.expect:
        return _check_expect(payload, args.expect)
    return 0 if not violations else 1


def cmd_verify_table(args) -> int:
    results = verify_classification_table()
    payload = {"rows": results}
    if args.format == "json":
        _emit_json(payload)
    else:
        for r in results:
            verdict = r["admissible"] and r["matches"] is not False
            line = (
                f"row {r['row']:>4s}  n={r['n']}  r={r['r']}  "
                f"multidegree {','.join(str(x) for x in r['multidegree'])}  "
            )
            if r["recomputed"] is not None:
                line += f"recomputed {','.join(str(x) for x in r['recomputed'])}  "
            line += "PASS" if verdict else "FAIL"
            print(line)
    ok = all(r["admissible"] and r["matches"] is not False for r in results)
    if args.expect:
        return _check_expect(payload, args.expect)
    return 0 if ok else 1


def cmd_admissible_types(args) -> int:
    types = admissible_types(n=args.n, r=args.r, delta_bound=args.bound_delta)
    payload = {
        "types": [
            {
                "n": t.n,
                "delta1": t.delta1,
                "delta2": t.delta2,
                "dimB": t.dim_b,
                "dimB_prime": t.dim_b_prime,
            }
            for t in types
        ]
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        print("n,delta1,delta2,dimB,dimB_prime")
        for t in types:
            print(f"{t.n},{t.delta1},{t.delta2},{t.dim_b},{t.dim_b_prime}")
    else:
        for t in types:
            print(
                f"n={t.n}  type=({t.delta1},{t.delta2})  "
                f"dimB={t.dim_b}  dimB'={t.dim_b_prime}"
            )
    return _check_expect(payload, args.expect) if args.expect else 0


_COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "check-multidegree": cmd_check_multidegree,
    "verify-table": cmd_verify_table,
    "admissible-types": cmd_admissible_types,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
