"""``sectavg`` command-line entry point.

Exit codes: 0 success, 1 computation error (or a failed reproduction
check), 2 usage error.  All randomness flows from ``--seed`` so the same
arguments always produce the same bytes.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import sys
from pathlib import Path

from . import exact as ex
from . import io as pio
from .errors import GeometryError, PopulationCapExceeded, UnknownExample
from .fragmentation import fragment_recursion
from .gallery import builtin_example, example_names
from .polytope import Polytope
from .section import average_vertices_exact, average_vertices_sweep
from .tiling import GridPlane, plane_contains_lattice_point, reports_to_csv, tiling_convergence
from .zonotope import GeneratorSet, build_zonotope, coplanarity_hypergraph, predict_lambda

FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}")


def _rat_list(s: str) -> list:
    try:
        return [ex.rat(x) for x in s.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {s!r}")


def _params(tokens: list[str]) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"example parameters look like key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        try:
            out[k] = int(v)
        except ValueError:
            out[k] = v
    return out


def _load_any(spec: str):
    if Path(spec).exists():
        return pio.load(spec)
    try:
        return builtin_example(spec)
    except UnknownExample:
        raise UsageError(f"{spec!r} is neither a file nor a built-in example") from None


def _load_polytope(spec: str) -> Polytope:
    """A JSON file, or the name of a built-in polytope when no such file exists."""
    obj = _load_any(spec)
    if not isinstance(obj, Polytope):
        obj = build_zonotope(obj)
    return obj


def _load_generators(spec: str) -> GeneratorSet:
    obj = _load_any(spec)
    if not isinstance(obj, GeneratorSet):
        raise UsageError(f"{spec} does not hold a generator list")
    return obj


def _rows_csv(rows: list[dict], columns: list[str]) -> str:
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _json(d) -> str:
    return pio.to_json(d) + "\n"


def cmd_avg(args) -> str:
    P = _load_polytope(args.polytope)
    z = _rat_list(args.dir)
    if len(z) != P.dim:
        raise UsageError(f"--dir needs {P.dim} components")
    if args.sweep:
        est = average_vertices_sweep(P, z, args.sweep, seed=args.seed, workers=args.threads)
        d = {"value": est.mean, "stderr": est.stderr, "samples": est.n, "method": "sweep"}
    else:
        d = {"value": ex.format_rat(average_vertices_exact(P, z)), "method": "exact"}
    d["seed"] = args.seed
    return _json(d)


def cmd_zono(args) -> str:
    G = _load_generators(args.generators)
    show_all = not (args.hypergraph or args.predict_lambda or args.build)
    d: dict = {"generators": len(G), "seed": args.seed}
    H = coplanarity_hypergraph(G)
    if args.hypergraph or show_all:
        d["hypergraph"] = {
            "edges": [sorted(e) for e in H.edges],
            "degrees": list(H.degrees),
        }
    if args.predict_lambda or show_all:
        pred = predict_lambda(H)
        d["constant"] = pred.constant
        d["lambda"] = pred.lam
    if args.build:
        P = build_zonotope(G)
        d["zonotope"] = pio.polytope_to_dict(P)
        d["vertices"] = P.n_vertices
        d["facet_census"] = {str(k): v for k, v in sorted(P.facet_census().items())}
    return _json(d)


def cmd_example(args) -> str:
    if args.name == "list":
        return "\n".join(example_names()) + "\n"
    obj = builtin_example(args.name, **_params(args.params))
    return pio.dumps(obj) + "\n"


FRAGMENT_COLUMNS = ["step", "mean_V", "stderr", "n_fragments"]


def cmd_fragment(args) -> str:
    P = _load_polytope(args.polytope)
    series = fragment_recursion(P, args.steps, args.policy, seed=args.seed, workers=args.threads)
    rows = [
        {"step": p.step, "mean_V": repr(float(p.mean_V)), "stderr": repr(float(p.stderr)), "n_fragments": p.n_fragments}
        for p in series
    ]
    if args.format == "csv":
        return _rows_csv(rows, FRAGMENT_COLUMNS)
    return _json({"policy": args.policy, "seed": args.seed, "series": rows})


def cmd_tiling(args) -> str:
    normal = _int_list(args.normal)
    if len(normal) != 3:
        raise UsageError("--normal needs 3 integers")
    try:
        offset = ex.rat(args.offset)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad offset {args.offset!r}")
    L = GridPlane.make(normal, offset)
    windows = _int_list(args.series) if args.series else [args.window]
    reports = tiling_convergence(L, windows)
    if args.format == "csv":
        return reports_to_csv(reports)
    return _json({
        "normal": list(L.normal),
        "offset": ex.format_rat(L.offset),
        "lattice_point": plane_contains_lattice_point(L),
        "series": [{**r.row(), "excluded": r.excluded} for r in reports],
        "average": ex.format_rat(reports[-1].average),
    })


def cmd_verify(args) -> tuple[str, int]:
    from .verify import format_table, run_all

    only = set(_int_list(args.only)) if args.only else None
    results = run_all(seed=args.seed, only=only)
    if args.format == "json":
        text = _json([
            {"check": r.number, "check_name": r.label, "passed": r.passed, "detail": r.detail}
            for r in results
        ])
    else:
        text = format_table(results) + "\n"
    return text, 0 if all(r.passed for r in results) else 1


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--seed", type=int, default=dflt(0), help="master seed (default 0)")
    p.add_argument("--out", default=dflt("-"), help="output file, '-' for stdout; 'csv' or 'json' select a format")
    p.add_argument("--format", choices=FORMATS, default=dflt(None), help="output format")
    p.add_argument("--threads", type=int, default=dflt(1), help="worker count for sampling (default 1)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sectavg", description="Cross-section vertex averages of convex polytopes.")
    _global_flags(p, suppress=False)
    # the same flags after the subcommand; SUPPRESS keeps them from clobbering earlier values
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("avg", parents=[common], help="average section vertex count in one direction")
    a.add_argument("--polytope", required=True, help="polytope JSON file or built-in example name")
    a.add_argument("--dir", required=True, help="direction, e.g. 1,1,1 or 1/2,3,-1")
    g = a.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact edge formula (default)")
    g.add_argument("--sweep", type=int, metavar="N", help="Monte Carlo sweep with N levels")
    a.set_defaults(func=cmd_avg)

    z = sub.add_parser("zono", parents=[common], help="coplanarity hypergraph and constant-A prediction")
    z.add_argument("--generators", required=True, help="generator JSON file or built-in generator example")
    z.add_argument("--hypergraph", action="store_true")
    z.add_argument("--predict-lambda", action="store_true")
    z.add_argument("--build", action="store_true", help="include the zonotope itself")
    z.set_defaults(func=cmd_zono)

    e = sub.add_parser("example", parents=[common], help="write a gallery example as JSON ('list' to list names)")
    e.add_argument("name")
    e.add_argument("params", nargs="*", help="key=value parameters, e.g. k=4")
    e.set_defaults(func=cmd_example)

    f = sub.add_parser("fragment", parents=[common], help="random-cut fragmentation series")
    f.add_argument("--polytope", required=True)
    f.add_argument("--steps", type=int, default=5)
    f.add_argument("--policy", default="paths:10000", help="full | paths:K | uniform:K")
    f.set_defaults(func=cmd_fragment)

    t = sub.add_parser("tiling", parents=[common], help="average tile vertex count of a grid plane")
    t.add_argument("--normal", required=True, help="integer normal, e.g. 1,2,3")
    t.add_argument("--offset", required=True, help="rational offset, e.g. 1/2")
    t.add_argument("--window", type=int, default=100, help="half-size m of the window [-m, m]^3")
    t.add_argument("--series", help="comma-separated increasing windows")
    t.set_defaults(func=cmd_tiling)

    v = sub.add_parser("verify-paper", parents=[common], help="run every reproduction check")
    v.add_argument("--only", help="comma-separated check numbers")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.out in ("csv", "json"):
        args.format = args.format or args.out
        args.out = "-"
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        res = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (GeometryError, UnknownExample, PopulationCapExceeded, ValueError, OSError) as exc:
        print(f"sectavg: error: {exc}", file=sys.stderr)
        return 1
    text, code = res if isinstance(res, tuple) else (res, 0)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
