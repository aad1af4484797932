"""Command-line front end: ``solve``, ``verify``, ``generate`` and ``bench``.

Exit codes: 0 solved, 1 usage or parse error, 2 infeasible (or an invalid
solution under ``verify``), 3 state budget or time limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import generators as gen
from .bits import mask_of
from .graph import ParseError, parse_graph
from .reductions import ALGORITHMS, SolverConfig, solve
from .report import build_report, error_report
from .solution import (
    INFEASIBLE,
    GroupedSolution,
    ResourceExceeded,
    StateBudgetExceeded,
    TimeLimitExceeded,
    verify_solution,
)
from .vcdp import DEFAULT_STATE_BUDGET

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3

BENCH_COLUMNS = ["instance", "n", "m", "cover-kind", "cover-size", "r", "algo", "k*",
                 "states", "seconds", "status"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as "infeasible"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(path: str, fmt: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text, fmt)


def _guess_format(path: str) -> str:
    return "dimacs" if path.endswith((".dimacs", ".col")) else "edge-list"


def _resource_kind(exc: ResourceExceeded) -> str:
    cause = getattr(exc, "cause", exc)
    return "time" if isinstance(cause, TimeLimitExceeded) else "budget"


def _emit_error(args, kind: str, message: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(error_report(kind, message)))
    else:
        print(f"error: {message}", file=sys.stderr)


def cmd_solve(args) -> int:
    try:
        g = _read_graph(args.input, args.format)
    except (ParseError, UsageError, ValueError) as exc:
        _emit_error(args, "parse", str(exc))
        return EXIT_USAGE
    config = SolverConfig(state_budget=args.state_budget, time_limit=args.time_limit)
    try:
        out = solve(g, args.r, k_bound=args.k, algo=args.algo, config=config)
    except ResourceExceeded as exc:
        _emit_error(args, _resource_kind(exc), str(exc))
        return EXIT_BUDGET
    except ValueError as exc:
        _emit_error(args, "usage", str(exc))
        return EXIT_USAGE
    report = build_report(out, args.r)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print("infeasible" if out.min_units is None else f"k*={out.min_units}")
        print(f"units: {report['units']}")
        cover = report["cover"]
        print("cover: none" if cover is None else f"cover: {cover['kind']} size={cover['size']} {cover['members']}")
        print(f"algorithm: {out.algorithm}")
        print(f"states: {report['states']}")
        print(f"seconds: {report['seconds']:.3f}")
        if report["decision"] is not None:
            print(report["decision"])
    return EXIT_INFEASIBLE if out.status == INFEASIBLE else EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.input, args.format)
        with open(args.solution) as fh:
            sol = GroupedSolution.from_json(json.load(fh))
    except OSError as exc:
        print(f"error: cannot read {args.solution}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, UsageError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bad = verify_solution(g, sol)
    if bad is None:
        print(f"valid: {sol.k} units of size {sol.r}")
        return EXIT_OK
    print(f"invalid: {bad}")
    return EXIT_INFEASIBLE


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _parse_classes(text: str):
    """``"3:0,1;2:1"`` is a class of 3 twins on {0, 1} and one of 2 on {1}."""
    out = []
    for part in text.split(";"):
        if not part.strip():
            continue
        size, _, attach = part.partition(":")
        try:
            out.append((int(size), _int_list(attach)))
        except ValueError:
            raise UsageError(f"bad class description {part!r}") from None
    return out


def _split_source(args):
    if args.source:
        g = _read_graph(args.source, _guess_format(args.source))
        if args.clique is None:
            raise UsageError("--source needs --clique")
        return g, mask_of(_int_list(args.clique))
    return gen.random_split_source(args.n_clique, args.n_indep, args.p, args.seed)


def _build_instance(args):
    name = args.generator
    if name in ("split-k", "split-r", "bip-t", "bip-paths"):
        g, clique = _split_source(args)
        fn = {"split-k": gen.gen_split_k_copies, "split-r": gen.gen_split_r_copies,
              "bip-t": gen.gen_bipartite_t_gadget, "bip-paths": gen.gen_bipartite_paths}[name]
        return fn(g, clique, args.r, args.k, seed=None if args.source else args.seed)
    if name == "sat":
        if args.cnf:
            with open(args.cnf) as fh:
                cnf = gen.parse_dimacs_cnf(fh.read())
            seed = None
        elif args.sample:
            cnf, seed = gen.SAMPLE_RESTRICTED_CNF, None
        else:
            cnf, seed = gen.random_cnf(args.vars, args.clauses, 3, args.seed), args.seed
        return gen.gen_from_3sat(cnf, args.r, seed=seed)
    if name == "planted-vc":
        return gen.planted_vc_instance(args.n, args.nu, args.p, args.seed)
    if name == "planted-tc":
        return gen.planted_tc_instance(args.n_cover, _parse_classes(args.classes), args.p, args.seed)
    raise UsageError(f"unknown generator {name!r}")


def cmd_generate(args) -> int:
    try:
        inst = _build_instance(args)
    except (UsageError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        out_dir = os.path.dirname(args.out)
        if out_dir:
            os.makedirs(out_dir, exist_ok=True)
        graph_path, meta_path = inst.write(args.out)
        where = f"{graph_path} + {meta_path}"
    else:
        where = "(not written)"
    print(f"{inst.reduction}: n={inst.graph.n} m={inst.graph.m} r={inst.r} k={inst.k} "
          f"expected={inst.expected} -> {where}")
    return EXIT_OK


def _bench_row(path: str, row: dict, config: SolverConfig) -> dict:
    r = int(row["r"])
    algo = (row.get("algo") or "auto").strip()
    fmt = (row.get("format") or "").strip() or _guess_format(path)
    k = row.get("k")
    k = int(k) if k not in (None, "") else None
    out_row = {c: "" for c in BENCH_COLUMNS}
    out_row.update(instance=row["instance"], r=r, algo=algo)
    try:
        g = _read_graph(path, fmt)
        out_row.update(n=g.n, m=g.m)
        out = solve(g, r, k_bound=k, algo=algo, config=config)
    except StateBudgetExceeded:
        out_row["status"] = "budget"
        return out_row
    except ResourceExceeded as exc:
        out_row["status"] = _resource_kind(exc)
        return out_row
    except (ParseError, UsageError, ValueError) as exc:
        out_row["status"] = f"error: {exc}"
        return out_row
    if out.cover is not None:
        out_row.update({"cover-kind": out.cover.kind, "cover-size": out.cover.size})
    out_row.update({"algo": out.algorithm, "k*": "" if out.min_units is None else out.min_units,
                    "states": int(out.stats.get("states", 0)),
                    "seconds": f"{out.stats.get('seconds', 0.0):.4f}", "status": out.status})
    return out_row


def cmd_bench(args) -> int:
    try:
        with open(args.suite, newline="") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        print(f"error: cannot read {args.suite}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    base = os.path.dirname(os.path.abspath(args.suite))
    config = SolverConfig(state_budget=args.state_budget, time_limit=args.time_limit)
    results = []
    for row in rows:
        if "instance" not in row or "r" not in row:
            print("error: suite needs 'instance' and 'r' columns", file=sys.stderr)
            return EXIT_USAGE
        path = row["instance"]
        if not os.path.isabs(path):
            path = os.path.join(base, path)
        results.append(_bench_row(path, row, config))
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(results)
    print(f"wrote {len(results)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grouped-domination", description="Exact r-grouped domination solver.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="minimum number of units")
    s.add_argument("--input", required=True)
    s.add_argument("--format", choices=["edge-list", "dimacs"], default="edge-list")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--algo", choices=ALGORITHMS, default="auto")
    s.add_argument("--json", action="store_true")
    s.add_argument("--time-limit", type=float)
    s.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a unit family")
    v.add_argument("--input", required=True)
    v.add_argument("--format", choices=["edge-list", "dimacs"], default="edge-list")
    v.add_argument("--solution", required=True)
    v.set_defaults(func=cmd_verify)

    gp = sub.add_parser("generate", help="build an instance")
    gsub = gp.add_subparsers(dest="generator", required=True, parser_class=_Parser)
    for name in ("split-k", "split-r", "bip-t", "bip-paths"):
        x = gsub.add_parser(name)
        x.add_argument("--source", help="split source graph (edge list)")
        x.add_argument("--clique", help="comma-separated clique part of --source")
        x.add_argument("--n-clique", type=int, default=3)
        x.add_argument("--n-indep", type=int, default=3)
        x.add_argument("--p", type=float, default=0.4)
        x.add_argument("--r", type=int, required=True)
        x.add_argument("--k", type=int, required=True)
    x = gsub.add_parser("sat")
    x.add_argument("--cnf", help="DIMACS cnf file")
    x.add_argument("--sample", action="store_true", help="the built-in four-variable formula")
    x.add_argument("--vars", type=int, default=4)
    x.add_argument("--clauses", type=int, default=4)
    x.add_argument("--r", type=int, required=True)
    x = gsub.add_parser("planted-vc")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--nu", type=int, required=True)
    x.add_argument("--p", type=float, default=0.3)
    x = gsub.add_parser("planted-tc")
    x.add_argument("--n-cover", type=int, required=True)
    x.add_argument("--classes", required=True, help='e.g. "3:0,1;2:1"')
    x.add_argument("--p", type=float, default=0.5)
    for x in gsub.choices.values():
        x.add_argument("--seed", type=int, default=0)
        x.add_argument("--out", help="path stem; writes STEM.edges and STEM.json")
    gp.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="run a CSV suite")
    b.add_argument("--suite", required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--time-limit", type=float)
    b.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
