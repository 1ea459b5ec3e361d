"""Command-line frontend.

Subcommands:
  partition  run one tree-partitioning method on a case and write a report
  inspect    show a case's bridge-block decomposition and gamma(empty set)
  bench      run a benchmark suite over several cases/seeds, emit CSV rows

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from pathlib import Path

from . import caseio, pipeline
from .grid import TreepartError, bridge_block_decomposition

METHOD_FLAGS = {
    "two-stage-milp": ("two_stage", "milp", "dc"),
    "two-stage-bf-dc": ("two_stage", "bruteforce", "dc"),
    "two-stage-bf-ac": ("two_stage", "bruteforce", "ac"),
    "recursive-dc": ("recursive", None, "dc"),
    "recursive-ac": ("recursive", None, "ac"),
}


def _load_network(path: str, engine: str):
    snap = caseio.load_case(path)
    return caseio.to_network(snap, engine=engine), snap


def _run_method(net, method_flag: str, k: int, clusterer: str, seed: int,
                gap: float, time_limit):
    kind, solver, engine = METHOD_FLAGS[method_flag]
    if kind == "two_stage":
        return pipeline.two_stage(net, k, clusterer=clusterer, solver=solver,
                                  engine=engine, seed=seed, gap=gap,
                                  time_limit=time_limit)
    return pipeline.recursive(net, k, engine=engine, clusterer=clusterer, seed=seed)


def _report_table(d: dict) -> str:
    rows = [
        ("method", d["method"]),
        ("clusterer", d["clusterer"]),
        ("engine", d["engine"]),
        ("k requested / actual", f"{d['k']} / {d['k_actual']}"),
        ("seed", d["seed"]),
        ("gamma pre-switching", f"{d['gamma_pre']:.6g}"),
        ("gamma post-switching", f"{d['gamma_post']:.6g}"),
        ("switched lines", ", ".join(str(s["id"]) for s in d["switched_lines"]) or "-"),
        ("non-trivial blocks pre", f"{d['bbd_pre']['nontrivial_count']} "
                                   f"{d['bbd_pre']['nontrivial_sizes']}"),
        ("non-trivial blocks post", f"{d['bbd_post']['nontrivial_count']} "
                                    f"{d['bbd_post']['nontrivial_sizes']}"),
        ("optimal", str(d["optimal"])),
    ]
    width = max(len(r[0]) for r in rows)
    return "\n".join(f"{name:<{width}}  {val}" for name, val in rows) + "\n"


def cmd_partition(args) -> int:
    if args.engine is not None:
        _, _, implied = METHOD_FLAGS[args.method]
        if args.engine != implied:
            raise UsageError(
                f"--method {args.method} implies --engine {implied}, got {args.engine}"
            )
    net, _ = _load_network(args.case, METHOD_FLAGS[args.method][2])
    report = _run_method(net, args.method, args.k, args.cluster, args.seed,
                         args.gap, args.time_limit)
    d = report.to_dict()
    if args.output_format == "json":
        payload = caseio.write_report(report, "json")
    elif args.output_format == "csv":
        payload = caseio.write_report(report, "csv")
    else:
        payload = _report_table(d).encode()
    if args.output:
        Path(args.output).write_bytes(payload)
    else:
        sys.stdout.write(payload.decode())
    return 0


def cmd_inspect(args) -> int:
    net, snap = _load_network(args.case, args.engine)
    bbd = bridge_block_decomposition(net)
    gamma, _ = pipeline.evaluate_only(net, pipeline.SwitchSet(), engine=args.engine)
    sizes = bbd.nontrivial_sizes()
    d = {
        "case": args.case,
        "provenance": snap.provenance,
        "n_buses": net.n_buses,
        "n_lines": net.n_lines,
        "bridges": len(bbd.bridges),
        "nontrivial_blocks": len(sizes),
        "nontrivial_sizes": sizes,
        "trivial_blocks": sum(1 for s in bbd.sizes if s == 1),
        "gamma_base": gamma,
    }
    if args.output_format == "json":
        sys.stdout.write(caseio.canonical_json(d))
    else:
        width = max(len(k) for k in d)
        for key, val in d.items():
            sys.stdout.write(f"{key:<{width}}  {val}\n")
    return 0


_SUITES = {
    "table1": {"k": (5,), "clusterers": ("spectral-ln",), "methods": ("two-stage-milp",)},
    "table2": {"k": (5,), "clusterers": ("fastgreedy", "spectral-bn", "spectral-ln"),
               "methods": ("two-stage-milp", "recursive-dc")},
    "table3": {"k": (4, 5), "clusterers": ("fastgreedy", "spectral-ln", "spectral-bn"),
               "methods": ("two-stage-bf-ac", "recursive-ac")},
}

_BENCH_COLUMNS = [
    "suite", "case", "k", "clusterer", "method", "seeds", "gamma_pre",
    "gamma_post_median", "time_median_s", "best", "pre_blocks", "pre_sizes",
    "post_blocks_median", "post_sizes_first_seed", "error",
]


def cmd_bench(args) -> int:
    suite = _SUITES[args.suite]
    seeds = [int(s) for s in args.seeds.split(",") if s.strip() != ""]
    if not seeds:
        raise UsageError("--seeds must name at least one seed")
    rows = []
    for case_path in args.cases:
        engine_by_method = {m: METHOD_FLAGS[m][2] for m in suite["methods"]}
        for k in suite["k"]:
            for clusterer in suite["clusterers"]:
                group = []
                for method in suite["methods"]:
                    row = {c: "" for c in _BENCH_COLUMNS}
                    row.update({
                        "suite": args.suite,
                        "case": Path(case_path).stem,
                        "k": k,
                        "clusterer": clusterer,
                        "method": method,
                        "seeds": "|".join(str(s) for s in seeds),
                    })
                    try:
                        net, _ = _load_network(case_path, engine_by_method[method])
                        gammas, times, posts = [], [], []
                        first_sizes = None
                        gamma_pre = None
                        for seed in seeds:
                            t0 = time.perf_counter()
                            rep = _run_method(net, method, k, clusterer, seed,
                                              args.gap, args.time_limit)
                            times.append(time.perf_counter() - t0)
                            gammas.append(rep.gamma_post)
                            gamma_pre = rep.gamma_pre
                            d = rep.to_dict()
                            posts.append(d["bbd_post"]["nontrivial_count"])
                            if first_sizes is None:
                                first_sizes = d["bbd_post"]["nontrivial_sizes"]
                                pre_blocks = d["bbd_pre"]["nontrivial_count"]
                                pre_sizes = d["bbd_pre"]["nontrivial_sizes"]
                        row.update({
                            "gamma_pre": repr(round(gamma_pre, 9)),
                            "gamma_post_median": repr(round(statistics.median(gammas), 9)),
                            "time_median_s": f"{statistics.median(times):.3f}",
                            "pre_blocks": pre_blocks,
                            "pre_sizes": "|".join(str(s) for s in pre_sizes),
                            "post_blocks_median": statistics.median(posts),
                            "post_sizes_first_seed": "|".join(str(s) for s in first_sizes),
                        })
                    except Exception as exc:  # keep the suite going
                        row["error"] = f"{type(exc).__name__}: {exc}"
                    group.append(row)
                ok = [r for r in group if not r["error"]]
                if ok:
                    best = min(float(r["gamma_post_median"]) for r in ok)
                    for r in ok:
                        r["best"] = "*" if float(r["gamma_post_median"]) <= best + 1e-9 else ""
                rows.extend(group)

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_BENCH_COLUMNS)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    payload = buf.getvalue()
    if args.output:
        Path(args.output).write_text(payload)
    else:
        sys.stdout.write(payload)
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treepart",
        description="Refine a grid's bridge-block decomposition by switching lines off.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="run one method on one case")
    p.add_argument("--case", required=True, help="snapshot .json or MATPOWER .m file")
    p.add_argument("--k", type=int, required=True, help="target cluster count")
    p.add_argument("--method", choices=sorted(METHOD_FLAGS), default="two-stage-milp")
    p.add_argument("--cluster", choices=pipeline.CLUSTERERS, default="spectral-ln")
    p.add_argument("--engine", choices=("dc", "ac"), default=None,
                   help="must agree with the method; purely a cross-check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gap", type=float, default=1e-6, help="MILP relative gap")
    p.add_argument("--time-limit", type=float, default=None, help="MILP seconds")
    p.add_argument("--output-format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--output", default=None, help="write here instead of stdout")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("inspect", help="bridge-block summary and base congestion")
    p.add_argument("--case", required=True)
    p.add_argument("--engine", choices=("dc", "ac"), default="dc")
    p.add_argument("--output-format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("bench", help="run a benchmark suite, emit CSV")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--cases", nargs="+", required=True, help="case files")
    p.add_argument("--seeds", required=True, help="comma-separated seed list")
    p.add_argument("--gap", type=float, default=1e-6)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--output", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except (TreepartError, OSError, ValueError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
