"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 broken
input files.  Benchmark tasks run in child processes so a timeout can
kill them without taking the harness down.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from multiprocessing import Pipe, Process

from .generators import (
    barbell_cycle,
    complete,
    cycle,
    fig4_family,
    gadget_path,
    gnp,
    path,
    star,
)
from .graph import Graph
from .graphio import (
    FormatError,
    read_graph,
    read_sidecar,
    write_gr,
    write_report_csv,
    write_sidecar,
)
from .greedy import default_seed_list, greedy_best_of
from .oracle import AnnotatedInstance
from .reducer import (
    Variant,
    export_residual,
    fix_isolated_uncovered,
    reduce_iterate,
    reduce_once,
)
from .state import ReductionState

RULES = ["naive", "linear", "plus", "extra"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dsreduce",
        description="Preprocess and benchmark Dominating Set instances.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    r = sub.add_parser("reduce", help="apply a reduction rule to an instance")
    r.add_argument("instance")
    r.add_argument("--rule", required=True, choices=RULES)
    r.add_argument("--iterate", action="store_true")
    r.add_argument("--max-rounds", type=int, default=None)
    r.add_argument("--fix-isolated", action="store_true")
    r.add_argument("--out")
    r.add_argument("--sidecar")
    r.add_argument("--report")

    gr = sub.add_parser("greedy", help="greedy solve, optionally after a reduction")
    gr.add_argument("instance")
    gr.add_argument("--runs", type=int, default=10)
    gr.add_argument("--seed", type=int, default=1)
    gr.add_argument("--after", choices=["none"] + RULES, default="none")
    gr.add_argument("--iterate", action="store_true")

    ge = sub.add_parser("gen", help="write a generated instance")
    ge.add_argument(
        "family",
        choices=["gnp", "complete", "path", "cycle", "star", "fig4", "fig5", "fig6", "barbell"],
    )
    ge.add_argument("--n", type=int)
    ge.add_argument("--p", type=float)
    ge.add_argument("--k", type=int)
    ge.add_argument("--copies", type=int, default=1)
    ge.add_argument("--seed", type=int, default=0)
    ge.add_argument("--out", required=True)

    b = sub.add_parser("bench", help="run rules over a corpus directory")
    b.add_argument("--dir", required=True)
    b.add_argument("--rules", required=True)
    b.add_argument("--timeout-s", type=float, default=None)
    b.add_argument("--report", required=True)
    b.add_argument("--workers", type=int, default=1)

    v = sub.add_parser("verify", help="check a solution sidecar against an instance")
    v.add_argument("instance")
    v.add_argument("--solution", required=True)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "reduce":
            return _cmd_reduce(args, parser)
        if args.cmd == "greedy":
            return _cmd_greedy(args, parser)
        if args.cmd == "gen":
            return _cmd_gen(args, parser)
        if args.cmd == "bench":
            return _cmd_bench(args, parser)
        return _cmd_verify(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _cmd_reduce(args, parser) -> int:
    if args.iterate and args.rule in ("naive", "linear"):
        parser.error("--iterate requires --rule plus or extra")
    if args.max_rounds is not None and not args.iterate:
        parser.error("--max-rounds only makes sense with --iterate")

    t0 = time.perf_counter()
    g, base = read_graph(args.instance)
    time_build = time.perf_counter() - t0

    state = ReductionState(g)
    variant = Variant(args.rule)
    t1 = time.perf_counter()
    if args.iterate:
        rep = reduce_iterate(g, state, variant, args.max_rounds or 1024)
    else:
        rep = reduce_once(g, state, variant)
    if args.fix_isolated:
        fix_isolated_uncovered(g, state)
    comp, strips, dropped = export_residual(g, state)
    time_reduce = time.perf_counter() - t1

    removed_nodes = len(rep.removed_nodes) + len(dropped)
    removed_edges = rep.removed_edges + strips

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_gr(comp.graph, fh)
    if args.sidecar:
        res_n = comp.graph.n
        with open(args.sidecar, "w", encoding="utf-8") as fh:
            write_sidecar(
                fh,
                fixed=[v + base for v in state.fixed.sorted()],
                covered=[
                    comp.new_to_old[i] + base for i in range(res_n) if comp.covered[i]
                ],
                mapping=[(i + 1, comp.new_to_old[i] + base) for i in range(res_n)],
            )
    if args.report:
        row = {
            "instance": os.path.basename(args.instance),
            "n": g.n,
            "m": g.m,
            "variant": args.rule,
            "rounds": rep.rounds,
            "fixed": len(state.fixed),
            "removed_nodes": removed_nodes,
            "removed_edges": removed_edges,
            "time_build_ms": round(time_build * 1000, 3),
            "time_reduce_ms": round(time_reduce * 1000, 3),
        }
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            write_report_csv([row], fh)

    print(
        f"fixed={len(state.fixed)} removed_nodes={removed_nodes} "
        f"removed_edges={removed_edges} rounds={rep.rounds} "
        f"residual_n={comp.graph.n} residual_m={comp.graph.m}"
    )
    return 0


def _cmd_greedy(args, parser) -> int:
    if args.runs < 1:
        parser.error("--runs must be at least 1")
    if args.iterate and args.after not in ("plus", "extra"):
        parser.error("--iterate requires --after plus or extra")

    g, base = read_graph(args.instance)
    state = ReductionState(g)
    if args.after != "none":
        variant = Variant(args.after)
        if args.iterate:
            reduce_iterate(g, state, variant)
        else:
            reduce_once(g, state, variant)
    comp, _strips, _dropped = export_residual(g, state)

    inst = AnnotatedInstance(comp.graph, comp.covered)
    best = greedy_best_of(inst, default_seed_list(args.seed, args.runs))
    solution = sorted(set(state.fixed) | {comp.new_to_old[v] for v in best})

    dominated = bytearray(g.n)
    for v in solution:
        dominated[v] = 1
        for w in g.adj[v]:
            dominated[w] = 1
    if not all(dominated):
        bad = dominated.index(0)
        print(f"INVALID: vertex {bad + base} not dominated", file=sys.stderr)
        return 1
    print(f"size={len(solution)} fixed={len(state.fixed)} greedy={len(best)}")
    return 0


def _cmd_gen(args, parser) -> int:
    fam = args.family
    try:
        if fam == "gnp":
            if args.n is None or args.p is None:
                parser.error("gnp needs --n and --p")
            g = gnp(args.n, args.p, args.seed)
        elif fam == "complete":
            if args.n is None:
                parser.error("complete needs --n")
            g = complete(args.n)
        elif fam == "path":
            if args.n is None:
                parser.error("path needs --n")
            g = path(args.n)
        elif fam == "cycle":
            if args.n is None:
                parser.error("cycle needs --n")
            g = cycle(args.n)
        elif fam == "star":
            if args.n is None:
                parser.error("star needs --n (leaf count)")
            g = star(args.n)
        elif fam == "fig4":
            if args.k is None:
                parser.error("fig4 needs --k")
            g = fig4_family(args.k)
        elif fam in ("fig5", "fig6"):
            g = gadget_path(fam, args.copies)
        else:
            g = barbell_cycle()
    except ValueError as exc:
        parser.error(str(exc))
    with open(args.out, "w", encoding="utf-8") as fh:
        write_gr(g, fh)
    print(f"wrote {args.out}: n={g.n} m={g.m}")
    return 0


def _bench_child(path: str, rule: str, conn) -> None:
    try:
        t0 = time.perf_counter()
        g, _base = read_graph(path)
        time_build = time.perf_counter() - t0
        state = ReductionState(g)
        t1 = time.perf_counter()
        rep = reduce_once(g, state, Variant(rule))
        _comp, strips, dropped = export_residual(g, state)
        time_reduce = time.perf_counter() - t1
        conn.send(
            {
                "status": "ok",
                "n": g.n,
                "m": g.m,
                "rounds": rep.rounds,
                "fixed": len(state.fixed),
                "removed_nodes": len(rep.removed_nodes) + len(dropped),
                "removed_edges": rep.removed_edges + strips,
                "tb": time_build * 1000,
                "tr": time_reduce * 1000,
            }
        )
    except Exception as exc:  # noqa: BLE001 - report anything to the parent
        try:
            conn.send({"status": "error", "err": str(exc)})
        except OSError:
            pass


def _special_row(fname: str, rule: str, tag: str) -> dict:
    return {
        "instance": fname,
        "n": 0,
        "m": 0,
        "variant": rule,
        "rounds": 0,
        "fixed": 0,
        "removed_nodes": 0,
        "removed_edges": 0,
        "time_build_ms": 0,
        "time_reduce_ms": tag,
    }


def _cmd_bench(args, parser) -> int:
    rules = [r.strip() for r in args.rules.split(",") if r.strip()]
    if not rules:
        parser.error("--rules must name at least one rule")
    for r in rules:
        if r not in RULES:
            parser.error(f"unknown rule {r!r}")
    if args.workers < 1:
        parser.error("--workers must be at least 1")

    files = sorted(
        f for f in os.listdir(args.dir) if f.endswith(".gr") or f.endswith(".el")
    )
    tasks = [(fname, rule) for fname in files for rule in rules]
    results: dict[int, dict] = {}
    queue = list(enumerate(tasks))
    running: list[list] = []

    while queue or running:
        while queue and len(running) < args.workers:
            idx, (fname, rule) = queue.pop(0)
            recv_end, send_end = Pipe(duplex=False)
            proc = Process(
                target=_bench_child,
                args=(os.path.join(args.dir, fname), rule, send_end),
            )
            proc.start()
            send_end.close()
            deadline = (
                None if args.timeout_s is None else time.monotonic() + args.timeout_s
            )
            running.append([idx, fname, rule, proc, recv_end, deadline])

        still = []
        for item in running:
            idx, fname, rule, proc, conn, deadline = item
            if conn.poll(0.005):
                try:
                    msg = conn.recv()
                except EOFError:
                    msg = {"status": "error", "err": "worker died"}
                proc.join()
                if msg["status"] == "ok":
                    results[idx] = {
                        "instance": fname,
                        "n": msg["n"],
                        "m": msg["m"],
                        "variant": rule,
                        "rounds": msg["rounds"],
                        "fixed": msg["fixed"],
                        "removed_nodes": msg["removed_nodes"],
                        "removed_edges": msg["removed_edges"],
                        "time_build_ms": round(msg["tb"], 3),
                        "time_reduce_ms": round(msg["tr"], 3),
                    }
                else:
                    results[idx] = _special_row(fname, rule, "error")
            elif deadline is not None and time.monotonic() > deadline:
                proc.terminate()
                proc.join()
                results[idx] = _special_row(fname, rule, "timeout")
            elif not proc.is_alive():
                proc.join()
                results[idx] = _special_row(fname, rule, "error")
            else:
                still.append(item)
        running = still

    rows = [results[i] for i in range(len(tasks))]
    with open(args.report, "w", encoding="utf-8", newline="") as fh:
        write_report_csv(rows, fh)
    print(f"wrote {args.report}: {len(rows)} rows")
    return 0


def _cmd_verify(args) -> int:
    g, base = read_graph(args.instance)
    with open(args.solution, encoding="utf-8") as fh:
        side = read_sidecar(fh)
    picks = side["fixed"] + side["solution"]
    chosen = set()
    for v in picks:
        iv = v - base
        if not 0 <= iv < g.n:
            raise FormatError(f"solution id {v} outside the instance")
        chosen.add(iv)

    dominated = bytearray(g.n)
    for v in chosen:
        dominated[v] = 1
        for w in g.adj[v]:
            dominated[w] = 1
    if not all(dominated):
        bad = dominated.index(0)
        print(f"INVALID: vertex {bad + base} not dominated")
        return 1
    print(f"valid: {len(chosen)} vertices dominate all {g.n}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
