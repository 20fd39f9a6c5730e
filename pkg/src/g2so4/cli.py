"""Command-line driver for the verification battery."""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .checks import SUITES, TaskConfig, run_task, tasks
from .report import FAILED, sort_entries, to_json, to_text

WORKERS_ENV = "G2SO4_WORKERS"
ORBITS = tuple(range(1, 12))
INVOLUTIONS = (0, 1, 2)


def _index_list(kind, allowed):
    def parse(text):
        try:
            values = sorted({int(v) for v in text.split(",") if v.strip()})
        except ValueError:
            raise argparse.ArgumentTypeError(f"{kind} must be comma-separated integers")
        bad = [v for v in values if v not in allowed]
        if bad or not values:
            raise argparse.ArgumentTypeError(f"{kind} must be drawn from {allowed[0]}..{allowed[-1]}")
        return tuple(values)
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2so4", description="Exact verification battery for the "
                                "G2 / SO4 orbit computations.")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--involution", type=_index_list("involution", INVOLUTIONS), default=INVOLUTIONS,
                   help="comma-separated involution indices (default 0,1,2)")
    p.add_argument("--orbit", type=_index_list("orbit", ORBITS), default=ORBITS,
                   help="comma-separated orbit indices (default 1..11)")
    p.add_argument("--r3", choices=("symbolic", "rational"), default="symbolic")
    p.add_argument("--mod-torus", choices=("strict", "allow"), default="allow")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="include elapsed times (not byte-stable)")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


def _timed(name, args, cfg):
    start = time.perf_counter()
    entries = run_task(name, args, cfg)
    elapsed = time.perf_counter() - start
    for e in entries:
        e.elapsed = elapsed
    return entries


def collect(args) -> list:
    suites = SUITES if args.suite == "all" else (args.suite,)
    cfg = TaskConfig(seed=args.seed, r3=args.r3, mod_torus=args.mod_torus)
    todo = tasks(suites, args.involution, args.orbit)
    workers = min(_workers(), len(todo)) if todo else 1
    if workers <= 1:
        results = [_timed(n, a, cfg) for n, a in todo]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_timed, n, a, cfg) for n, a in todo]
            results = [f.result() for f in futures]
    return sort_entries(e for batch in results for e in batch)


def meta(args) -> dict:
    return {"version": __version__, "suite": args.suite, "involutions": list(args.involution),
            "orbits": list(args.orbit), "r3": args.r3, "mod_torus": args.mod_torus, "seed": args.seed}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    entries = collect(args)
    render = to_json if args.format == "json" else to_text
    text = render(entries, meta(args), args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if any(e.status == FAILED for e in entries) else 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
