"""Command-line entry point.

Exit codes: 0 success / all PASS, 1 usage or input error, 2 at least one
MISMATCH or ERROR verdict, 3 size cap or time limit refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import signal
import sys
import time
from collections import Counter
from contextlib import contextmanager

from .claims import (ERROR, MISMATCH, SKIPPED, DEFAULT_RANGES, SuiteConfig,
                     list_claims, run_suite)
from .edgelist import parse_edge_list
from .enumeration import all_labeled_graphs, code_of
from .errors import CapExceeded, ParseError, SdstabError, UnknownClaim
from .families import FamilySpec, build, describe, parse_family
from .graph import Graph, vertex_connectivity
from .stability import Unbounded, stability
from .strongdom import gamma, gamma_bruteforce, gamma_st, gamma_st_bruteforce

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_REFUSED = 0, 1, 2, 3
CHECK_CSV_HEADER = ["claim_id", "scope", "status", "counterexample_count", "elapsed_ms"]


class TimeLimitExceeded(SdstabError):
    pass


def parse_family_dsl(text: str) -> FamilySpec:
    return parse_family(text)


@contextmanager
def time_limit(seconds: float | None):
    if not seconds:
        yield
        return

    def fire(signum, frame):
        raise TimeLimitExceeded(f"time limit of {seconds:g}s exceeded")
    previous = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def parse_ranges(text: str | None) -> dict[str, tuple[int, int]]:
    """``key=lo..hi,key=n`` -> overrides for the claim ranges."""
    out: dict[str, tuple[int, int]] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep or key not in DEFAULT_RANGES:
            raise ParseError(f"bad range {item!r}; known keys: {', '.join(DEFAULT_RANGES)}")
        lo, dots, hi = value.partition("..")
        try:
            bounds = (int(lo), int(hi if dots else lo))
        except ValueError:
            raise ParseError(f"bad range bounds in {item!r}") from None
        if bounds[0] > bounds[1]:
            raise ParseError(f"empty range in {item!r}")
        out[key] = bounds
    return out


def load_graph(args) -> tuple[Graph, str]:
    if args.file:
        if args.graph:
            raise ParseError("give either a graph expression or --file, not both")
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        return parse_edge_list(text), f"file:{args.file}"
    if not args.graph:
        raise ParseError("missing graph expression (or --file PATH)")
    return build(parse_family(args.graph)), args.graph


# -- commands --------------------------------------------------------------

def cmd_gamma(args):
    g, source = load_graph(args)
    if args.oracle:
        res = gamma_st_bruteforce(g)
    else:
        res = gamma_st(g)
    result = {"order": g.n, "gamma_st": res.value}
    if args.witness:
        result["witness"] = sorted(g.original(res.witness))
    if args.plain:
        plain = gamma_bruteforce(g) if args.oracle else gamma(g)
        result["gamma"] = plain.value
    return source, result, EXIT_OK


def cmd_stability(args):
    g, source = load_graph(args)
    res = stability(g, oracle=args.oracle)
    if isinstance(res, Unbounded):
        result = {"order": g.n, "gamma_st": res.gamma_before, "outcome": "unbounded",
                  "conventional_value": res.conventional_value, "witness": None, "critical": False}
    else:
        result = {"order": g.n, "gamma_st": res.gamma_before, "outcome": "finite", "k": res.k,
                  "gamma_after": res.gamma_after, "witness": sorted(g.original(res.removal)),
                  "critical": res.critical}
    return source, result, EXIT_OK


def cmd_check(args):
    config = SuiteConfig(max_n=args.max_n, oracle=args.oracle, jobs=args.jobs)
    config = config.with_ranges(**parse_ranges(args.ranges))
    ids = None if args.claim == "all" else [args.claim]
    if ids and ids[0] not in dict(list_claims()):
        raise UnknownClaim(ids[0])
    report = run_suite(config, ids)
    statuses = {v.status for v in report.verdicts}
    if statuses & {MISMATCH, ERROR}:
        code = EXIT_MISMATCH
    elif SKIPPED in statuses:
        code = EXIT_REFUSED
    else:
        code = EXIT_OK
    return args.claim, report, code


INVARIANTS = {
    "gamma_st": lambda g, o: (gamma_st_bruteforce(g) if o else gamma_st(g)).value,
    "gamma": lambda g, o: (gamma_bruteforce(g) if o else gamma(g)).value,
    "stability": lambda g, o: stability(g, oracle=o).value,
    "kappa": lambda g, o: vertex_connectivity(g),
    "edges": lambda g, o: g.num_edges,
}


def cmd_enumerate(args):
    if args.invariant == "stability" and args.n < 2:
        raise ParseError("stability needs --n >= 2")
    stream = all_labeled_graphs(args.n)
    fn = INVARIANTS[args.invariant]
    values = [(code_of(g), fn(g, args.oracle)) for g in stream]
    hist = Counter(v for _, v in values)
    result = {"n": args.n, "invariant": args.invariant, "count": len(values),
              "histogram": {str(k): hist[k] for k in sorted(hist)}}
    return f"n={args.n}", (result, values), EXIT_OK


def cmd_families(args):
    return "families", [{"tag": t, "description": d} for t, d in describe()], EXIT_OK


COMMANDS = {"gamma": cmd_gamma, "stability": cmd_stability, "check": cmd_check,
            "enumerate": cmd_enumerate, "families": cmd_families}


# -- rendering -------------------------------------------------------------

def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render(command: str, source: str, result, args, elapsed: float) -> str:
    fmt = args.format
    elapsed_ms = round(elapsed * 1000, 3) if args.timing else None
    if command == "check":
        report = result
        if fmt == "json":
            payload = {"command": command, "input": source, "result": report.as_dict(timing=args.timing),
                       "config": report.config, "elapsed_ms": elapsed_ms}
            return json.dumps(payload, indent=2) + "\n"
        if fmt == "csv":
            rows = [[v.claim_id, v.scope, v.status, len(v.counterexamples),
                     round(v.elapsed * 1000, 3) if args.timing else ""] for v in report.verdicts]
            return _csv(rows, CHECK_CSV_HEADER)
        lines = []
        for v in report.verdicts:
            lines.append(f"{v.status:9s} {v.claim_id}  [{v.scope}]  ({v.elapsed * 1000:.0f} ms)")
            for c in v.counterexamples:
                mark = "" if c.verified else " (unverified)"
                lines.append(f"    counterexample{mark}: {c.graph}: claimed {c.claimed}; computed {c.computed}")
            for note in v.notes:
                lines.append(f"    note: {note}")
            if v.related:
                lines.append(f"    related: {', '.join(v.related)}")
        s = report.summary
        lines.append(f"summary: {s['PASS']} PASS, {s['MISMATCH']} MISMATCH, {s['ERROR']} ERROR, "
                     f"{s['SKIPPED']} SKIPPED")
        return "\n".join(lines) + "\n"
    if command == "enumerate":
        result, values = result
        if fmt == "csv":
            return _csv([[c, v] for c, v in values], ["code", "value"])
    if fmt == "json":
        config = {"oracle": args.oracle, "witness": args.witness, "jobs": args.jobs}
        payload = {"command": command, "input": source, "result": result, "config": config,
                   "elapsed_ms": elapsed_ms}
        return json.dumps(payload, indent=2) + "\n"
    if command == "families":
        if fmt == "csv":
            return _csv([[r["tag"], r["description"]] for r in result], ["tag", "description"])
        return "".join(f"{r['tag']:14s} {r['description']}\n" for r in result)
    if command == "enumerate":
        lines = [f"{result['invariant']} over {result['count']} labeled graphs of order {result['n']}:"]
        lines += [f"  {k}: {v}" for k, v in result["histogram"].items()]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        keys = list(result)
        return _csv([[json.dumps(result[k]) if isinstance(result[k], list) else result[k] for k in keys]], keys)
    return "".join(f"{k}: {v}\n" for k, v in result.items())


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--witness", action="store_true", help="report witness sets")
    common.add_argument("--oracle", action="store_true", help="use the brute-force inner solver")
    common.add_argument("--jobs", type=int, default=int(os.environ.get("SDSTAB_JOBS", "1")))
    common.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings in json/csv output")

    parser = argparse.ArgumentParser(prog="sdstab", description="Strong domination number and its stability.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [("gamma", "strong domination number"), ("stability", "vertex-removal stability")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("graph", nargs="?", help="family expression, e.g. 'C(9)' or 'join(K(1),C(5))'")
        p.add_argument("--file", help="edge-list file ('-' for stdin)")
        if name == "gamma":
            p.add_argument("--plain", action="store_true", help="also report the ordinary domination number")

    p = sub.add_parser("check", parents=[common], help="check registered claims")
    p.add_argument("claim", help="claim id or 'all'")
    p.add_argument("--max-n", type=int, default=6, help="largest order of the labeled-graph sweeps")
    p.add_argument("--ranges", help="range overrides, e.g. 'cycle_st=4..12,book=2..3'")

    p = sub.add_parser("enumerate", parents=[common], help="invariant over all labeled graphs of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--invariant", choices=sorted(INVARIANTS), default="gamma_st")

    p = sub.add_parser("families", parents=[common], help="list family expressions")
    p.add_argument("--list", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        with time_limit(args.time_limit):
            source, result, code = COMMANDS[args.command](args)
    except (CapExceeded, TimeLimitExceeded) as exc:
        print(f"sdstab: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (SdstabError, OSError) as exc:
        print(f"sdstab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(args.command, source, result, args, time.perf_counter() - start))
    return code


if __name__ == "__main__":
    sys.exit(main())
