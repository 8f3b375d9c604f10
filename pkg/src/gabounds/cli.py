"""Command-line entry point.

Exit codes: 0 success, 1 input or runtime failure, 2 usage error,
3 a bound failed or (for ``verify``) an equality characterisation disagreed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graph import GraphError, is_connected
from .graph6 import ParseError, parse_edge_list, read_graph6
from .indices import DEFAULT_ALPHAS
from .lab import EnumerationSpec, PythagoreanError, pythagorean_pair, verify_exhaustive, verify_graphs
from .report import emit_report, graph_record

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2, 3


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3 or not all(p.strip().isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"expected three positive integers a,b,c, got {text!r}")
    return tuple(int(p) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gabounds", description="GA1 bounds and their tightness on small graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices and bounds for graphs read from a file")
    p.add_argument("--input", required=True, help="input file, '-' for stdin")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--alpha", type=_float_list, default=DEFAULT_ALPHAS, help="comma-separated alphas, e.g. --alpha=-1,0.5,2")
    p.add_argument("--out", choices=("json", "csv"), default="json")

    p = sub.add_parser("verify", help="check every bound on all small graphs")
    p.add_argument("--nmax", type=int, help="largest vertex count to enumerate (2..8)")
    p.add_argument("--connected", action="store_true", help="connected graphs only")
    p.add_argument("--alpha", type=_float_list, default=DEFAULT_ALPHAS)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--corpus", help="graph6 file to verify instead of the built-in enumeration")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("pythagorean", help="two degree pairs with equal d_u d_v (d_u+d_v)^2")
    p.add_argument("--t1", type=_triple, required=True)
    p.add_argument("--t2", type=_triple, required=True)
    return parser


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _cmd_compute(args) -> int:
    data = _read(args.input)
    graphs = read_graph6(data) if args.format == "graph6" else [parse_edge_list(data)]
    records = [graph_record(g, args.alpha) for g in graphs]
    sys.stdout.buffer.write(emit_report(records, args.out))
    falsified = any(not ev.holds or not all(ev.checks.values()) for rec in records for ev in rec.bounds)
    return EXIT_FALSIFIED if falsified else EXIT_OK


def _cmd_verify(args) -> int:
    if args.corpus:
        graphs = read_graph6(_read(args.corpus))
        if args.connected:
            graphs = [g for g in graphs if is_connected(g)]
        report = verify_graphs(graphs, args.alpha, args.workers, {"corpus": args.corpus, "connected_only": args.connected})
    else:
        spec = EnumerationSpec(args.nmax, connected_only=args.connected, alphas=args.alpha)
        report = verify_exhaustive(spec, workers=args.workers)
    sys.stdout.buffer.write(emit_report(report, args.out))
    return EXIT_OK if report.confirmed else EXIT_FALSIFIED


def _cmd_pythagorean(args) -> int:
    pair = pythagorean_pair(args.t1, args.t2)
    print(f"a={pair.a} b={pair.b} c={pair.c} d={pair.d}")
    print(f"lambda={pair.lam}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.nmax is None and not args.corpus:
        parser.error("verify needs --nmax or --corpus")
    handler = {"compute": _cmd_compute, "verify": _cmd_verify, "pythagorean": _cmd_pythagorean}[args.command]
    try:
        return handler(args)
    except ParseError as exc:
        print(f"gabounds: parse error: {exc}", file=sys.stderr)
    except (GraphError, PythagoreanError, ValueError, OSError) as exc:
        print(f"gabounds: error: {exc}", file=sys.stderr)
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
