"""Command line interface: ``dpcolor <command> [graph] ...``.

Exit status: 0 success, 1 usage or parse error, 2 result bracketed by a
resource cap, 3 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Optional, Sequence

from .bounds import zdp_exact_small, zdp_n_upper_bound, zdp_upper_bound
from .cover import cover_from_text, find_coloring, validate_cover
from .formats import ParseError, parse_graph
from .graph import Graph, chordal_peo, degeneracy_ordering, optimal_coloring
from .solver import Caps, dp_chromatic

EXIT_OK, EXIT_USAGE, EXIT_BRACKET, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Out:
    """Plain lines by default; one JSON object per computation with --json-lines."""

    def __init__(self, args: argparse.Namespace, digest: Optional[str]):
        self.args = args
        self.digest = digest
        self.start = time.perf_counter()

    def emit(self, line: str, **fields) -> None:
        if not self.args.json_lines:
            print(line)
            return
        record = {"command": self.args.command}
        if self.digest is not None:
            record["input_sha256"] = self.digest
        record.update(fields)
        if self.args.timing:
            record["elapsed"] = round(time.perf_counter() - self.start, 6)
        print(json.dumps(record, sort_keys=False))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    text = _read(args.graph)
    return parse_graph(text, args.format), hashlib.sha256(text.encode()).hexdigest()


def _caps(args: argparse.Namespace) -> Caps:
    return Caps(args.max_rank, args.max_covers, args.time_budget, args.workers)


def cmd_chi(args: argparse.Namespace) -> int:
    g, digest = _load_graph(args)
    k, coloring = optimal_coloring(g)
    out = _Out(args, digest)
    if args.witness:
        out.emit(f"{k}\ncoloring {' '.join(map(str, coloring))}", chi=k, coloring=coloring)
    else:
        out.emit(str(k), chi=k)
    return EXIT_OK


def cmd_col(args: argparse.Namespace) -> int:
    g, digest = _load_graph(args)
    col, order = degeneracy_ordering(g)
    out = _Out(args, digest)
    if args.witness:
        out.emit(f"{col}\nordering {' '.join(map(str, order))}", col=col, ordering=order)
    else:
        out.emit(str(col), col=col)
    return EXIT_OK


def cmd_chordal(args: argparse.Namespace) -> int:
    g, digest = _load_graph(args)
    peo = chordal_peo(g)
    out = _Out(args, digest)
    verdict = "yes" if peo is not None else "no"
    if args.witness and peo is not None:
        out.emit(f"{verdict}\npeo {' '.join(map(str, peo))}", chordal=True, peo=peo)
    else:
        out.emit(verdict, chordal=peo is not None)
    return EXIT_OK


def cmd_chi_dp(args: argparse.Namespace) -> int:
    g, digest = _load_graph(args)
    result = dp_chromatic(g, _caps(args))
    out = _Out(args, digest)
    if args.certificate:
        cert = result.last_certificate()
        if cert is None:
            print("no uncolorable cover to certify (chi_DP = chi or no sweep failed)", file=sys.stderr)
        else:
            with open(args.certificate, "w", encoding="ascii") as fh:
                fh.write(cert.to_text(result.record()))
    out.emit(result.record(), chi_dp=result.value, status=result.status, lo=result.lo, hi=result.hi)
    return EXIT_OK if result.exact else EXIT_BRACKET


def cmd_zdp(args: argparse.Namespace) -> int:
    g, digest = _load_graph(args)
    out = _Out(args, digest)
    if args.exact:
        z = zdp_exact_small(g, _caps(args))
        out.emit(z.record(), zdp=z.value, status=z.status, lo=z.lo, hi=z.hi)
        return EXIT_OK if z.status == "exact" else EXIT_BRACKET
    rep = zdp_upper_bound(g)
    out.emit(rep.record(), case=rep.case, k=rep.k, m=rep.m, bound=rep.bound)
    return EXIT_OK


def cmd_zdp_n(args: argparse.Namespace) -> int:
    bound = zdp_n_upper_bound(args.n)
    text = str(bound.numerator) if bound.denominator == 1 else f"{bound.numerator}/{bound.denominator}"
    _Out(args, None).emit(f"zdp-n n={args.n} bound={text}", n=args.n, bound=text)
    return EXIT_OK


def cmd_check_cover(args: argparse.Namespace) -> int:
    g, digest = _load_graph(args)
    cover = cover_from_text(_read(args.cover), g)
    out = _Out(args, digest)
    problems = validate_cover(cover)
    if problems:
        lines = [f"violation: {p}" for p in problems]
        out.emit("\n".join(lines), valid=False, violations=[str(p) for p in problems])
        return EXIT_OK
    witness = find_coloring(cover)
    if witness is None:
        out.emit("valid; uncolorable (exhaustive)", valid=True, witness=None)
    else:
        out.emit(f"valid; witness {' '.join(map(str, witness))}", valid=True, witness=list(witness))
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    from .verification import ITEMS, run_items

    if args.list:
        for it in ITEMS:
            print(f"{it.id}\t{it.title}")
        return EXIT_OK
    try:
        results = run_items(args.only or None)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    out = _Out(args, None)
    for r in results:
        out.emit(r.line(), item=r.id, passed=r.passed, detail=r.detail)
    failed = sum(not r.passed for r in results)
    if not args.json_lines:
        print(f"{len(results) - failed}/{len(results)} items passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-lines", action="store_true", help="emit one JSON record per computation")
    common.add_argument("--timing", action="store_true", help="add elapsed seconds to JSON records")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph", nargs="?", default="-", help="graph file, '-' for stdin (default)")
    graph_in.add_argument("--format", choices=["graph6", "edges"], default=None, help="input format (sniffed if omitted)")

    caps = argparse.ArgumentParser(add_help=False)
    default = Caps()
    caps.add_argument("--max-rank", type=int, default=default.max_rank, help="largest cycle rank to enumerate")
    caps.add_argument("--max-covers", type=int, default=default.max_covers, help="largest cover count per m")
    caps.add_argument("--time-budget", type=float, default=None, help="wall-clock seconds")
    caps.add_argument("--workers", type=int, default=1, help="worker processes for enumeration")

    parser = _Parser(prog="dpcolor", description="Exact DP-coloring computations on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chi", parents=[common, graph_in], help="chromatic number")
    p.add_argument("--witness", action="store_true", help="also print an optimal coloring")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("col", parents=[common, graph_in], help="coloring number (degeneracy + 1)")
    p.add_argument("--witness", action="store_true", help="also print a witnessing ordering")
    p.set_defaults(func=cmd_col)

    p = sub.add_parser("chordal", parents=[common, graph_in], help="chordality test")
    p.add_argument("--witness", action="store_true", help="also print a perfect elimination ordering")
    p.set_defaults(func=cmd_chordal)

    p = sub.add_parser("chi-dp", parents=[common, graph_in, caps], help="DP-chromatic number by enumeration")
    p.add_argument("--certificate", metavar="PATH", help="write the bad cover for the last failing m")
    p.set_defaults(func=cmd_chi_dp)

    p = sub.add_parser("zdp", parents=[common, graph_in, caps], help="Z_DP bound or exact value")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--bound", action="store_true", help="piecewise upper bound (default)")
    mode.add_argument("--exact", action="store_true", help="probe s = 0, 1, ... by enumeration")
    p.set_defaults(func=cmd_zdp)

    p = sub.add_parser("zdp-n", parents=[common], help="upper bound n^2 - (n+3)/2 on Z_DP(n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_zdp_n)

    p = sub.add_parser("check-cover", parents=[common, graph_in], help="validate a cover file and color it")
    p.add_argument("cover", help="cover file")
    p.set_defaults(func=cmd_check_cover)

    p = sub.add_parser("verify-paper", parents=[common], help="run the built-in verification suite")
    p.add_argument("--list", action="store_true", help="list item identifiers without running")
    p.add_argument("--only", action="append", metavar="ID", help="run only this item (repeatable)")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
