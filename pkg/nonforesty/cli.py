#!/usr/bin/env python3
"""Command-line interface.

Run with ``python3 -m nonforesty.cli <subcommand> ...``. Results go to standard output, logging and
progress bars to standard error. Exit codes: 0 on success (or a true check), 1 on a false check or
a result contradicting the size formulas, 2 on usage errors.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, IO, Iterator, Optional, Sequence

from tqdm import tqdm

from . import settings
from .base import Graph, UnsupportedException, VerificationException
from .codec import read_graph6_lines, serialize_edgelist, serialize_graph6
from .connectivity import block_decomposition, is_k_connected, vertex_connectivity
from .constants import Context, GadgetName
from .constructions import get_gadget, minimum_graph
from .formulas import conjecture1_bound, conjecture1_satisfied, formula_table, size_formula
from .oracle import lemma1_scan, verify_minimality
from .properties import is_locally_c3_plus_k1, is_locally_foresty, is_locally_nonforesty

_COMMANDS: Dict[str, Callable] = {}
def _command(name: str) ->  Callable:
    """Register a subcommand handler ``handler(args, out, stdin, progress) -> exit code``."""
    def reg_inner(f):
        _COMMANDS[name] = f
        return f
    return reg_inner

class _Progress:
    """Render progress callbacks as a tqdm bar on standard error."""
    def __init__(self):
        self.bar = None

    def __call__(self, stage, fraction, detail):
        if self.bar is None:
            self.bar = tqdm(total=100, file=sys.stderr, unit="%", leave=False)
        self.bar.set_description(stage.name)
        self.bar.set_postfix_str(detail)
        self.bar.n = int(100*fraction)
        self.bar.refresh()

    def close(self):
        if self.bar is not None:
            self.bar.close()

def _bool(value: bool) ->  str:
    return "true" if value else "false"

def _read_graphs(args, stdin: IO[str]) ->  Iterator[Graph]:
    """Yield the input graphs one at a time, so that results can be written as they are found."""
    if args.input == "-":
        yield from read_graph6_lines(stdin)
        return
    with open(args.input, 'r') as fp:
        yield from read_graph6_lines(fp)

def _range(text: str):
    try:
        start, stop = text.split(':')
        return int(start), int(stop)
    except ValueError:
        raise argparse.ArgumentTypeError("Expected A:B, got %r" % text)

@_command("formula")
def _formula(args, out, stdin, progress):
    if args.n is not None:
        out.write("%d\n" % size_formula(args.k, args.n).value)
        return 0
    out.write("n\tf\tregime\n")
    for row in formula_table(args.k, *args.range):
        out.write("%d\t%d\t%s\n" % (row.n, row.value, row.regime.value))
    return 0

@_command("build")
def _build(args, out, stdin, progress):
    g = minimum_graph(args.k, args.n, catalog=args.catalog, progress=progress)
    if args.format == "graph6":
        out.write(serialize_graph6(g) + '\n')
    else:
        out.write(serialize_edgelist(g))
    return 0

_PROPERTIES: Dict[str, Callable] = {
    "locally-nonforesty": lambda g, k: _bool(is_locally_nonforesty(g)),
    "locally-foresty": lambda g, k: _bool(is_locally_foresty(g)),
    "connectivity": lambda g, k: str(vertex_connectivity(g)),
    "k-connected": lambda g, k: _bool(is_k_connected(g, k)),
    "conjecture1": lambda g, k: _bool(conjecture1_satisfied(g)),
    "lemma1-local": lambda g, k: _bool(is_locally_c3_plus_k1(g)),
}

@_command("check")
def _check(args, out, stdin, progress):
    if args.property == "k-connected" and args.k is None:
        raise ValueError("--property k-connected needs --k")
    code = 0
    for g in _read_graphs(args, stdin):
        res = _PROPERTIES[args.property](g, args.k)
        if res == "false":
            code = 1
        out.write(res + '\n')
        out.flush()
    return code

@_command("verify-min")
def _verify_min(args, out, stdin, progress):
    report = verify_minimality(
        args.k, args.n, budget=args.budget, jobs=args.jobs, progress=progress, uncertified=args.uncertified,
    )
    out.write('\n'.join(report.as_lines()) + '\n')
    if report.contradicts_formula:
        sys.stderr.write("The search contradicts f(%d, %d) = %d\n" % (args.k, args.n, report.formula_value))
        return 1
    return 0 if report.certified else 1

@_command("lemma1")
def _lemma1(args, out, stdin, progress):
    out.write("%d\n" % lemma1_scan(args.n, jobs=args.jobs, progress=progress))
    return 0

@_command("blocks")
def _blocks(args, out, stdin, progress):
    for i, g in enumerate(_read_graphs(args, stdin)):
        dec = block_decomposition(g)
        if i:
            out.write('\n')
        for b in dec.blocks:
            out.write("block\t%s\n" % ','.join(map(str, b)))
        out.write("cut_vertices\t%s\n" % ','.join(map(str, dec.cut_vertices)))
        for m, t in dec.block_order_histogram.items():
            out.write("t\t%d\t%d\n" % (m, t))
        out.flush()
    return 0

@_command("gadget")
def _gadget(args, out, stdin, progress):
    gadget = get_gadget(GadgetName(args.name), Context(args.context), catalog=args.catalog, progress=progress)
    out.write(gadget.stanza())
    return 0

@_command("conjecture1")
def _conjecture1(args, out, stdin, progress):
    g = minimum_graph(args.k, args.n, catalog=args.catalog, progress=progress)
    bound = conjecture1_bound(g.order)
    out.write("n: %d\n" % g.order)
    out.write("m: %d\n" % g.size())
    out.write("bound: %s\n" % bound)
    out.write("three_connected: %s\n" % _bool(is_k_connected(g, 3)))
    out.write("locally_nonforesty: %s\n" % _bool(is_locally_nonforesty(g)))
    out.write("conjecture: %s\n" % ("holds" if conjecture1_satisfied(g) else "violated"))
    return 0

def _parser() ->  argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonforesty",
        description="Minimum sizes of k-connected locally nonforesty graphs: formulas, constructions, checks and certificates",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress information to standard error")
    parser.add_argument("--progress", action="store_true", help="Show progress bars on standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="Evaluate f(k, n)")
    p.add_argument("--k", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=_range, help="Print a table for A <= n <= B")

    p = sub.add_parser("build", help="Build a minimum-size k-connected locally nonforesty graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--catalog", default=settings.GADGET_CATALOG, help="Gadget catalog file")

    p = sub.add_parser("check", help="Test a property of graph6 input, one result per line")
    p.add_argument("--property", choices=tuple(_PROPERTIES), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("input", nargs="?", default="-", help="graph6 file, or - for standard input")

    p = sub.add_parser("verify-min", help="Certify that no smaller graph exists by exhaustive search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, help="Largest size searched (default f(k, n) - 1)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--uncertified", action="store_true", help="Allow orders above the certified cap")

    p = sub.add_parser("lemma1", help="Count 4-regular graphs whose local subgraphs are all C3+K1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("blocks", help="Print the blocks, cut vertices and block order counts")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, or - for standard input")

    p = sub.add_parser("gadget", help="Print a gadget in the catalog format")
    p.add_argument("--name", choices=tuple(t.value for t in GadgetName), required=True)
    p.add_argument("--context", choices=tuple(c.value for c in Context), required=True)
    p.add_argument("--catalog", default=settings.GADGET_CATALOG, help="Gadget catalog file")

    p = sub.add_parser("conjecture1", help="Test the bound 7(n-1)/3 on a built graph")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--catalog", default=settings.GADGET_CATALOG, help="Gadget catalog file")

    return parser

def run(argv: Sequence[str], stdin: Optional[IO[str]] = None, stdout: Optional[IO[str]] = None) ->  int:
    """Run the CLI on ``argv`` (without the program name) and return the exit code."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    progress = _Progress() if args.progress else None
    try:
        return _COMMANDS[args.command](args, stdout, stdin, progress)
    except (ValueError, UnsupportedException, OSError) as e:
        sys.stderr.write("%s: error: %s\n" % (args.command, e))
        return 2
    except VerificationException as e:
        sys.stderr.write("%s: verification failed: %s\n" % (args.command, e))
        return 1
    finally:
        if progress is not None:
            progress.close()

def main():
    sys.exit(run(sys.argv[1:]))

if __name__ == "__main__":
    main()
