"""Command-line front end.

Combinadics are written with coefficients descending (``C_r,...,C_1``),
combinations with elements ascending (``c_1,...,c_r``). Exit codes: 0 ok,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Callable, Iterable, Optional, TextIO

from .binomial import parse_natural
from .codec import (
    decode,
    encode,
    format_combinadic,
    parse_coefficients,
    predecessor,
    successor,
    validate,
)
from .errors import CombinadicError
from .ranking import (
    Combination,
    enumerate_combinations,
    format_combination,
    from_bitstring,
    rank,
    split_range,
    to_bitstring,
    unrank,
)
from .verify import sweep_identities, sweep_uniqueness

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

_CONVENTIONS = (
    "Combinadics are comma-separated coefficients in descending order "
    "(C_r,...,C_1), e.g. 4,3,0. Combinations are comma-separated elements in "
    "ascending order, e.g. 0,3,4. Bitstrings are MSB first (highest element "
    "index leftmost)."
)


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        return parse_natural(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return parse_coefficients(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated decimal integers, got {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="combinadics",
        description="Exact combinatorial number system (combinadics). " + _CONVENTIONS,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, description=help_text + " " + _CONVENTIONS)

    p = add("encode", "Write M as a sum of R binomial coefficients.")
    p.add_argument("m", nargs="?", type=_natural, help="value; read one per line from stdin if omitted")
    p.add_argument("--terms", "-r", type=_natural, required=True, metavar="R")

    for name, text in (
        ("decode", "Value of a combinadic."),
        ("succ", "Combinadic of the next value."),
        ("pred", "Combinadic of the previous value."),
    ):
        p = add(name, text)
        p.add_argument("rep", nargs="?", type=_int_list, metavar="C_r,...,C_1",
                       help="read one per line from stdin if omitted")

    p = add("rank", "Colexicographic rank of a combination.")
    p.add_argument("comb", nargs="?", type=_int_list, metavar="c_1,...,c_r",
                   help="read one per line from stdin if omitted")

    p = add("unrank", "Combination with a given colexicographic rank.")
    p.add_argument("x", nargs="?", type=_natural, help="rank; read one per line from stdin if omitted")
    p.add_argument("-k", type=_natural, required=True, metavar="R")

    p = add("enumerate", "List combinations in colexicographic order.")
    p.add_argument("-k", type=_natural, required=True, metavar="R")
    p.add_argument("--start", type=_natural, default=0)
    p.add_argument("--count", type=_natural, default=10)

    p = add("bits", "Render a combination as a bitstring of length N.")
    p.add_argument("comb", type=_int_list, metavar="c_1,...,c_r")
    p.add_argument("-n", type=_natural, required=True, metavar="N")

    p = add("unbits", "Combination encoded by a bitstring.")
    p.add_argument("bitstring", nargs="?", help="read one per line from stdin if omitted")

    p = add("split", "Split the rank range [start, end) into equal parts.")
    p.add_argument("-k", type=_natural, required=True, metavar="R")
    p.add_argument("--start", type=_natural, required=True)
    p.add_argument("--end", type=_natural, required=True)
    p.add_argument("--parts", type=_natural, required=True)

    p = add("verify", "Exhaustive existence/uniqueness sweep over tuples with C_r < bound.")
    p.add_argument("--terms", "-r", type=_natural, required=True, metavar="R")
    p.add_argument("--bound", type=_natural, required=True)

    p = add("identities", "Check Pascal, Hockey-Stick and corollary identities.")
    p.add_argument("--nmax", type=_natural, required=True)
    p.add_argument("--rmax", type=_natural, required=True)
    return parser


def _inputs(arg, stdin: TextIO, convert: Callable) -> Iterable:
    if arg is not None:
        yield arg
        return
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            yield convert(line)
        except ValueError as exc:
            raise UsageError(str(exc))


def _dispatch(args, stdin: TextIO, out: TextIO) -> int:
    cmd = args.command
    emit = lambda text: out.write(f"{text}\n")

    if cmd == "encode":
        for m in _inputs(args.m, stdin, parse_natural):
            emit(format_combinadic(encode(m, args.terms)))
    elif cmd in ("decode", "succ", "pred"):
        for coeffs in _inputs(args.rep, stdin, parse_coefficients):
            rep = validate(coeffs)
            if cmd == "decode":
                emit(decode(rep))
            elif cmd == "succ":
                emit(format_combinadic(successor(rep)))
            else:
                emit(format_combinadic(predecessor(rep)))
    elif cmd == "rank":
        for elements in _inputs(args.comb, stdin, parse_coefficients):
            emit(rank(Combination(elements)))
    elif cmd == "unrank":
        for x in _inputs(args.x, stdin, parse_natural):
            emit(format_combination(unrank(x, args.k)))
    elif cmd == "enumerate":
        for comb in enumerate_combinations(args.k, args.start, args.count):
            emit(format_combination(comb))
    elif cmd == "bits":
        emit(to_bitstring(Combination(args.comb), args.n))
    elif cmd == "unbits":
        for s in _inputs(args.bitstring, stdin, str):
            emit(format_combination(from_bitstring(s)))
    elif cmd == "split":
        for lo, hi in split_range(args.k, args.start, args.end, args.parts):
            emit(f"{lo} {hi}")
    elif cmd == "verify":
        report = sweep_uniqueness(args.terms, args.bound)
        out.write(report.to_text())
        return EXIT_OK if report.passed else EXIT_DOMAIN
    elif cmd == "identities":
        report = sweep_identities(args.nmax, args.rmax)
        out.write(report.to_text())
        return EXIT_OK if report.passed else EXIT_DOMAIN
    return EXIT_OK


def run(
    argv: list[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one invocation and return its exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)

    parser = build_parser()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _dispatch(args, stdin, stdout)
    except CombinadicError as exc:
        stderr.write(f"ERROR {exc.kind}: {exc}\n")
        return EXIT_DOMAIN
    except UsageError as exc:
        stderr.write(f"combinadics {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main(argv: Optional[list[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
