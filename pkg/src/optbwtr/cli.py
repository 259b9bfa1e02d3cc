"""Command-line front end.

Exit codes: 0 success (including empty results), 2 invalid input (reserved
byte, bad dictionary, bad arguments), 3 I/O failure, 4 the index lacks the
section a command needs, 5 unknown mark or length out of range, 6 the
index file is corrupt or unsupported.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import serialize
from .bundle import build_bundle, build_dictionary_bundle
from .extract import ExtractRangeError, decompress
from .prefix import TERMINATOR, Dictionary
from .rlbwt import ReservedByteError, Text

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_MISSING_SECTION = 4
EXIT_EXTRACT = 5
EXIT_FORMAT = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


_ESCAPE = re.compile(rb"\\(x[0-9A-Fa-f]{2}|\\)")


def parse_pattern(arg: str) -> bytes:
    r"""Decode a command-line pattern; ``\xNN`` is a byte and ``\\`` a backslash."""
    raw = arg.encode("utf-8", "surrogateescape")

    def sub(m):
        tok = m.group(1)
        return b"\\" if tok == b"\\" else bytes([int(tok[1:], 16)])

    return _ESCAPE.sub(sub, raw)


def _read_input(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from exc


def _load(path: str):
    data = _read_input(path)
    try:
        return serialize.from_bytes(data)
    except serialize.IndexFormatError as exc:
        raise CliError(EXIT_FORMAT, f"{path}: {type(exc).__name__}: {exc}") from exc


def _need(bundle, attr: str, what: str):
    part = getattr(bundle, attr)
    if part is None:
        raise CliError(EXIT_MISSING_SECTION, f"index has no {what} section")
    return part


def _emit(args, obj: dict, plain):
    out = sys.stdout
    if args.json:
        out.write(json.dumps(obj) + "\n")
    elif plain is not None:
        out.write(plain)


def cmd_build(args):
    data = _read_input(args.input)
    try:
        if args.dictionary:
            bundle = build_dictionary_bundle(Dictionary.from_lines(data), search=not args.no_search)
        else:
            marks = None if args.no_extract else (args.marks or [1])
            bundle = build_bundle(Text.from_raw(data), search=not args.no_search, marks=marks)
    except ReservedByteError as exc:
        raise CliError(EXIT_INPUT, f"{args.input}: {exc}") from exc
    except ValueError as exc:
        raise CliError(EXIT_INPUT, f"{args.input}: {exc}") from exc
    try:
        written = serialize.save(bundle, args.index)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {args.index}: {exc}") from exc
    stats = dict(bundle.stats(), bytes=written)
    _emit(args, stats, " ".join(f"{k}={v}" for k, v in stats.items()) + "\n")


def cmd_count(args):
    idx = _need(_load(args.index), "search", "search")
    for pat in args.patterns:
        p = parse_pattern(pat)
        c = idx.count(p) if 0 not in p else 0
        _emit(args, {"pattern": pat, "count": c}, f"{c}\n")


def cmd_locate(args):
    idx = _need(_load(args.index), "search", "search")
    for pat in args.patterns:
        p = parse_pattern(pat)
        pos = idx.locate(p) if 0 not in p else []
        if not args.sa_order:
            pos.sort()
        _emit(args, {"pattern": pat, "positions": pos}, "".join(f"{x}\n" for x in pos))


def cmd_extract(args):
    ei = _need(_load(args.index), "extract", "extract")
    if args.mark_index is not None:
        j = args.mark_index
        if not 1 <= j <= ei.b:
            raise CliError(EXIT_EXTRACT, f"unknown mark index {j} (index has {ei.b} marks)")
    else:
        try:
            j = ei.mark_index(args.position)
        except KeyError as exc:
            raise CliError(EXIT_EXTRACT, f"position {args.position} is not marked") from exc
    # the sentinel is not part of the user's text
    limit = ei.max_length(j) - 1
    if not 1 <= args.length <= limit:
        raise CliError(EXIT_EXTRACT, f"length {args.length} out of range; max permissible d = {limit}")
    try:
        data = ei.extract(j, args.length)
    except ExtractRangeError as exc:
        raise CliError(EXIT_EXTRACT, f"{exc}; max permissible d = {exc.limit}") from exc
    if args.json:
        _emit(args, {"mark": j, "position": ei.marks[j - 1], "data": data.decode("latin-1")}, None)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_decompress(args):
    bundle = _load(args.index)
    text = decompress(bundle.rlbwt).raw
    if bundle.trie is not None:
        text = text.replace(bytes([TERMINATOR]), b"\n")
    sys.stdout.buffer.write(text)
    sys.stdout.flush()


def cmd_prefix(args):
    trie = _need(_load(args.index), "trie", "prefix")
    p = parse_pattern(args.pattern)
    if any(c <= TERMINATOR for c in p):
        lines = []
    else:
        lines = trie.prefix_locate(p) if not args.count else None
    if args.count:
        c = trie.prefix_count(p) if lines is None else 0
        _emit(args, {"pattern": args.pattern, "count": c}, f"{c}\n")
    else:
        _emit(args, {"pattern": args.pattern, "lines": lines}, "".join(f"{x}\n" for x in lines))


def cmd_stats(args):
    stats = _load(args.index).stats()
    _emit(args, stats, "".join(f"{k}: {v}\n" for k, v in stats.items()))


def _marks(arg: str) -> list:
    try:
        marks = sorted({int(x) for x in arg.split(",") if x.strip()})
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad mark list {arg!r}") from exc
    if not marks or marks[0] < 1:
        raise argparse.ArgumentTypeError("marks are 1-based text positions")
    return marks


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="optbwtr", description=__doc__.split("\n")[0])
    parser.add_argument("--json", action="store_true", help="one JSON object per line")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="index a text file")
    p.add_argument("input", help="text file ('-' for stdin)")
    p.add_argument("index", help="index file to write")
    p.add_argument("--marks", type=_marks, help="comma-separated positions to bookmark (default 1)")
    p.add_argument("--dictionary", action="store_true",
                   help="treat input as newline-separated strings and add prefix search")
    p.add_argument("--no-search", action="store_true", help="omit count/locate structures")
    p.add_argument("--no-extract", action="store_true", help="omit the bookmark structure")
    p.set_defaults(func=cmd_build)

    for name, func in (("count", cmd_count), ("locate", cmd_locate)):
        p = sub.add_parser(name, help=f"{name} pattern occurrences")
        p.add_argument("index")
        p.add_argument("patterns", nargs="+", help=r"patterns; \xNN escapes allowed")
        if name == "locate":
            p.add_argument("--sa-order", action="store_true", help="suffix-array order, unsorted")
        p.set_defaults(func=func)

    p = sub.add_parser("extract", help="print text from a bookmarked position")
    p.add_argument("index")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--mark-index", type=int, help="1-based mark number")
    where.add_argument("--position", type=int, help="marked text position")
    p.add_argument("--length", "-d", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("decompress", help="print the indexed text")
    p.add_argument("index")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("prefix", help="dictionary prefix search")
    p.add_argument("index")
    p.add_argument("pattern")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("stats", help="summarize an index file")
    p.add_argument("index")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"optbwtr: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return EXIT_OK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
