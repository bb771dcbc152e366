"""Command-line front end tying the toolkit together."""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, codec, serve
from .core import (
    GroupPattern,
    TapTable,
    canonical_german_table,
    derive_from_morse,
    enumerate_payloads,
    from_groups,
    payload_of_written,
    to_groups,
)
from .errors import TapError


def _load_table(path: str | None) -> TapTable:
    if path is None:
        return canonical_german_table()
    with open(path, encoding="utf-8") as fh:
        return TapTable.from_export_text(fh.read())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tapcode",
        description="Construct, encode, decode and analyze the tap code.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", help="print the code table")
    p.add_argument("--format", choices=("full", "bits", "groups"), default="full")
    p.add_argument("--table", help="custom table file (symbol<TAB>written per line)")

    p = sub.add_parser("encode", help="encode text to a bitstream")
    p.add_argument("text")
    p.add_argument("--digit-mode", action="store_true", help="substitute digits with letters")
    p.add_argument("--eighths", action="store_true", help="separator every 2 bits")
    p.add_argument("--table")

    p = sub.add_parser("decode", help="decode a bitstream to text")
    p.add_argument("bits")
    p.add_argument("--table")

    p = sub.add_parser("groups", help="convert between bits and tap-group notation")
    p.add_argument("value", help="a 0/1 written form, or counts like 1,2,1")

    p = sub.add_parser("analyze", help="efficiency report for a corpus")
    p.add_argument("--corpus", default="german", help="file path, or 'german'/'english'")
    p.add_argument("--json", action="store_true", help="line-delimited JSON instead of TSV")
    p.add_argument("--figure", help="also save a bar chart to this image file")
    p.add_argument("--out", help="write report.tsv, report.jsonl and efficiency.png here")

    p = sub.add_parser("derive", help="verify the Morse-collision derivation")
    p.add_argument("--max-elements", type=int, default=8)

    p = sub.add_parser("estimate", help="speed at a given tempo")
    p.add_argument("--bits-per-char", type=float, default=6.0)
    p.add_argument("--unit-seconds", type=float, default=1 / 6)

    p = sub.add_parser("serve", help="run the live session endpoint")
    p.add_argument("--port", type=int, default=7333, help="0 picks a free port")
    p.add_argument("--table")

    return parser


def _cmd_table(args) -> int:
    table = _load_table(args.table)
    for symbol, cw in table:
        if args.format == "bits":
            print(f"{symbol}\t{cw.written}")
        elif args.format == "groups":
            print(f"{symbol}\t{to_groups(cw.payload)}")
        else:
            print(f"{symbol}\t{cw.written}\t{to_groups(cw.payload)}")
    return 0


def _cmd_encode(args) -> int:
    opts = codec.EncodeOptions(digit_mode=args.digit_mode)
    bits = codec.encode(args.text, _load_table(args.table), opts)
    print(codec.format_eighths(bits) if args.eighths else bits)
    return 0


def _cmd_decode(args) -> int:
    print(codec.decode(args.bits, _load_table(args.table)))
    return 0


def _cmd_groups(args) -> int:
    value = args.value.strip()
    if set(value) <= {"0", "1"}:
        print(to_groups(payload_of_written(value)))
    else:
        print(from_groups(GroupPattern.parse(value)).written)
    return 0


def _cmd_analyze(args) -> int:
    if args.corpus in ("german", "english"):
        text = analysis.load_bundled_corpus(args.corpus)
    else:
        with open(args.corpus, encoding="utf-8") as fh:
            text = fh.read()
    report = analysis.efficiency_report(analysis.ingest_corpus(text))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        tsv = os.path.join(args.out, "report.tsv")
        jsonl = os.path.join(args.out, "report.jsonl")
        png = os.path.join(args.out, "efficiency.png")
        with open(tsv, "w", encoding="utf-8") as fh:
            fh.write(analysis.render_report_tsv(report))
        with open(jsonl, "w", encoding="utf-8") as fh:
            fh.write(analysis.render_report_jsonl(report))
        analysis.save_report_figure(report, png)
        print(f"wrote {tsv}, {jsonl}, {png}")
        return 0
    rendered = (
        analysis.render_report_jsonl(report) if args.json else analysis.render_report_tsv(report)
    )
    print(rendered, end="")
    if args.figure:
        analysis.save_report_figure(report, args.figure)
    return 0


def _cmd_derive(args) -> int:
    derived = derive_from_morse(args.max_elements)
    expected = {p.written for p in enumerate_payloads(args.max_elements)}
    ok = True
    for length in range(2, args.max_elements + 1, 2):
        d = {w for w in derived if len(w) == length}
        e = {w for w in expected if len(w) == length}
        match = d == e
        ok = ok and match
        print(f"written length {length}: {len(d)} forms, matches enumeration: {'yes' if match else 'NO'}")
    print("derivation consistent" if ok else "derivation MISMATCH")
    return 0 if ok else 1


def _cmd_estimate(args) -> int:
    est = analysis.speed_estimate(args.bits_per_char, args.unit_seconds)
    print(f"chars_per_second\t{est.chars_per_second:.3f}")
    print(f"words_per_minute\t{est.words_per_minute:.3f}")
    return 0


def _cmd_serve(args) -> int:
    serve.serve(args.port, _load_table(args.table))
    return 0


_COMMANDS = {
    "table": _cmd_table,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "groups": _cmd_groups,
    "analyze": _cmd_analyze,
    "derive": _cmd_derive,
    "estimate": _cmd_estimate,
    "serve": _cmd_serve,
}


def run(argv: list[str]) -> int:
    """Dispatch one invocation; 0 on success, 1 on operation errors,
    2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.verb](args)
    except TapError as err:
        print(f"error: {err.name}: {err}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
