"""Encoding text to tap bitstreams and decoding them back.

Streams are ASCII strings of '0'/'1'; each position is one sixteenth
slot.  Letters are self-delimiting: the first "00" after a letter's
taps is its end marker, so no length prefix or parity tracking is
needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Payload, TapTable, canonical_german_table
from .errors import MalformedStream, TruncatedStream, UnknownSymbol

#: Digits borrow the single-run letters 1..6 taps, then s, t, h and i.
#: Context disambiguates on the receiving side, so decoding keeps letters.
DIGIT_SUBSTITUTION = {
    "1": "e", "2": "n", "3": "r", "4": "a", "5": "o", "6": "z",
    "7": "s", "8": "t", "9": "h", "0": "i",
}


@dataclass(frozen=True)
class EncodeOptions:
    digit_mode: bool = False
    word_gap_zeros: int = 2

    def __post_init__(self) -> None:
        if self.word_gap_zeros < 2 or self.word_gap_zeros % 2:
            raise ValueError("word_gap_zeros must be even and >= 2")


def encode(text: str, table: TapTable | None = None, opts: EncodeOptions | None = None) -> str:
    """Concatenated framed forms; each space adds word_gap_zeros extra 0s.

    Round trips with :func:`decode` for text without leading or doubled
    spaces (a longer pause always reads back as a single space).
    """
    table = table or canonical_german_table()
    opts = opts or EncodeOptions()
    parts: list[str] = []
    for ch in text.lower():
        if opts.digit_mode:
            ch = DIGIT_SUBSTITUTION.get(ch, ch)
        if ch == " ":
            parts.append("0" * opts.word_gap_zeros)
        elif ch in table:
            parts.append(table.codeword(ch).framed)
        else:
            raise UnknownSymbol(f"cannot encode {ch!r}")
    return "".join(parts)


def decode(stream: str, table: TapTable | None = None) -> str:
    """Inverse of :func:`encode`.

    At each tap, the payload runs up to the first "00"; the zero run
    after it separates letters (2-3 zeros) or words (4 or more).
    """
    table = table or canonical_german_table()
    bits = "".join(stream.split())
    if bits.strip("01"):
        raise MalformedStream(f"stream contains non-bit characters: {stream!r}")
    out: list[str] = []
    pos = 0
    n = len(bits)
    while pos < n:
        if bits[pos] == "0":
            if not out:
                raise MalformedStream("zero run before any tap")
            raise MalformedStream(f"unexpected silence at slot {pos}")
        end = bits.find("00", pos)
        if end == -1:
            raise TruncatedStream("stream ends mid-payload (no end marker)")
        chunk = bits[pos:end]
        if chunk.endswith("0"):  # pad 0 caught ahead of the end marker
            chunk = chunk[:-1]
        out.append(table.symbol_for_payload(Payload(chunk)))
        pos += len(chunk)
        zeros = 0
        while pos < n and bits[pos] == "0":
            zeros += 1
            pos += 1
        if zeros < 2:
            raise TruncatedStream("letter lacks its end marker")
        if zeros >= 4:
            out.append(" ")
    return "".join(out)


def format_eighths(bits: str) -> str:
    """Grouped rendering with a separator every 2 bits (eighth-beat display)."""
    return " ".join(bits[i : i + 2] for i in range(0, len(bits), 2))
