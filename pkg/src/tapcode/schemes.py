"""Cost models for the codes the tap code is measured against.

All costs are per symbol: slots (sixteenths) for the binary timelines,
symbol counts for ternary Morse.  Umlauts and ß expand to digraphs for
Morse and Polybius, which cover neither natively.
"""

from __future__ import annotations

import heapq
import math
from typing import Mapping

from .core import TapTable
from .errors import DegenerateAlphabet, UnknownSymbol

MORSE_TABLE: dict[str, str] = {
    "a": ".-", "b": "-...", "c": "-.-.", "d": "-..", "e": ".", "f": "..-.",
    "g": "--.", "h": "....", "i": "..", "j": ".---", "k": "-.-", "l": ".-..",
    "m": "--", "n": "-.", "o": "---", "p": ".--.", "q": "--.-", "r": ".-.",
    "s": "...", "t": "-", "u": "..-", "v": "...-", "w": ".--", "x": "-..-",
    "y": "-.--", "z": "--..",
}

UMLAUT_EXPANSION = {"ä": "ae", "ö": "oe", "ü": "ue", "ß": "ss"}

# Standard Morse timeline: dit 1 slot, dah 3, one slot between elements,
# three between letters.  Word gap is seven slots total; in the ternary
# reading a word gap is one extra pause symbol.
MORSE_DIT_SLOTS = 1
MORSE_DAH_SLOTS = 3
MORSE_ELEMENT_GAP_SLOTS = 1
MORSE_LETTER_GAP_SLOTS = 3
MORSE_WORD_GAP_SLOTS = 7
MORSE_WORD_GAP_SYMBOLS = 1

# Word gaps for the tapped codes mirror the tap code's own convention:
# two extra silent slots on top of the letter gap.
TAP_WORD_GAP_SLOTS = 2
POLYBIUS_WORD_GAP_SLOTS = 2


def expand_digraphs(symbol: str) -> str:
    return UMLAUT_EXPANSION.get(symbol, symbol)


def _morse_elements(symbol: str) -> list[str]:
    letters = expand_digraphs(symbol)
    try:
        return [MORSE_TABLE[ch] for ch in letters]
    except KeyError:
        raise UnknownSymbol(f"no Morse code for {symbol!r}") from None


def morse_binary_cost(symbol: str) -> int:
    """Slots on the on/off timeline, letter gap included."""
    total = 0
    for elements in _morse_elements(symbol):
        slots = sum(MORSE_DAH_SLOTS if e == "-" else MORSE_DIT_SLOTS for e in elements)
        total += slots + (len(elements) - 1) * MORSE_ELEMENT_GAP_SLOTS + MORSE_LETTER_GAP_SLOTS
    return total


def morse_ternary_cost(symbol: str) -> int:
    """Symbols in the dit/dah/pause reading: elements plus one separator."""
    return sum(len(elements) + 1 for elements in _morse_elements(symbol))


class PolybiusSquare:
    """Grid cipher: a letter is a (row, column) pair of tap counts.

    ``aliases`` maps symbols onto another symbol's cell (the classic
    square reads j as i); proper cells stay unique."""

    def __init__(
        self,
        grid: dict[str, tuple[int, int]],
        layout_kind: str,
        aliases: dict[str, str] | None = None,
    ):
        coords = list(grid.values())
        if len(set(coords)) != len(coords):
            raise ValueError("cell coordinates must be unique")
        if any(r < 1 or c < 1 for r, c in coords):
            raise ValueError("rows and columns are 1-based")
        self.grid = dict(grid)
        self.layout_kind = layout_kind
        self.aliases = dict(aliases or {})

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.grid or symbol in self.aliases

    def coords(self, symbol: str) -> tuple[int, int]:
        symbol = self.aliases.get(symbol, symbol)
        try:
            return self.grid[symbol]
        except KeyError:
            raise UnknownSymbol(f"symbol {symbol!r} not in square") from None


def original_polybius() -> PolybiusSquare:
    """The classic 5x5 square with i and j sharing a cell."""
    letters = "abcdefghiklmnopqrstuvwxyz"  # j folded into i
    grid = {ch: (i // 5 + 1, i % 5 + 1) for i, ch in enumerate(letters)}
    return PolybiusSquare(grid, "original", aliases={"j": "i"})


def _diagonal_cells():
    """Cells by constant code length: (1,1), (1,2), (2,1), (1,3), ..."""
    total = 2
    while True:
        for row in range(1, total):
            yield (row, total - row)
        total += 1


def build_optimized_polybius(freqs: Mapping[str, float]) -> PolybiusSquare:
    """Frequency-ordered square filled along the diagonals of constant
    code length; grows past 5x5 when the alphabet needs it."""
    if not freqs:
        raise ValueError("frequency table must be non-empty")
    ordered = sorted(freqs, key=lambda s: (-freqs[s], s))
    cells = _diagonal_cells()
    return PolybiusSquare({s: next(cells) for s in ordered}, "optimized")


def polybius_cost(square: PolybiusSquare, symbol: str) -> int:
    """Row taps, one silent slot, column taps, two-slot letter gap."""
    total = 0
    for ch in expand_digraphs(symbol):
        row, col = square.coords(ch)
        total += row + 1 + col + 2
    return total


def huffman_lengths(freqs: Mapping[str, float]) -> dict[str, int]:
    """Binary Huffman code lengths; equal node weights resolve in favour
    of the earliest-created node, so the result is deterministic."""
    if len(freqs) < 2:
        raise DegenerateAlphabet("Huffman needs at least 2 symbols")
    if any(p < 0 for p in freqs.values()):
        raise ValueError("probabilities must be non-negative")
    lengths = {s: 0 for s in freqs}
    heap: list[tuple[float, int, list[str]]] = []
    for seq, (symbol, p) in enumerate(freqs.items()):
        heap.append((p, seq, [symbol]))
    heapq.heapify(heap)
    seq = len(heap)
    while len(heap) > 1:
        wa, _, a = heapq.heappop(heap)
        wb, _, b = heapq.heappop(heap)
        for s in a:
            lengths[s] += 1
        for s in b:
            lengths[s] += 1
        heapq.heappush(heap, (wa + wb, seq, a + b))
        seq += 1
    return lengths


def fixed_width_cost(alphabet_size: int) -> int:
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be >= 1")
    return math.ceil(math.log2(max(alphabet_size, 2)))


def tap_cost(table: TapTable, symbol: str) -> int:
    """Framed length: written form plus the two-slot end marker."""
    return len(table.codeword(symbol).framed)


def fold_digraph_frequencies(freqs: Mapping[str, float]) -> dict[str, float]:
    """Letter frequencies actually tapped in a digraph-expanding scheme:
    umlaut and ß mass lands on their replacement letters."""
    out = {ch: 0.0 for ch in MORSE_TABLE}
    for symbol, p in freqs.items():
        expanded = expand_digraphs(symbol)
        if all(ch in out for ch in expanded):
            for ch in expanded:
                out[ch] += p
    return out


def scheme_export_text(
    costs: Mapping[str, float], ternary: Mapping[str, float] | None = None
) -> str:
    """symbol<TAB>cost_bits and, when given, <TAB>cost_ternary per line."""
    lines = []
    for symbol in costs:
        line = f"{symbol}\t{costs[symbol]:g}"
        if ternary is not None:
            line += f"\t{ternary[symbol]:g}"
        lines.append(line)
    return "\n".join(lines) + "\n"
