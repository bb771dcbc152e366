"""Corpus statistics, the efficiency comparison and the speed estimate."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import NamedTuple

from . import schemes
from .core import canonical_german_table
from .errors import EmptyCorpus

#: The 31 analysed symbols: a-z, the four German specials and the space.
LETTERS = "abcdefghijklmnopqrstuvwxyzäöüß"
ALPHABET = LETTERS + " "


@dataclass(frozen=True)
class FrequencyTable:
    """Symbol probabilities over the full 31-symbol alphabet; raw counts
    are kept for reporting."""

    counts: dict[str, int]
    probabilities: dict[str, float]
    total: int

    @classmethod
    def from_counts(cls, counts: dict[str, int]) -> "FrequencyTable":
        full = {s: counts.get(s, 0) for s in ALPHABET}
        total = sum(full.values())
        if total == 0:
            raise EmptyCorpus("no countable symbols")
        return cls(full, {s: c / total for s, c in full.items()}, total)

    def ordered_symbols(self) -> list[str]:
        """Symbols by descending probability; alphabetic on ties."""
        return sorted(self.probabilities, key=lambda s: (-self.probabilities[s], s))


def ingest_corpus(text: str) -> FrequencyTable:
    """Lowercase, keep letters and umlauts, fold whitespace runs into
    single spaces, ignore everything else."""
    kept = []
    for ch in text.lower():
        if ch.isspace():
            kept.append(" ")
        elif ch in LETTERS:
            kept.append(ch)
    collapsed = " ".join("".join(kept).split())
    if not collapsed:
        raise EmptyCorpus("corpus contains no letters")
    counts: dict[str, int] = {}
    for ch in collapsed:
        counts[ch] = counts.get(ch, 0) + 1
    return FrequencyTable.from_counts(counts)


def load_bundled_corpus(name: str) -> str:
    """Text of a bundled public-domain corpus ('german' or 'english')."""
    path = resources.files("tapcode").joinpath(f"corpora/{name}.txt")
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ValueError(f"no bundled corpus named {name!r}") from None


@lru_cache(maxsize=None)
def bundled_frequency_table(name: str) -> FrequencyTable:
    return ingest_corpus(load_bundled_corpus(name))


@dataclass(frozen=True)
class EfficiencyReport:
    """Corpus-weighted average bits per character for every scheme, plus
    the ternary Morse reading and its binary equivalent."""

    huffman: float
    fixed_width: float
    tap: float
    polybius_optimized: float
    polybius_original: float
    morse_binary: float
    morse_ternary: float
    morse_ternary_binary: float

    def binary_rows(self) -> list[tuple[str, float]]:
        return [
            ("huffman", self.huffman),
            ("fixed_width", self.fixed_width),
            ("tap", self.tap),
            ("polybius_optimized", self.polybius_optimized),
            ("polybius_original", self.polybius_original),
            ("morse_binary", self.morse_binary),
        ]


def efficiency_report(freqs: FrequencyTable) -> EfficiencyReport:
    """Weighted averages over all schemes, canonical tap table included.

    Space is a symbol of its own for Huffman and the fixed-width code;
    for the tapped codes it costs their word-gap slots, for ternary
    Morse one pause symbol.
    """
    probs = freqs.probabilities
    p_space = probs.get(" ", 0.0)
    letters = {s: p for s, p in probs.items() if s != " "}

    lengths = schemes.huffman_lengths(probs)
    huffman = sum(p * lengths[s] for s, p in probs.items())

    fixed = float(schemes.fixed_width_cost(len(probs)))

    table = canonical_german_table()
    tap = (
        sum(p * schemes.tap_cost(table, s) for s, p in letters.items())
        + p_space * schemes.TAP_WORD_GAP_SLOTS
    )

    morse_letters = sum(p * schemes.morse_binary_cost(s) for s, p in letters.items())
    morse_binary = morse_letters + p_space * schemes.MORSE_WORD_GAP_SLOTS
    # Knocked, a dit with its gap fills two slots and a dah four, so the
    # ternary symbol stream runs at exactly half the slot rate.
    morse_ternary = morse_letters / 2 + p_space * schemes.MORSE_WORD_GAP_SYMBOLS

    original = schemes.original_polybius()
    poly_orig = (
        sum(p * schemes.polybius_cost(original, s) for s, p in letters.items())
        + p_space * schemes.POLYBIUS_WORD_GAP_SLOTS
    )
    optimized = schemes.build_optimized_polybius(schemes.fold_digraph_frequencies(probs))
    poly_opt = (
        sum(p * schemes.polybius_cost(optimized, s) for s, p in letters.items())
        + p_space * schemes.POLYBIUS_WORD_GAP_SLOTS
    )

    return EfficiencyReport(
        huffman=huffman,
        fixed_width=fixed,
        tap=tap,
        polybius_optimized=poly_opt,
        polybius_original=poly_orig,
        morse_binary=morse_binary,
        morse_ternary=morse_ternary,
        morse_ternary_binary=ternary_to_binary(morse_ternary),
    )


def ternary_to_binary(t: float) -> float:
    """Bits carrying the same information as t ternary symbols."""
    if t <= 0:
        raise ValueError("ternary symbol count must be positive")
    return t * math.log2(3)


class SpeedEstimate(NamedTuple):
    chars_per_second: float
    words_per_minute: float


def speed_estimate(bits_per_char: float, unit_seconds: float) -> SpeedEstimate:
    """Transmission speed at a given slot duration; a word counts as
    five letters plus a space."""
    if bits_per_char <= 0 or unit_seconds <= 0:
        raise ValueError("bits_per_char and unit_seconds must be positive")
    cps = 1.0 / (bits_per_char * unit_seconds)
    return SpeedEstimate(cps, cps * 60 / 6)


def render_report_tsv(report: EfficiencyReport) -> str:
    lines = [f"{name}\t{value:.3f}" for name, value in report.binary_rows()]
    lines.append(
        f"morse_ternary\t{report.morse_ternary:.3f}\t{report.morse_ternary_binary:.3f}"
    )
    return "\n".join(lines) + "\n"


def render_report_jsonl(report: EfficiencyReport) -> str:
    rows = [
        {"scheme": name, "avg_bits": round(value, 6)}
        for name, value in report.binary_rows()
    ]
    rows.append(
        {
            "scheme": "morse_ternary",
            "avg_symbols": round(report.morse_ternary, 6),
            "binary_equivalent_bits": round(report.morse_ternary_binary, 6),
        }
    )
    return "\n".join(json.dumps(r) for r in rows) + "\n"


def save_report_figure(report: EfficiencyReport, path: str) -> None:
    """Bar chart of the report, written to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = report.binary_rows()
    names = [n for n, _ in rows] + ["morse_ternary\n(binary equivalent)"]
    values = [v for _, v in rows] + [report.morse_ternary_binary]
    colors = ["steelblue"] * len(rows) + ["darkorange"]

    fig, ax = plt.subplots(figsize=(8, 4.5))
    bars = ax.bar(range(len(values)), values, color=colors)
    ax.set_xticks(range(len(values)))
    ax.set_xticklabels(names, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("average bits per character")
    ax.set_title("Code efficiency comparison")
    ax.bar_label(bars, fmt="%.2f", fontsize=8)
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
