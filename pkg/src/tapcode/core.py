"""Core of the tap code: payloads, codewords, tables and group notation.

A letter is carried by a *payload*: a bit string that starts and ends
with a tap ("1") and never contains the double silence "00".  The
*written* form pads odd payloads with a single "0" so every letter
spans a whole number of eighth beats; the *framed* form appends the
"00" rest that marks the end of the letter on the wire.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AlphabetTooLarge, UnknownCodeword, UnknownSymbol

#: Longest payload used for table construction (covers the canonical table).
MAX_TABLE_PAYLOAD_LEN = 8

#: The one minimal-popcount payload left unassigned in the canonical table:
#: rhythmically it is a very long syncopation, so it is skipped on purpose.
EXCLUDED_SYNCOPATION = "11010101"


@dataclass(frozen=True)
class Payload:
    """Information-bearing bit core of a codeword (no "00", 1...1)."""

    bits: str

    def __post_init__(self) -> None:
        b = self.bits
        if not b or b.strip("01"):
            raise ValueError(f"payload must be a non-empty 0/1 string, got {b!r}")
        if b[0] != "1" or b[-1] != "1":
            raise ValueError(f"payload must start and end with 1, got {b!r}")
        if "00" in b:
            raise ValueError(f"payload must not contain '00', got {b!r}")

    @property
    def written(self) -> str:
        """Payload plus one pad 0 when its length is odd (eighth-beat rule)."""
        return self.bits + "0" if len(self.bits) % 2 else self.bits

    @property
    def framed(self) -> str:
        """Written form plus the "00" end marker; the unit actually sent."""
        return self.written + "00"

    @property
    def popcount(self) -> int:
        return self.bits.count("1")

    def sort_key(self) -> tuple[int, int, int]:
        """Cheapest-first order: framed length, then taps, then the
        deterministic tiebreak (descending numeric value of the written form)."""
        return (len(self.framed), self.popcount, -int(self.written, 2))

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True)
class CodeWord:
    payload: Payload

    @property
    def written(self) -> str:
        return self.payload.written

    @property
    def framed(self) -> str:
        return self.payload.framed

    def __str__(self) -> str:
        return self.written


@dataclass(frozen=True)
class GroupPattern:
    """A letter as counts of consecutive taps, e.g. m = 1,2,1."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or any(c < 1 for c in self.counts):
            raise ValueError(f"group counts must be positive, got {self.counts}")

    @classmethod
    def parse(cls, text: str) -> "GroupPattern":
        return cls(tuple(int(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


def to_groups(p: Payload) -> GroupPattern:
    """Run lengths of 1s in the payload, in order."""
    return GroupPattern(tuple(len(run) for run in p.bits.split("0")))


def from_groups(g: GroupPattern) -> Payload:
    """Inverse of :func:`to_groups`: tap runs joined by single silences."""
    return Payload("0".join("1" * c for c in g.counts))


def enumerate_payloads(max_payload_len: int) -> list[Payload]:
    """All valid payloads of length 1..max_payload_len, cheapest first.

    Order: framed length ascending, popcount ascending, then descending
    numeric value of the written form.
    """
    if max_payload_len < 1:
        raise ValueError("max_payload_len must be >= 1")
    found: list[str] = []
    frontier = ["1"]
    while frontier:
        found.extend(frontier)
        nxt = []
        for bits in frontier:
            if len(bits) + 1 <= max_payload_len:
                nxt.append(bits + "1")
            if len(bits) + 2 <= max_payload_len:
                nxt.append(bits + "01")
        frontier = nxt
    payloads = [Payload(b) for b in found]
    payloads.sort(key=Payload.sort_key)
    return payloads


# The canonical table: German frequency order against the written forms
# exactly as assigned by the code's author.  Within equal (framed length,
# popcount) the assignment order is a design choice, not an algorithm,
# so it is kept as data.
CANONICAL_ENTRIES: tuple[tuple[str, str], ...] = (
    ("e", "10"),
    ("n", "11"),
    ("i", "1010"),
    ("r", "1110"),
    ("s", "1101"),
    ("t", "1011"),
    ("a", "1111"),
    ("h", "101010"),
    ("d", "111010"),
    ("l", "110110"),
    ("u", "101110"),
    ("c", "110101"),
    ("m", "101101"),
    ("g", "101011"),
    ("o", "111110"),
    ("b", "111101"),
    ("f", "111011"),
    ("w", "110111"),
    ("k", "101111"),
    ("z", "111111"),
    ("p", "10101010"),
    ("v", "10110110"),
    ("ä", "11101010"),
    ("ü", "10111010"),
    ("ß", "10101110"),
    ("ö", "10101011"),
    ("j", "11011010"),
    ("x", "10101101"),
    ("y", "10110101"),
    ("q", "11010110"),
    (".", "10111110"),
    ("?", "11101011"),
)

#: German alphabet in descending frequency, as used to build the canonical table.
GERMAN_FREQUENCY_ORDER: tuple[str, ...] = tuple(s for s, _ in CANONICAL_ENTRIES)


def payload_of_written(written: str) -> Payload:
    """Recover the payload from a written form (drop the pad 0 if present)."""
    if not written or written.strip("01"):
        raise ValueError(f"written form must be a non-empty 0/1 string, got {written!r}")
    return Payload(written[:-1] if written.endswith("0") else written)


class TapTable:
    """Ordered symbol -> codeword map with reverse lookup by written form."""

    def __init__(self, entries: list[tuple[str, CodeWord]]):
        # Stable sort keeps the assignment order within equal keys.
        self.entries = sorted(
            entries, key=lambda e: (len(e[1].framed), e[1].payload.popcount)
        )
        self._by_symbol: dict[str, CodeWord] = {}
        self._by_written: dict[str, str] = {}
        for symbol, cw in self.entries:
            if symbol in self._by_symbol:
                raise ValueError(f"duplicate symbol {symbol!r}")
            if cw.written in self._by_written:
                raise ValueError(f"duplicate written form {cw.written!r}")
            self._by_symbol[symbol] = cw
            self._by_written[cw.written] = symbol

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._by_symbol

    def __iter__(self):
        return iter(self.entries)

    @property
    def symbols(self) -> list[str]:
        return [s for s, _ in self.entries]

    def codeword(self, symbol: str) -> CodeWord:
        try:
            return self._by_symbol[symbol]
        except KeyError:
            raise UnknownSymbol(f"symbol {symbol!r} not in table") from None

    def symbol_for_written(self, written: str) -> str:
        try:
            return self._by_written[written]
        except KeyError:
            raise UnknownCodeword(f"no symbol with written form {written!r}") from None

    def symbol_for_payload(self, payload: Payload) -> str:
        return self.symbol_for_written(payload.written)

    def export_text(self) -> str:
        """One line per entry: symbol<TAB>written<TAB>groups (comma-separated)."""
        lines = [
            f"{symbol}\t{cw.written}\t{to_groups(cw.payload)}"
            for symbol, cw in self.entries
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_export_text(cls, text: str) -> "TapTable":
        entries = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) < 2:
                raise ValueError(f"line {lineno}: expected symbol<TAB>written")
            symbol, written = fields[0], fields[1]
            entries.append((symbol, CodeWord(payload_of_written(written))))
        return cls(entries)


def _canonical_payload_sequence() -> list[Payload]:
    """Assignment order used in canonical mode: the embedded table first,
    then every remaining payload up to the supported length in the
    deterministic order, still skipping the avoided syncopation."""
    head = [payload_of_written(w) for _, w in CANONICAL_ENTRIES]
    used = {p.bits for p in head}
    used.add(EXCLUDED_SYNCOPATION)
    tail = [p for p in enumerate_payloads(MAX_TABLE_PAYLOAD_LEN) if p.bits not in used]
    return head + tail


def construct_table(
    symbols_by_frequency: list[str] | tuple[str, ...],
    tiebreak: str = "canonical",
) -> TapTable:
    """Assign the i-th most frequent symbol the i-th cheapest payload.

    ``canonical`` follows the embedded assignment order (and skips the
    syncopation payload); ``deterministic`` breaks ties by descending
    numeric value of the written form and excludes nothing.
    """
    symbols = list(symbols_by_frequency)
    if not symbols:
        raise ValueError("symbol list must be non-empty")
    if len(set(symbols)) != len(symbols):
        raise ValueError("symbols must be distinct")
    if tiebreak == "canonical":
        sequence = _canonical_payload_sequence()
    elif tiebreak == "deterministic":
        sequence = enumerate_payloads(MAX_TABLE_PAYLOAD_LEN)
    else:
        raise ValueError(f"tiebreak must be 'canonical' or 'deterministic', got {tiebreak!r}")
    if len(symbols) > len(sequence):
        raise AlphabetTooLarge(
            f"{len(symbols)} symbols but only {len(sequence)} payloads "
            f"up to length {MAX_TABLE_PAYLOAD_LEN}"
        )
    return TapTable([(s, CodeWord(p)) for s, p in zip(symbols, sequence)])


@lru_cache(maxsize=1)
def canonical_german_table() -> TapTable:
    """The 32-entry table for German frequencies (e=10 ... ?=11101011)."""
    return construct_table(GERMAN_FREQUENCY_ORDER, tiebreak="canonical")


# Morse derivation.  Knocked, a dit occupies one sixteenth ("1") and a
# dah a full eighth ("10").  Two element sequences sound identical when
# their tap onsets coincide; of each such pair exactly one has even
# length and that one is kept.

MORSE_DIT_BITS = "1"
MORSE_DAH_BITS = "10"


def derive_from_morse(max_elements: int) -> set[str]:
    """Written forms obtained by knocking all dit/dah sequences of up to
    ``max_elements`` elements and resolving same-sound collisions in
    favour of the even-length (eighth raster) rendering."""
    if max_elements < 1:
        raise ValueError("max_elements must be >= 1")
    collision_classes: dict[str, set[str]] = {}
    frontier = [""]
    for _ in range(max_elements):
        frontier = [seq + el for seq in frontier for el in (MORSE_DIT_BITS, MORSE_DAH_BITS)]
        for rendering in frontier:
            onsets = rendering.rstrip("0")
            collision_classes.setdefault(onsets, set()).add(rendering)
    kept = set()
    for renderings in collision_classes.values():
        even = [r for r in renderings if len(r) % 2 == 0]
        if even:
            kept.add(even[0])
    return kept


def construct_data_variant(k: int) -> list[str]:
    """First ``k`` codewords of the unpadded data-encoding variant.

    Dropping the even-length rule frees "0" for the most frequent
    symbol; every other codeword is payload+"00", cheapest payloads
    first.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    words = ["0"]
    if k > 1:
        # Enough lengths that k payloads certainly exist (counts grow as
        # the Fibonacci numbers).
        max_len = 2
        payloads = enumerate_payloads(max_len)
        while len(payloads) < k - 1:
            max_len += 1
            payloads = enumerate_payloads(max_len)
        payloads.sort(key=lambda p: (len(p.bits), p.popcount, -int(p.bits, 2)))
        words.extend(p.bits + "00" for p in payloads[: k - 1])
    return words
