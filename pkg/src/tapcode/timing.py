"""Timestamped tap sessions: grid quantization and rhythm-free decoding.

Strict mode snaps onsets to a sixteenth grid and hands the bitstream to
the codec.  Relaxed mode only counts consecutive taps and classifies the
pauses between them, so the exact rhythm does not matter; merely the
pause after a letter has to be longer.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import codec
from .core import GroupPattern, TapTable, canonical_german_table, from_groups
from .errors import (
    InsufficientEvents,
    SlotCollision,
    UnknownCodeword,
    UnknownPattern,
)

#: Gap thresholds in units: below GROUP_GAP_RATIO taps join one group,
#: up to LETTER_GAP_RATIO they separate groups, beyond they end the
#: letter.  Midpoints between the 1-, 2- and 3-unit gaps of the exact
#: grid, giving maximal margins.
GROUP_GAP_RATIO = 1.5
LETTER_GAP_RATIO = 2.5


@dataclass(frozen=True)
class TapEvent:
    onset_ms: float

    def __post_init__(self) -> None:
        if self.onset_ms < 0:
            raise ValueError("onset must be non-negative")


@dataclass(frozen=True)
class TapSession:
    events: tuple[TapEvent, ...]
    end_ms: float
    unit_ms: float | None = None

    def __post_init__(self) -> None:
        onsets = [e.onset_ms for e in self.events]
        if any(b <= a for a, b in zip(onsets, onsets[1:])):
            raise ValueError("onsets must be strictly increasing")
        if onsets and self.end_ms < onsets[-1]:
            raise ValueError("end_ms must not precede the last onset")
        if self.unit_ms is not None and self.unit_ms <= 0:
            raise ValueError("unit_ms must be positive")

    @classmethod
    def from_onsets(
        cls, onsets: list[float], end_ms: float, unit_ms: float | None = None
    ) -> "TapSession":
        return cls(tuple(TapEvent(o) for o in onsets), end_ms, unit_ms)

    @property
    def onsets(self) -> list[float]:
        return [e.onset_ms for e in self.events]

    def scaled(self, factor: float) -> "TapSession":
        """Uniform tempo change: onsets, end and unit all scale together."""
        return TapSession(
            tuple(TapEvent(e.onset_ms * factor) for e in self.events),
            self.end_ms * factor,
            None if self.unit_ms is None else self.unit_ms * factor,
        )


def estimate_unit(session: TapSession) -> float:
    """Center of the smallest inter-onset interval cluster.

    Consecutive taps sit one unit apart, so the smallest cluster is the
    unit even when letter gaps dominate the counts in slow tapping.
    """
    if len(session.events) < 2:
        raise InsufficientEvents("need at least 2 taps to estimate the unit")
    onsets = session.onsets
    intervals = sorted(b - a for a, b in zip(onsets, onsets[1:]))
    cluster = [intervals[0]]
    for v in intervals[1:]:
        if v <= 1.5 * (sum(cluster) / len(cluster)):
            cluster.append(v)
        else:
            break
    return sum(cluster) / len(cluster)


def quantize(session: TapSession, unit_ms: float) -> str:
    """Snap onsets to the grid: slot round(onset/unit) gets a 1.

    The stream runs through round(end/unit) slots; two taps landing in
    one slot mean the tempo is too fast for the grid.
    """
    if unit_ms <= 0:
        raise ValueError("unit_ms must be positive")
    slots = [int(round(e.onset_ms / unit_ms)) for e in session.events]
    for a, b in zip(slots, slots[1:]):
        if a == b:
            raise SlotCollision(f"two taps fall into slot {a}; grid too coarse")
    n_slots = int(round(session.end_ms / unit_ms))
    if slots:
        n_slots = max(n_slots, slots[-1] + 1)
    filled = set(slots)
    return "".join("1" if i in filled else "0" for i in range(n_slots))


def _segment_letters(
    session: TapSession,
    group_gap_ratio: float,
    letter_gap_ratio: float,
) -> list[tuple[GroupPattern, bool]]:
    """Split a session into letters; each comes with a flag telling
    whether a word gap (twice the letter threshold) follows it."""
    if not 1 < group_gap_ratio < letter_gap_ratio:
        raise ValueError("need 1 < group_gap_ratio < letter_gap_ratio")
    if not session.events:
        raise InsufficientEvents("session has no taps")
    onsets = session.onsets
    if len(onsets) == 1:
        return [(GroupPattern((1,)), False)]
    unit = session.unit_ms if session.unit_ms is not None else estimate_unit(session)
    group_gap = group_gap_ratio * unit
    letter_gap = letter_gap_ratio * unit
    word_gap = 2 * letter_gap_ratio * unit

    letters: list[tuple[GroupPattern, bool]] = []
    groups: list[int] = [1]
    for prev, cur in zip(onsets, onsets[1:]):
        gap = cur - prev
        if gap < group_gap:
            groups[-1] += 1
        elif gap < letter_gap:
            groups.append(1)
        else:
            letters.append((GroupPattern(tuple(groups)), gap >= word_gap))
            groups = [1]
    letters.append((GroupPattern(tuple(groups)), False))
    return letters


def segment_relaxed(
    session: TapSession,
    group_gap_ratio: float = GROUP_GAP_RATIO,
    letter_gap_ratio: float = LETTER_GAP_RATIO,
) -> list[GroupPattern]:
    """Group patterns heard in the session, one per letter."""
    return [p for p, _ in _segment_letters(session, group_gap_ratio, letter_gap_ratio)]


def decode_session(
    session: TapSession,
    table: TapTable | None = None,
    mode: str = "relaxed",
) -> str:
    """Decode a session to text, via the grid (strict) or by counting
    taps per group (relaxed)."""
    table = table or canonical_german_table()
    if not session.events:
        raise InsufficientEvents("session has no taps")
    if mode == "strict":
        unit = session.unit_ms if session.unit_ms is not None else estimate_unit(session)
        origin = session.events[0].onset_ms
        shifted = TapSession(
            tuple(TapEvent(e.onset_ms - origin) for e in session.events),
            session.end_ms - origin,
            unit,
        )
        return codec.decode(quantize(shifted, unit), table)
    if mode == "relaxed":
        out: list[str] = []
        for pattern, space_after in _segment_letters(
            session, GROUP_GAP_RATIO, LETTER_GAP_RATIO
        ):
            try:
                out.append(table.symbol_for_payload(from_groups(pattern)))
            except UnknownCodeword:
                raise UnknownPattern(f"no symbol taps like {pattern}") from None
            if space_after:
                out.append(" ")
        return "".join(out)
    raise ValueError(f"mode must be 'strict' or 'relaxed', got {mode!r}")


def session_from_bits(bits: str, unit_ms: float) -> TapSession:
    """Synthetic grid-exact session for a bitstream (testing, drills)."""
    onsets = [i * unit_ms for i, b in enumerate(bits) if b == "1"]
    return TapSession.from_onsets(onsets, len(bits) * unit_ms, unit_ms)


def format_session_text(session: TapSession) -> str:
    """One onset (integer ms) per line, final line ``END <ms>``."""
    lines = [str(int(round(e.onset_ms))) for e in session.events]
    lines.append(f"END {int(round(session.end_ms))}")
    return "\n".join(lines) + "\n"


def parse_session_text(text: str) -> TapSession:
    onsets: list[float] = []
    end_ms: float | None = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if end_ms is not None:
            raise ValueError(f"line {lineno}: content after END")
        if line.upper().startswith("END"):
            end_ms = float(line.split()[1])
        else:
            onsets.append(float(line))
    if end_ms is None:
        raise ValueError("session text must finish with 'END <ms>'")
    return TapSession.from_onsets(onsets, end_ms)
