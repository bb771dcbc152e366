"""Error types shared across the toolkit.

Every error carries a stable machine-readable ``name`` used by the CLI
(diagnostics stream) and the serve line protocol (``ERR <name>``).
"""


class TapError(Exception):
    name = "error"


class UnknownSymbol(TapError):
    name = "unknown-symbol"


class UnknownCodeword(TapError):
    name = "unknown-codeword"


class UnknownPattern(TapError):
    name = "unknown-pattern"


class TruncatedStream(TapError):
    name = "truncated-stream"


class MalformedStream(TapError):
    name = "malformed"


class InsufficientEvents(TapError):
    name = "insufficient-events"


class SlotCollision(TapError):
    name = "collision"


class AlphabetTooLarge(TapError):
    name = "alphabet-too-large"


class EmptyCorpus(TapError):
    name = "empty-corpus"


class DegenerateAlphabet(TapError):
    name = "degenerate-alphabet"
