"""Tap code toolkit: a self-delimiting binary knock code.

Letters are payloads of taps ("1") and single silences ("0"), padded to
even length and terminated by the double silence "00".
"""

from .codec import DIGIT_SUBSTITUTION, EncodeOptions, decode, encode, format_eighths
from .core import (
    CANONICAL_ENTRIES,
    GERMAN_FREQUENCY_ORDER,
    CodeWord,
    GroupPattern,
    Payload,
    TapTable,
    canonical_german_table,
    construct_data_variant,
    construct_table,
    derive_from_morse,
    enumerate_payloads,
    from_groups,
    payload_of_written,
    to_groups,
)
from .errors import TapError
from .timing import (
    TapEvent,
    TapSession,
    decode_session,
    estimate_unit,
    quantize,
    segment_relaxed,
    session_from_bits,
)

__all__ = [
    "CANONICAL_ENTRIES",
    "DIGIT_SUBSTITUTION",
    "GERMAN_FREQUENCY_ORDER",
    "CodeWord",
    "EncodeOptions",
    "GroupPattern",
    "Payload",
    "TapError",
    "TapEvent",
    "TapSession",
    "TapTable",
    "canonical_german_table",
    "construct_data_variant",
    "construct_table",
    "decode",
    "decode_session",
    "derive_from_morse",
    "encode",
    "enumerate_payloads",
    "estimate_unit",
    "format_eighths",
    "from_groups",
    "payload_of_written",
    "quantize",
    "segment_relaxed",
    "session_from_bits",
    "to_groups",
]
