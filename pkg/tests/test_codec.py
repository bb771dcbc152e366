import random

import pytest
from hypothesis import given, strategies as st

from tapcode.codec import EncodeOptions, decode, encode, format_eighths
from tapcode.core import GERMAN_FREQUENCY_ORDER, canonical_german_table
from tapcode.errors import MalformedStream, TruncatedStream, UnknownCodeword, UnknownSymbol

TABLE = canonical_german_table()

words = st.lists(
    st.text(alphabet=GERMAN_FREQUENCY_ORDER, min_size=1, max_size=8),
    min_size=1,
    max_size=4,
)


class TestEncode:
    def test_single_letter(self):
        assert encode("e") == "1000"

    def test_two_letters(self):
        assert encode("en") == "10001100"

    def test_empty(self):
        assert encode("") == ""

    def test_lowercases(self):
        assert encode("EN") == encode("en")

    def test_digit_mode(self):
        assert encode("7", opts=EncodeOptions(digit_mode=True)) == encode("s")
        assert encode("1490", opts=EncodeOptions(digit_mode=True)) == encode("eahi")

    def test_digits_unknown_without_digit_mode(self):
        with pytest.raises(UnknownSymbol):
            encode("7")

    def test_space_adds_word_gap(self):
        assert encode("e n") == "1000" + "00" + "1100"

    def test_output_always_even(self):
        for text in ("e", "en", "ja nein", "zwölf äußerst"):
            assert len(encode(text)) % 2 == 0

    def test_unknown_symbol_names_offender(self):
        with pytest.raises(UnknownSymbol, match="'#'"):
            encode("en#e")

    def test_word_gap_zeros_validated(self):
        with pytest.raises(ValueError):
            EncodeOptions(word_gap_zeros=3)
        with pytest.raises(ValueError):
            EncodeOptions(word_gap_zeros=0)


class TestDecode:
    def test_single_letter_with_pad(self):
        assert decode("111000") == "r"

    def test_two_letters(self):
        assert decode("10001100") == "en"

    def test_word_gap(self):
        assert decode("100000001100") == "e n"

    def test_empty(self):
        assert decode("") == ""

    def test_accepts_grouped_rendering(self):
        assert decode("10 00 11 00") == "en"

    def test_leading_silence_is_malformed(self):
        with pytest.raises(MalformedStream):
            decode("001000")

    def test_non_bits_malformed(self):
        with pytest.raises(MalformedStream):
            decode("10x0")

    def test_truncated_mid_payload(self):
        with pytest.raises(TruncatedStream):
            decode("1011")

    def test_truncated_missing_marker(self):
        with pytest.raises(TruncatedStream):
            decode("10001")
        with pytest.raises(TruncatedStream):
            decode("100010")

    def test_unknown_codeword(self):
        # seven taps in a row belong to no letter
        with pytest.raises(UnknownCodeword):
            decode("1111111000")


class TestRoundTrip:
    def test_thousand_random_strings(self):
        rng = random.Random(20260809)
        symbols = list(GERMAN_FREQUENCY_ORDER)
        for i in range(1000):
            words_ = [
                "".join(rng.choice(symbols) for _ in range(rng.randint(1, 8)))
                for _ in range(rng.randint(1, 4))
            ]
            text = " ".join(words_)
            opts = EncodeOptions(digit_mode=bool(i % 2))
            assert decode(encode(text, TABLE, opts), TABLE) == text

    @given(words)
    def test_property_round_trip(self, ws):
        text = " ".join(ws)
        assert decode(encode(text)) == text

    def test_self_delimitation_all_pairs(self):
        # decoding framed(a)+framed(b) never eats into b while reading a
        for a, cwa in TABLE:
            for b, cwb in TABLE:
                assert decode(cwa.framed + cwb.framed) == a + b
                assert "00" not in cwa.payload.bits

    def test_letter_boundaries_on_even_prefixes(self):
        text = "morgen taut es"
        bits = encode(text)
        pos = 0
        for ch in text:
            if ch == " ":
                pos += 2
            else:
                pos += len(TABLE.codeword(ch).framed)
            assert pos % 2 == 0
        assert pos == len(bits)


def test_format_eighths():
    assert format_eighths("10001100") == "10 00 11 00"
    assert format_eighths("") == ""
