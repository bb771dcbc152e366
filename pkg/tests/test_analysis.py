import json
import math

import pytest

from tapcode.analysis import (
    ALPHABET,
    FrequencyTable,
    bundled_frequency_table,
    efficiency_report,
    ingest_corpus,
    load_bundled_corpus,
    render_report_jsonl,
    render_report_tsv,
    save_report_figure,
    speed_estimate,
    ternary_to_binary,
)
from tapcode.errors import EmptyCorpus


class TestIngest:
    def test_basic_counts(self):
        ft = ingest_corpus("Ab  cd.")
        nonzero = {s: c for s, c in ft.counts.items() if c}
        assert nonzero == {"a": 1, "b": 1, "c": 1, "d": 1, " ": 1}

    def test_umlauts_lowercased(self):
        ft = ingest_corpus("ÄÖÜ")
        nonzero = {s: c for s, c in ft.counts.items() if c}
        assert nonzero == {"ä": 1, "ö": 1, "ü": 1}

    def test_nothing_retained(self):
        with pytest.raises(EmptyCorpus):
            ingest_corpus("123")
        with pytest.raises(EmptyCorpus):
            ingest_corpus("   ")

    def test_whitespace_runs_collapse(self):
        ft = ingest_corpus("a \t\n b")
        assert ft.counts[" "] == 1

    def test_edges_stripped(self):
        ft = ingest_corpus("  ab  ")
        assert ft.counts[" "] == 0

    def test_full_alphabet_present(self):
        ft = ingest_corpus("nur wenige zeichen")
        assert set(ft.probabilities) == set(ALPHABET)
        assert len(ft.probabilities) == 31

    def test_probabilities_sum_to_one(self):
        ft = ingest_corpus(load_bundled_corpus("german"))
        assert sum(ft.probabilities.values()) == pytest.approx(1.0, abs=1e-9)
        assert all(p >= 0 for p in ft.probabilities.values())

    def test_ordered_symbols(self):
        ft = ingest_corpus("eee nn a")
        order = ft.ordered_symbols()
        assert order[0] == "e"
        assert order.index("n") < order.index("a")


class TestReport:
    def test_german_figures_in_windows(self):
        r = efficiency_report(bundled_frequency_table("german"))
        assert r.huffman == pytest.approx(4.2, abs=0.4)
        assert r.fixed_width == 5
        assert r.tap == pytest.approx(6.0, abs=0.5)
        assert r.morse_binary == pytest.approx(8.26, abs=1.0)
        assert r.morse_ternary == pytest.approx(4.13, abs=0.5)
        assert r.polybius_original == pytest.approx(7.7, abs=1.0)
        assert r.polybius_optimized == pytest.approx(6.5, abs=0.8)

    @pytest.mark.parametrize("corpus", ["german", "english"])
    def test_scheme_ordering(self, corpus):
        r = efficiency_report(bundled_frequency_table(corpus))
        assert (
            r.huffman
            < r.fixed_width
            < r.tap
            < r.polybius_optimized
            <= r.polybius_original
            < r.morse_binary
        )
        assert r.morse_ternary < r.fixed_width

    def test_single_dominant_symbol(self):
        r = efficiency_report(FrequencyTable.from_counts({"e": 1000}))
        assert r.tap == pytest.approx(4.0, abs=1e-9)

    def test_scale_invariance(self):
        ft = bundled_frequency_table("german")
        a = efficiency_report(ft)
        doubled = FrequencyTable.from_counts({s: 2 * c for s, c in ft.counts.items()})
        b = efficiency_report(doubled)
        for name, value in a.binary_rows():
            assert value == pytest.approx(dict(b.binary_rows())[name], abs=1e-9)
        assert a.morse_ternary == pytest.approx(b.morse_ternary, abs=1e-9)

    def test_language_swap_small_shift(self):
        de = efficiency_report(bundled_frequency_table("german"))
        en = efficiency_report(bundled_frequency_table("english"))
        for name, de_value in de.binary_rows():
            assert abs(de_value - dict(en.binary_rows())[name]) < 0.5
        assert abs(de.morse_ternary - en.morse_ternary) < 0.5

    def test_huffman_never_beaten(self):
        r = efficiency_report(bundled_frequency_table("german"))
        assert all(r.huffman <= value for _, value in r.binary_rows())


class TestTernaryToBinary:
    def test_paper_value(self):
        assert ternary_to_binary(4.13) == pytest.approx(6.545, abs=0.001)

    def test_log2_of_three(self):
        assert ternary_to_binary(1) == pytest.approx(math.log2(3))

    def test_linear(self):
        assert ternary_to_binary(0.5) == pytest.approx(0.792, abs=0.001)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ternary_to_binary(0)


class TestSpeedEstimate:
    def test_paper_scenario(self):
        cps, wpm = speed_estimate(6, 1 / 6)
        assert cps == pytest.approx(1.0)
        assert wpm == pytest.approx(10.0)

    def test_half_tempo(self):
        cps, wpm = speed_estimate(6, 1 / 3)
        assert (cps, wpm) == (pytest.approx(0.5), pytest.approx(5.0))

    def test_reciprocal(self):
        cps, wpm = speed_estimate(4, 1 / 4)
        assert (cps, wpm) == (pytest.approx(1.0), pytest.approx(10.0))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            speed_estimate(0, 1)


class TestRendering:
    def test_tsv_lines(self):
        r = efficiency_report(bundled_frequency_table("german"))
        lines = render_report_tsv(r).strip().splitlines()
        assert lines[0].startswith("huffman\t")
        assert lines[-1].startswith("morse_ternary\t")
        assert len(lines[-1].split("\t")) == 3

    def test_jsonl_parses(self):
        r = efficiency_report(bundled_frequency_table("german"))
        rows = [json.loads(line) for line in render_report_jsonl(r).strip().splitlines()]
        schemes = {row["scheme"] for row in rows}
        assert "huffman" in schemes and "morse_ternary" in schemes
        ternary = [row for row in rows if row["scheme"] == "morse_ternary"][0]
        assert ternary["binary_equivalent_bits"] == pytest.approx(
            ternary_to_binary(r.morse_ternary), abs=1e-5
        )

    def test_figure_written(self, tmp_path):
        r = efficiency_report(bundled_frequency_table("german"))
        out = tmp_path / "efficiency.png"
        save_report_figure(r, str(out))
        assert out.stat().st_size > 1000


def test_bundled_corpora_exist():
    assert len(load_bundled_corpus("german")) > 2000
    assert len(load_bundled_corpus("english")) > 2000
    with pytest.raises(ValueError):
        load_bundled_corpus("klingon")
