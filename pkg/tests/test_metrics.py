"""Normalization, WER/CER, and aggregation behavior."""

import json
from pathlib import Path

import pytest

from medasr.errors import EmptyCorpus, EmptyReference
from medasr.metrics import (
    MEAN_OF_SAMPLES,
    POOLED,
    AlignmentCounts,
    MetricResult,
    align_counts,
    compute_cer,
    compute_wer,
    corpus_aggregate,
    normalize,
)
from medasr._rng import SplitMix64
from oracles import sorted_list_stats

GOLDEN = Path(__file__).parent / "data" / "normalize_golden.json"


class TestNormalize:
    def test_collapse_and_lowercase(self):
        assert normalize("  Hello   WORLD ").tokens == ("hello", "world")

    def test_empty(self):
        assert normalize("").tokens == ()

    def test_dosage_line(self):
        assert normalize("Amoxicillin 500 mg").tokens == ("amoxicillin", "500", "mg")

    def test_golden_file(self):
        cases = json.loads(GOLDEN.read_text(encoding="utf-8"))
        assert len(cases) == 50
        for case in cases:
            assert list(normalize(case["raw"]).tokens) == case["tokens"], case["raw"]

    def test_idempotent_on_random_strings(self):
        alphabet = "aAbB zZ\t\n é.İ0189"
        rng = SplitMix64(2024)
        for _ in range(1000):
            raw = "".join(alphabet[rng.randrange(len(alphabet))]
                          for _ in range(rng.randrange(30)))
            once = normalize(raw)
            again = normalize(once.text)
            assert once.tokens == again.tokens

    def test_token_invariants(self):
        rng = SplitMix64(99)
        alphabet = "abc XYZ\t"
        for _ in range(300):
            raw = "".join(alphabet[rng.randrange(len(alphabet))]
                          for _ in range(rng.randrange(20)))
            for token in normalize(raw).tokens:
                assert token
                assert token == token.lower()
                assert not any(ch.isspace() for ch in token)


class TestWer:
    def test_identity(self):
        counts, wer = compute_wer(normalize("a b c"), normalize("a b c"))
        assert (counts.substitutions, counts.deletions, counts.insertions) == (0, 0, 0)
        assert counts.reference_length == 3
        assert wer.value == 0.0
        assert wer.granularity == "word"

    def test_single_substitution(self):
        counts, wer = compute_wer(normalize("the patient was reviewed"),
                                  normalize("the patient is reviewed"))
        assert (counts.substitutions, counts.deletions, counts.insertions) == (1, 0, 0)
        assert counts.reference_length == 4
        assert wer.value == 0.25

    def test_wer_above_one(self):
        counts, wer = compute_wer(["a"], ["a", "b", "c"])
        assert (counts.substitutions, counts.deletions, counts.insertions) == (0, 0, 2)
        assert wer.value == 2.0

    def test_empty_hypothesis_is_all_deletions(self):
        counts, wer = compute_wer(["x", "y", "z"], [])
        assert counts.deletions == counts.reference_length == 3
        assert wer.value == 1.0

    def test_empty_reference_raises(self):
        with pytest.raises(EmptyReference):
            compute_wer([], ["a"])

    def test_raw_string_rejected(self):
        with pytest.raises(TypeError):
            compute_wer("a b", "a b")

    def test_single_corruption_gives_one_over_n(self):
        tokens = ["alpha", "beta", "gamma", "delta", "epsilon"]
        for i in range(len(tokens)):
            hyp = list(tokens)
            hyp[i] = "zzz"
            counts, wer = compute_wer(tokens, hyp)
            assert counts.substitutions == 1
            assert wer.value == pytest.approx(1.0 / len(tokens))

    def test_canonical_backtrace_is_deterministic(self):
        # Several minimal alignments exist here; the split must always be
        # the same one.
        baseline = align_counts(["a", "b"], ["b"])
        assert (baseline.substitutions, baseline.deletions,
                baseline.insertions) == (0, 1, 0)
        for _ in range(50):
            assert align_counts(["a", "b"], ["b"]) == baseline


class TestCer:
    def test_identity(self):
        _, cer = compute_cer("abc", "abc")
        assert cer.value == 0.0
        assert cer.granularity == "character"

    def test_half_substituted(self):
        counts, cer = compute_cer("ab", "ax")
        assert counts.substitutions == 1
        assert counts.reference_length == 2
        assert cer.value == 0.5

    def test_single_deletion(self):
        counts, cer = compute_cer("sertraline", "sertralin")
        assert counts.deletions == 1
        assert counts.reference_length == 10
        assert cer.value == pytest.approx(0.1)

    def test_spaces_count_as_characters(self):
        counts, _ = compute_cer("a b", "a b")
        assert counts.reference_length == 3

    def test_normalizes_before_scoring(self):
        _, cer = compute_cer("  AB   c ", "ab c")
        assert cer.value == 0.0

    def test_empty_reference_raises(self):
        with pytest.raises(EmptyReference):
            compute_cer("   ", "something")


class TestAggregate:
    def _counts(self, errors, n):
        return AlignmentCounts(errors, 0, 0, n)

    def test_odd_median(self):
        agg = corpus_aggregate([0.1, 0.3, 0.2],
                               [self._counts(1, 10)] * 3)
        assert agg.median == pytest.approx(0.2)
        assert agg.mean == pytest.approx(0.2)
        assert agg.min == 0.1 and agg.max == 0.3

    def test_even_median_is_mean_of_middles(self):
        agg = corpus_aggregate([0.1, 0.2, 0.3, 0.4], [self._counts(1, 10)] * 4)
        assert agg.median == pytest.approx(0.25)

    def test_modes_diverge(self):
        samples = [MetricResult(1.0, "word"), MetricResult(0.0, "word")]
        counts = [self._counts(1, 1), self._counts(0, 9)]
        mean_mode = corpus_aggregate(samples, counts, MEAN_OF_SAMPLES)
        pooled_mode = corpus_aggregate(samples, counts, POOLED)
        assert mean_mode.mean == pytest.approx(0.5)
        assert pooled_mode.mean == pytest.approx(0.1)

    def test_empty_raises(self):
        with pytest.raises(EmptyCorpus):
            corpus_aggregate([], [])

    def test_mismatched_lengths_raise(self):
        with pytest.raises(ValueError):
            corpus_aggregate([0.1], [])

    def test_matches_sorted_list_oracle(self):
        rng = SplitMix64(7)
        for _ in range(200):
            n = 1 + rng.randrange(20)
            values = [rng.randrange(1000) / 500.0 for _ in range(n)]
            counts = [self._counts(int(v * 10), 10) for v in values]
            agg = corpus_aggregate(values, counts)
            mean, mn, mx, med = sorted_list_stats(values)
            assert agg.mean == pytest.approx(mean)
            assert agg.min == mn and agg.max == mx
            assert agg.median == pytest.approx(med)
            assert agg.min <= agg.median <= agg.max
            assert agg.min <= agg.mean <= agg.max

    def test_pooled_mean_stays_within_range(self):
        rng = SplitMix64(13)
        for _ in range(100):
            n = 1 + rng.randrange(10)
            counts = [AlignmentCounts(rng.randrange(5), rng.randrange(3), 0,
                                      5 + rng.randrange(20)) for _ in range(n)]
            values = [c.distance / c.reference_length for c in counts]
            agg = corpus_aggregate(values, counts, POOLED)
            assert agg.min - 1e-12 <= agg.mean <= agg.max + 1e-12
