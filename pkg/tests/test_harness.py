"""Benchmark harness: pipeline behavior, reports, rendering, comparison."""

import dataclasses
import json

import pytest

from conftest import text_entry
from medasr.audio import write_wav
from medasr.backends import (
    CannedTranscriber,
    IdentityTranscriber,
    Lexicon,
    LexiconEnhancer,
    NoisyChannelConfig,
    NoisyChannelTranscriber,
    mock_tts,
)
from medasr.bench import (
    BenchmarkDataset,
    RunOptions,
    compare_reports,
    load_benchmark,
    load_report,
    render_report,
    run_benchmark,
    save_report,
)
from medasr.corpus import ManifestEntry, TtsStyleParams, write_manifest
from medasr.errors import (
    BackendError,
    EmptyCorpus,
    MismatchedCorpora,
    SchemaError,
)

TEXT_ONLY = RunOptions(text_only=True)


def _dataset(entries, name="custom"):
    return BenchmarkDataset(name=name, entries=tuple(entries))


class CountingEnhancer:
    def __init__(self):
        self.calls = 0

    def enhance(self, text):
        self.calls += 1
        return text


class TestRunBenchmark:
    def test_identity_pipeline_is_zero_error(self, tiny_manifest_entries):
        report = run_benchmark(_dataset(tiny_manifest_entries),
                               IdentityTranscriber(), options=TEXT_ONLY)
        assert len(report.records) == len(tiny_manifest_entries)
        assert all(r.wer.value == 0.0 for r in report.records)
        assert report.aggregate_mean.mean == 0.0
        assert report.aggregate_pooled.mean == 0.0

    def test_one_record_per_entry(self, tiny_manifest_entries):
        report = run_benchmark(_dataset(tiny_manifest_entries),
                               IdentityTranscriber(), options=TEXT_ONLY)
        assert sorted(r.entry_id for r in report.records) == \
            sorted(e.id for e in tiny_manifest_entries)

    def test_reproducible_with_seeded_mocks(self, tiny_manifest_entries):
        cfg = NoisyChannelConfig(sub_rate=0.3, del_rate=0.1, ins_rate=0.1, seed=5)
        def run():
            transcriber = NoisyChannelTranscriber.from_entries(
                tiny_manifest_entries, cfg)
            return run_benchmark(_dataset(tiny_manifest_entries), transcriber,
                                 options=TEXT_ONLY, timestamp="fixed")
        assert run() == run()

    def test_schedule_independent(self, tiny_manifest_entries):
        entries = tiny_manifest_entries * 7
        entries = [dataclasses.replace(e, id=f"{e.id}-{i}")
                   for i, e in enumerate(entries)]
        cfg = NoisyChannelConfig(sub_rate=0.2, seed=11)
        serial = run_benchmark(
            _dataset(entries),
            NoisyChannelTranscriber.from_entries(entries, cfg),
            options=dataclasses.replace(TEXT_ONLY, jobs=1), timestamp="t")
        threaded = run_benchmark(
            _dataset(entries),
            NoisyChannelTranscriber.from_entries(entries, cfg),
            options=dataclasses.replace(TEXT_ONLY, jobs=8), timestamp="t")
        assert serial.records == threaded.records
        assert serial.aggregate_mean == threaded.aggregate_mean

    def test_enhancer_off_never_consulted(self, tiny_manifest_entries):
        counting = CountingEnhancer()
        run_benchmark(_dataset(tiny_manifest_entries), IdentityTranscriber(),
                      enhancer=counting, options=TEXT_ONLY)
        assert counting.calls == 0

    def test_enhancer_on_requires_backend(self, tiny_manifest_entries):
        with pytest.raises(ValueError):
            run_benchmark(_dataset(tiny_manifest_entries), IdentityTranscriber(),
                          options=dataclasses.replace(TEXT_ONLY,
                                                      enhancer_enabled=True))

    def test_enhancer_reduces_wer_on_misspellings(self):
        lexicon_terms = ["amoxicillin", "sertraline", "ibuprofen", "patient",
                         "prescribed", "the", "was"]
        entries = [
            text_entry("m1", "the patient was prescribed amoxicillin"),
            text_entry("m2", "the patient was prescribed sertraline"),
        ]
        canned = CannedTranscriber({
            "m1": "the patient was prescribed amoxicilin",
            "m2": "the patient was prescribed sertralinee",
        })
        lexicon = Lexicon(frozenset(lexicon_terms))
        plain = run_benchmark(_dataset(entries), canned, options=TEXT_ONLY)
        enhanced = run_benchmark(
            _dataset(entries), canned, enhancer=LexiconEnhancer(lexicon),
            options=dataclasses.replace(TEXT_ONLY, enhancer_enabled=True))
        assert plain.aggregate_mean.mean > 0.0
        assert enhanced.aggregate_mean.mean == 0.0

    def test_failures_recorded_and_excluded(self, tiny_manifest_entries):
        canned = CannedTranscriber({
            "e1": tiny_manifest_entries[0].text,
            "e2": tiny_manifest_entries[1].text,
        })  # e3 missing -> BackendError
        report = run_benchmark(_dataset(tiny_manifest_entries), canned,
                               options=TEXT_ONLY)
        assert len(report.records) == 2
        assert [f.entry_id for f in report.failures] == ["e3"]
        total_ref = sum(r.counts.reference_length for r in report.records)
        expected = sum(len(e.text.split()) for e in tiny_manifest_entries[:2])
        assert total_ref == expected

    def test_all_failed_raises_empty_corpus(self, tiny_manifest_entries):
        class AlwaysFails:
            def transcribe(self, entry, clip=None):
                raise BackendError("down")

        with pytest.raises(EmptyCorpus):
            run_benchmark(_dataset(tiny_manifest_entries), AlwaysFails(),
                          options=TEXT_ONLY)

    def test_audio_mode_loads_and_preprocesses(self, tmp_path):
        clip = mock_tts("quick check", "male")
        entry = ManifestEntry(id="a1", audio_path="audio/a1.wav",
                              text="quick check", duration_s=clip.duration_s,
                              voice="male", style=TtsStyleParams())
        write_wav(tmp_path / "audio" / "a1.wav", clip)
        write_manifest([entry], tmp_path / "manifest.jsonl")
        dataset = load_benchmark("custom", tmp_path / "manifest.jsonl")

        seen = {}

        class ClipProbe:
            def transcribe(self, entry, clip=None):
                seen["clip"] = clip
                return entry.text

        report = run_benchmark(dataset, ClipProbe(),
                               options=RunOptions(noise_mode="spectral_gate"))
        assert report.records[0].wer.value == 0.0
        assert seen["clip"] is not None
        assert len(seen["clip"]) == len(clip)

    def test_vad_strip_shortens_padded_audio(self, tmp_path):
        from medasr.audio import standardize_duration
        voiced = mock_tts("short utterance", "male")
        padded = standardize_duration(voiced, 10.0)  # long silent tail
        entry = ManifestEntry(id="v1", audio_path="audio/v1.wav",
                              text="short utterance", duration_s=10.0,
                              voice="male", style=TtsStyleParams())
        write_wav(tmp_path / "audio" / "v1.wav", padded)
        write_manifest([entry], tmp_path / "manifest.jsonl")
        dataset = load_benchmark("custom", tmp_path / "manifest.jsonl")

        seen = {}

        class ClipProbe:
            def transcribe(self, entry, clip=None):
                seen[len(seen)] = clip
                return entry.text

        run_benchmark(dataset, ClipProbe(), options=RunOptions())
        run_benchmark(dataset, ClipProbe(), options=RunOptions(vad_strip=True))
        assert len(seen[0]) == len(padded)
        assert 0 < len(seen[1]) < len(padded)

    def test_missing_audio_is_failure_not_crash(self, tiny_manifest_entries, tmp_path):
        write_manifest(tiny_manifest_entries, tmp_path / "manifest.jsonl")
        dataset = load_benchmark("custom", tmp_path / "manifest.jsonl")
        with pytest.raises(EmptyCorpus):
            run_benchmark(dataset, IdentityTranscriber(), options=RunOptions())

    def test_empty_reference_becomes_failure(self):
        entries = [text_entry("ok", "some words"), text_entry("bad", "   ")]
        report = run_benchmark(_dataset(entries), IdentityTranscriber(),
                               options=TEXT_ONLY)
        assert [f.entry_id for f in report.failures] == ["bad"]
        assert len(report.records) == 1


class TestReportIo:
    def _report(self, tiny_manifest_entries):
        cfg = NoisyChannelConfig(sub_rate=0.4, seed=2)
        transcriber = NoisyChannelTranscriber.from_entries(
            tiny_manifest_entries, cfg)
        return run_benchmark(_dataset(tiny_manifest_entries), transcriber,
                             options=TEXT_ONLY, timestamp="2026-01-01T00:00:00Z")

    def test_save_load_roundtrip(self, tiny_manifest_entries, tmp_path):
        report = self._report(tiny_manifest_entries)
        path = tmp_path / "report.json"
        save_report(report, path)
        assert load_report(path) == report

    def test_tampered_aggregate_rejected(self, tiny_manifest_entries, tmp_path):
        report = self._report(tiny_manifest_entries)
        path = tmp_path / "report.json"
        save_report(report, path)
        obj = json.loads(path.read_text(encoding="utf-8"))
        obj["aggregates"]["mean_of_samples"]["mean"] += 0.25
        path.write_text(json.dumps(obj), encoding="utf-8")
        with pytest.raises(SchemaError):
            load_report(path)

    def test_rendering_is_deterministic(self, tiny_manifest_entries):
        report = self._report(tiny_manifest_entries)
        for fmt in ("table_text", "csv", "markdown"):
            assert render_report(report, fmt) == render_report(report, fmt)

    def test_csv_has_header_plus_rows(self, tiny_manifest_entries):
        report = self._report(tiny_manifest_entries)
        lines = render_report(report, "csv").decode("utf-8").splitlines()
        assert len(lines) == 1 + len(report.records)
        assert lines[0].startswith("entry_id,wer,")

    def test_markdown_shape(self, tiny_manifest_entries):
        report = self._report(tiny_manifest_entries)
        text = render_report(report, "markdown").decode("utf-8")
        assert report.benchmark in text
        assert "mean_of_samples" in text and "pooled" in text
        assert "| aggregate | mean | min | max | median |" in text

    def test_unknown_format_rejected(self, tiny_manifest_entries):
        with pytest.raises(ValueError):
            render_report(self._report(tiny_manifest_entries), "pdf")


class TestCompare:
    def _identity_report(self, entries, timestamp="t"):
        return run_benchmark(_dataset(entries), IdentityTranscriber(),
                             options=TEXT_ONLY, timestamp=timestamp)

    def test_equal_reports_have_zero_delta(self, tiny_manifest_entries):
        a = self._identity_report(tiny_manifest_entries)
        b = self._identity_report(tiny_manifest_entries, timestamp="later")
        delta = compare_reports(a, b)
        assert delta.mean_delta == 0.0
        assert delta.pooled_delta == 0.0
        assert all(d == 0.0 for _, d in delta.per_entry)

    def test_improvement_is_negative(self, tiny_manifest_entries):
        worse = CannedTranscriber({
            "e1": "completely wrong words here five",
            "e2": tiny_manifest_entries[1].text,
            "e3": tiny_manifest_entries[2].text,
        })
        a = run_benchmark(_dataset(tiny_manifest_entries), worse,
                          options=TEXT_ONLY, timestamp="t")
        b = self._identity_report(tiny_manifest_entries)
        delta = compare_reports(a, b)
        assert delta.mean_delta < 0.0
        deltas = dict(delta.per_entry)
        assert deltas["e1"] < 0.0 and deltas["e2"] == 0.0

    def test_mean_delta_arithmetic(self, tiny_manifest_entries):
        # One entry improves by exactly 0.2 (1 error out of 5 tokens fixed).
        entries = [text_entry("x1", "one two three four five"),
                   text_entry("x2", "alpha beta gamma delta epsilon")]
        a = run_benchmark(_dataset(entries), CannedTranscriber({
            "x1": "one two three four WRONG",
            "x2": entries[1].text,
        }), options=TEXT_ONLY, timestamp="t")
        b = self._identity_report(entries)
        delta = compare_reports(a, b)
        assert delta.mean_delta == pytest.approx(-0.2 / 2)

    def test_mismatched_names_rejected(self, tiny_manifest_entries):
        a = run_benchmark(_dataset(tiny_manifest_entries, name="tedlium"),
                          IdentityTranscriber(), options=TEXT_ONLY)
        b = run_benchmark(_dataset(tiny_manifest_entries, name="fleurs_en"),
                          IdentityTranscriber(), options=TEXT_ONLY)
        with pytest.raises(MismatchedCorpora):
            compare_reports(a, b)

    def test_mismatched_ids_rejected(self, tiny_manifest_entries):
        a = self._identity_report(tiny_manifest_entries)
        b = self._identity_report(tiny_manifest_entries[:2])
        with pytest.raises(MismatchedCorpora):
            compare_reports(a, b)


def test_dataset_requires_entries():
    with pytest.raises(EmptyCorpus):
        BenchmarkDataset(name="custom", entries=())
