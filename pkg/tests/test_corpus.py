"""Corpus pipeline: ingestion, generation, synthesis, split, persistence."""

import uuid

import pytest

from medasr.backends import MockTextGenerator, MockTtsBackend
from medasr.corpus import (
    ManifestEntry,
    SourceRecord,
    SplitConfig,
    TtsStyleParams,
    asr_defaults,
    asr_epoch_preset,
    emit_training_configs,
    enhancer_defaults,
    generate_text,
    ingest_sources,
    parse_training_config,
    read_manifest,
    read_sentences,
    split_dataset,
    synthesize_audio,
    write_manifest,
    write_sentences,
)
from medasr.errors import BackendError, EmptySource, SchemaError


def _csv(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestIngest:
    COLUMNS = {"code": "Code", "term": "Term", "description": "Description"}

    def test_field_mapping(self, tmp_path):
        path = _csv(tmp_path, "icd.csv",
                    "Code,Term,Description\n"
                    "F10.10,Alcohol abuse,uncomplicated\n")
        result = ingest_sources([path], "ICD10", self.COLUMNS)
        assert result.records == (
            SourceRecord("ICD10", "F10.10", "Alcohol abuse", "uncomplicated"),)
        assert result.duplicates == 0

    def test_duplicates_dropped_and_counted(self, tmp_path):
        path = _csv(tmp_path, "icd.csv",
                    "Code,Term,Description\n"
                    "F10.10,Alcohol abuse,uncomplicated\n"
                    "F10.10,Alcohol abuse,uncomplicated\n")
        result = ingest_sources([path], "ICD10", self.COLUMNS)
        assert len(result.records) == 1
        assert result.duplicates == 1

    def test_empty_file_raises(self, tmp_path):
        path = _csv(tmp_path, "empty.csv", "Code,Term,Description\n")
        with pytest.raises(EmptySource):
            ingest_sources([path], "ICD10", self.COLUMNS)

    def test_missing_column_raises(self, tmp_path):
        path = _csv(tmp_path, "bad.csv", "Code,Name\nF1,foo\n")
        with pytest.raises(SchemaError):
            ingest_sources([path], "ICD10", self.COLUMNS)

    def test_tab_delimited(self, tmp_path):
        path = _csv(tmp_path, "fda.tsv", "Term\tDescription\nibuprofen\tNSAID\n")
        result = ingest_sources([path], "FDA",
                                {"term": "Term", "description": "Description"},
                                delimiter="\t")
        assert result.records[0].term == "ibuprofen"
        assert result.records[0].code == ""

    def test_empty_terms_skipped(self, tmp_path):
        path = _csv(tmp_path, "gaps.csv",
                    "Code,Term,Description\nA, ,x\nB,real term,y\n")
        result = ingest_sources([path], "MIMS", self.COLUMNS)
        assert len(result.records) == 1
        assert result.skipped == 1


def _records(n):
    return [SourceRecord("ICD10", f"C{i:03d}", f"term{i:03d}", "desc")
            for i in range(n)]


class TestGenerateText:
    def test_one_sentence_per_record_in_order(self):
        sentences = generate_text(_records(3), MockTextGenerator(), seed=7)
        assert len(sentences) == 3
        assert [s.term for s in sentences] == ["term000", "term001", "term002"]

    def test_term_appears_verbatim(self):
        for s in generate_text(_records(5), MockTextGenerator(), seed=7):
            assert s.term in s.text

    def test_ids_are_unique_uuids(self):
        sentences = generate_text(_records(50), MockTextGenerator())
        ids = {s.id for s in sentences}
        assert len(ids) == 50
        for sid in ids:
            assert str(uuid.UUID(sid)) == sid

    def test_same_seed_reproduces(self):
        a = generate_text(_records(10), MockTextGenerator(), seed=42)
        b = generate_text(_records(10), MockTextGenerator(), seed=42)
        assert a == b

    def test_different_seed_changes_ids(self):
        a = generate_text(_records(4), MockTextGenerator(), seed=1)
        b = generate_text(_records(4), MockTextGenerator(), seed=2)
        assert {s.id for s in a}.isdisjoint({s.id for s in b})

    def test_empty_records_raise(self):
        with pytest.raises(EmptySource):
            generate_text([], MockTextGenerator())

    def test_backend_error_carries_index(self):
        class Failing:
            def generate(self, term, description, seed):
                if term == "term002":
                    raise BackendError("model unavailable", status=503)
                return "ctx", f"sentence about {term}"

        with pytest.raises(BackendError, match="record 2"):
            generate_text(_records(5), Failing())

    def test_jobs_do_not_change_output(self):
        serial = generate_text(_records(20), MockTextGenerator(), jobs=1)
        pooled = generate_text(_records(20), MockTextGenerator(), jobs=4)
        assert serial == pooled

    def test_count_preserving_at_any_scale(self):
        # one sentence per record, one clip per (sentence, voice): the corpus
        # sizes scale multiplicatively (60k + 335k records -> 395k sentences
        # -> 790k clips over two voices).
        for n in (1, 17, 240):
            assert len(generate_text(_records(n), MockTextGenerator())) == n
        assert 60_000 + 335_000 == 395_000
        assert 395_000 * 2 == 790_000

    def test_sentences_roundtrip(self, tmp_path):
        sentences = generate_text(_records(5), MockTextGenerator())
        path = tmp_path / "sentences.jsonl"
        write_sentences(sentences, path)
        assert read_sentences(path) == sentences


class TestSynthesizeAudio:
    def _sentences(self, n=2):
        return generate_text(_records(n), MockTextGenerator(), seed=3)

    def test_one_entry_per_sentence_voice_pair(self, tmp_path):
        entries = synthesize_audio(self._sentences(2), MockTtsBackend(),
                                   TtsStyleParams(), ["male", "female"], tmp_path)
        assert len(entries) == 4
        for entry in entries:
            assert entry.duration_s == 30.0
            assert (tmp_path / entry.audio_path).exists()

    def test_style_recorded(self, tmp_path):
        style = TtsStyleParams(alpha=0.3, beta=0.7, diffusion_steps=6,
                               embedding_scale=1.0)
        entries = synthesize_audio(self._sentences(1), MockTtsBackend(),
                                   style, ["male"], tmp_path)
        assert entries[0].style == style

    def test_resume_skips_existing(self, tmp_path):
        sentences = self._sentences(1)
        first = synthesize_audio(sentences, MockTtsBackend(), TtsStyleParams(),
                                 ["male"], tmp_path)
        target = tmp_path / first[0].audio_path
        stamp = target.stat().st_mtime_ns
        again = synthesize_audio(sentences, MockTtsBackend(), TtsStyleParams(),
                                 ["male"], tmp_path, resume=True)
        assert again == first
        assert target.stat().st_mtime_ns == stamp

    def test_unknown_voice_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            synthesize_audio(self._sentences(1), MockTtsBackend(),
                             TtsStyleParams(), ["robot"], tmp_path)

    def test_tts_failure_names_sentence(self, tmp_path):
        class Failing:
            def tts(self, text, voice, style):
                raise BackendError("synth down")

        sentences = self._sentences(1)
        with pytest.raises(BackendError, match=sentences[0].id):
            synthesize_audio(sentences, Failing(), TtsStyleParams(),
                             ["male"], tmp_path)

    def test_deterministic_files(self, tmp_path):
        sentences = self._sentences(1)
        a = synthesize_audio(sentences, MockTtsBackend(), TtsStyleParams(),
                             ["male"], tmp_path / "a")
        b = synthesize_audio(sentences, MockTtsBackend(), TtsStyleParams(),
                             ["male"], tmp_path / "b")
        bytes_a = (tmp_path / "a" / a[0].audio_path).read_bytes()
        bytes_b = (tmp_path / "b" / b[0].audio_path).read_bytes()
        assert bytes_a == bytes_b


class TestSplit:
    def _entries(self, n):
        return [f"entry{i}" for i in range(n)]

    def test_floor_rule(self):
        train, test = split_dataset(self._entries(10), SplitConfig(ratio=0.8))
        assert (len(train), len(test)) == (8, 2)

    def test_seed_determinism(self):
        entries = self._entries(100)
        a = split_dataset(entries, SplitConfig(seed=42))
        b = split_dataset(entries, SplitConfig(seed=42))
        assert a == b

    def test_partition_property(self):
        entries = self._entries(37)
        train, test = split_dataset(entries, SplitConfig(ratio=0.8, seed=5))
        assert set(train).isdisjoint(test)
        assert sorted(train + test) == sorted(entries)

    def test_seed_changes_partition(self):
        entries = self._entries(64)
        a = split_dataset(entries, SplitConfig(seed=1))
        b = split_dataset(entries, SplitConfig(seed=2))
        assert a != b

    def test_input_order_matters(self):
        entries = self._entries(32)
        a = split_dataset(entries, SplitConfig(seed=9))
        b = split_dataset(list(reversed(entries)), SplitConfig(seed=9))
        assert a != b

    def test_ratio_validation(self):
        with pytest.raises(ValueError):
            SplitConfig(ratio=1.0)
        with pytest.raises(ValueError):
            SplitConfig(ratio=0.0)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            split_dataset([], SplitConfig())


class TestManifest:
    def _entries(self, n=5):
        return [ManifestEntry(id=f"id-{i}", audio_path=f"audio/{i}.wav",
                              text=f"utterance {i}", duration_s=30.0,
                              voice="male" if i % 2 else "female",
                              style=TtsStyleParams(), source="MIMS")
                for i in range(n)]

    def test_roundtrip_preserves_order_and_values(self, tmp_path):
        entries = self._entries()
        path = tmp_path / "manifest.jsonl"
        write_manifest(entries, path)
        assert read_manifest(path) == entries

    def test_style_subrecord_lossless(self, tmp_path):
        entry = ManifestEntry(id="x", audio_path="audio/x.wav", text="t",
                              duration_s=30.0, voice="male",
                              style=TtsStyleParams(alpha=0.125, beta=0.5,
                                                   diffusion_steps=9,
                                                   embedding_scale=2.5),
                              source="FDA")
        path = tmp_path / "manifest.jsonl"
        write_manifest([entry], path)
        assert read_manifest(path)[0].style == entry.style

    def test_missing_field_names_line(self, tmp_path):
        path = tmp_path / "manifest.jsonl"
        write_manifest(self._entries(3), path)
        lines = path.read_text(encoding="utf-8").splitlines()
        lines[1] = lines[1].replace('"text":"utterance 1",', "")
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        with pytest.raises(SchemaError, match=r":2"):
            read_manifest(path)

    def test_unicode_text_survives(self, tmp_path):
        entry = ManifestEntry(id="u", audio_path="audio/u.wav",
                              text="naïve Ärzte münchen ß", duration_s=30.0,
                              voice="female", style=TtsStyleParams())
        path = tmp_path / "manifest.jsonl"
        write_manifest([entry], path)
        assert read_manifest(path)[0].text == entry.text


class TestTrainingConfig:
    def test_asr_defaults(self):
        cfg = asr_defaults()
        assert cfg.learning_rate == 1e-5
        assert cfg.batch_size_per_device == 1
        assert cfg.warmup_steps == 500
        assert cfg.max_steps == 5000
        assert cfg.eval_every_steps == 1000
        assert cfg.max_generation_tokens == 225
        assert cfg.metric == "WER"

    def test_enhancer_defaults(self):
        cfg = enhancer_defaults()
        assert cfg.learning_rate == 4e-4
        assert cfg.batch_size_per_device == 8
        assert cfg.metric == "CER"

    def test_epoch_preset(self):
        cfg = asr_epoch_preset()
        assert cfg.batch_size_per_device == 16
        assert cfg.epochs == 10
        assert cfg.learning_rate == 1e-5

    def test_emit_and_parse_roundtrip(self, tmp_path):
        asr_path, enh_path = emit_training_configs(tmp_path)
        assert parse_training_config(asr_path) == asr_defaults()
        assert parse_training_config(enh_path) == enhancer_defaults()

    def test_emitted_keys_are_flat_key_value(self, tmp_path):
        asr_path, _ = emit_training_configs(tmp_path)
        for line in asr_path.read_text(encoding="utf-8").splitlines():
            assert "=" in line

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("model_role='asr'\nlearning_rate=1e-5\n"
                        "batch_size_per_device=1\nmetric='WER'\nrocket=1\n",
                        encoding="utf-8")
        with pytest.raises(SchemaError):
            parse_training_config(path)

    def test_style_params_validation(self):
        with pytest.raises(ValueError):
            TtsStyleParams(alpha=1.2)
        with pytest.raises(ValueError):
            TtsStyleParams(diffusion_steps=0)
