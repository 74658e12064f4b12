"""Synthetic corpus pipeline: ingest, generate, synthesize, split, persist."""

from medasr.corpus.audiogen import STANDARD_DURATION_S, entry_id, synthesize_audio
from medasr.corpus.manifest import (
    VOICES,
    ManifestEntry,
    TtsStyleParams,
    read_manifest,
    write_manifest,
)
from medasr.corpus.sources import (
    SOURCES,
    IngestResult,
    SourceRecord,
    ingest_sources,
    read_source_records,
    write_source_records,
)
from medasr.corpus.split import SplitConfig, split_dataset
from medasr.corpus.textgen import (
    SyntheticSentence,
    generate_text,
    read_sentences,
    sentence_id,
    write_sentences,
)
from medasr.corpus.trainconfig import (
    TrainingConfig,
    asr_defaults,
    asr_epoch_preset,
    emit_training_config,
    emit_training_configs,
    enhancer_defaults,
    parse_training_config,
)

__all__ = [
    "IngestResult",
    "ManifestEntry",
    "SOURCES",
    "STANDARD_DURATION_S",
    "SourceRecord",
    "SplitConfig",
    "SyntheticSentence",
    "TrainingConfig",
    "TtsStyleParams",
    "VOICES",
    "asr_defaults",
    "asr_epoch_preset",
    "emit_training_config",
    "emit_training_configs",
    "enhancer_defaults",
    "entry_id",
    "generate_text",
    "ingest_sources",
    "parse_training_config",
    "read_manifest",
    "read_sentences",
    "read_source_records",
    "sentence_id",
    "split_dataset",
    "synthesize_audio",
    "write_manifest",
    "write_sentences",
    "write_source_records",
]
