"""Benchmark evaluation: load -> noise-reduce -> transcribe -> enhance -> score.

Each manifest entry is scored independently: optional audio preprocessing,
transcription through the configured backend, optional semantic enhancement,
normalization of both sides, then a word-error alignment.  Per-entry backend
failures become failure records and never contribute to the aggregates.
Records are sorted by entry id before aggregation, so results do not depend
on worker scheduling.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from medasr.audio.denoise import MODES as NOISE_MODES
from medasr.audio.denoise import PASSTHROUGH, noise_reduce
from medasr.audio.vad import energy_vad
from medasr.audio.wavio import read_wav
from medasr.corpus.manifest import ManifestEntry, read_manifest
from medasr.errors import (
    BackendError,
    BackendTimeout,
    EmptyCorpus,
    EmptyReference,
    MalformedAudio,
    SchemaError,
)
from medasr.metrics.aggregate import (
    MEAN_OF_SAMPLES,
    POOLED,
    CorpusAggregate,
    corpus_aggregate,
)
from medasr.metrics.align import AlignmentCounts
from medasr.metrics.normalize import normalize
from medasr.metrics.wer import MetricResult, compute_wer

KNOWN_BENCHMARKS = ("librispeech_test_clean", "europarl_asr_en_guest",
                    "tedlium", "fleurs_en", "custom")


@dataclass(frozen=True)
class BenchmarkDataset:
    name: str
    entries: tuple[ManifestEntry, ...]
    audio_root: str | None = None

    def __post_init__(self):
        if not self.entries:
            raise EmptyCorpus(f"benchmark {self.name!r} has no entries")
        object.__setattr__(self, "entries", tuple(self.entries))


def load_benchmark(name: str, manifest_path) -> BenchmarkDataset:
    """Dataset from a toolkit manifest; audio paths resolve next to it."""
    manifest_path = Path(manifest_path)
    return BenchmarkDataset(name=name,
                            entries=tuple(read_manifest(manifest_path)),
                            audio_root=str(manifest_path.parent))


@dataclass(frozen=True)
class RunOptions:
    noise_mode: str = PASSTHROUGH
    enhancer_enabled: bool = False
    text_only: bool = False
    vad_strip: bool = False    # strip non-speech before transcription
    jobs: int = 1

    def __post_init__(self):
        if self.noise_mode not in NOISE_MODES:
            raise ValueError(f"noise_mode must be one of {NOISE_MODES}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class EvalRecord:
    entry_id: str
    reference: tuple[str, ...]
    hypothesis_raw: tuple[str, ...]
    hypothesis: tuple[str, ...]
    counts: AlignmentCounts
    wer: MetricResult


@dataclass(frozen=True)
class FailureRecord:
    entry_id: str
    error: str


@dataclass(frozen=True)
class EvalReport:
    benchmark: str
    records: tuple[EvalRecord, ...]
    failures: tuple[FailureRecord, ...]
    aggregate_mean: CorpusAggregate
    aggregate_pooled: CorpusAggregate
    options: RunOptions
    timestamp: str


def _utc_now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def aggregates_from_records(records) -> tuple[CorpusAggregate, CorpusAggregate]:
    wers = [r.wer for r in records]
    counts = [r.counts for r in records]
    return (corpus_aggregate(wers, counts, MEAN_OF_SAMPLES),
            corpus_aggregate(wers, counts, POOLED))


def run_benchmark(dataset: BenchmarkDataset, transcriber, enhancer=None,
                  options: RunOptions = RunOptions(),
                  timestamp: str | None = None) -> EvalReport:
    """Evaluate every entry and aggregate in both averaging modes."""
    if options.enhancer_enabled and enhancer is None:
        raise ValueError("enhancer_enabled is set but no enhancer was given")

    def one(entry: ManifestEntry):
        try:
            clip = None
            if not options.text_only:
                if dataset.audio_root is None:
                    raise MalformedAudio(
                        f"entry {entry.id}: no audio root to resolve "
                        f"{entry.audio_path!r}; use text_only for manifest-only runs")
                clip = read_wav(Path(dataset.audio_root) / entry.audio_path)
                clip = noise_reduce(clip, options.noise_mode)
                if options.vad_strip:
                    _, clip = energy_vad(clip)
            hyp_raw = transcriber.transcribe(entry, clip)
            hyp_final = enhancer.enhance(hyp_raw) if options.enhancer_enabled else hyp_raw
            reference = normalize(entry.text)
            counts, wer = compute_wer(reference, normalize(hyp_final))
            return EvalRecord(
                entry_id=entry.id,
                reference=reference.tokens,
                hypothesis_raw=normalize(hyp_raw).tokens,
                hypothesis=normalize(hyp_final).tokens,
                counts=counts,
                wer=wer,
            )
        except (BackendError, BackendTimeout, SchemaError, EmptyReference,
                MalformedAudio, OSError) as exc:
            return FailureRecord(entry_id=entry.id,
                                 error=f"{type(exc).__name__}: {exc}")

    if options.jobs > 1:
        with ThreadPoolExecutor(max_workers=options.jobs) as pool:
            results = list(pool.map(one, dataset.entries))
    else:
        results = [one(entry) for entry in dataset.entries]

    records = sorted((r for r in results if isinstance(r, EvalRecord)),
                     key=lambda r: r.entry_id)
    failures = sorted((r for r in results if isinstance(r, FailureRecord)),
                      key=lambda r: r.entry_id)
    if not records:
        raise EmptyCorpus(
            f"benchmark {dataset.name!r}: all {len(failures)} entries failed")
    agg_mean, agg_pooled = aggregates_from_records(records)
    return EvalReport(
        benchmark=dataset.name,
        records=tuple(records),
        failures=tuple(failures),
        aggregate_mean=agg_mean,
        aggregate_pooled=agg_pooled,
        options=options,
        timestamp=timestamp if timestamp is not None else _utc_now(),
    )
