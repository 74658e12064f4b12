"""Corpus-level aggregation of per-sample error rates.

Two averaging conventions exist in the wild and they genuinely diverge, so
both are first-class:

* ``mean_of_samples`` - arithmetic mean of the per-utterance rates (the
  headline convention here);
* ``pooled`` - total errors over total reference length, i.e. each utterance
  weighted by its length.

Min/max/median are always order statistics of the per-sample rates; the mode
only changes how ``mean`` is computed.
"""

from dataclasses import dataclass

from medasr.errors import EmptyCorpus
from medasr.metrics.align import AlignmentCounts
from medasr.metrics.wer import MetricResult

MEAN_OF_SAMPLES = "mean_of_samples"
POOLED = "pooled"
MODES = (MEAN_OF_SAMPLES, POOLED)


@dataclass(frozen=True)
class CorpusAggregate:
    mean: float
    min: float
    max: float
    median: float
    sample_count: int
    mode: str


def _median(ordered: list[float]) -> float:
    n = len(ordered)
    mid = n // 2
    if n % 2:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2.0


def corpus_aggregate(samples, counts, mode: str = MEAN_OF_SAMPLES) -> CorpusAggregate:
    """Aggregate per-sample rates (MetricResult or float) with parallel counts."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    values = [s.value if isinstance(s, MetricResult) else float(s) for s in samples]
    counts = list(counts)
    if not values:
        raise EmptyCorpus("cannot aggregate zero samples")
    if len(counts) != len(values):
        raise ValueError(f"{len(values)} samples but {len(counts)} counts")
    for c in counts:
        if not isinstance(c, AlignmentCounts):
            raise TypeError(f"expected AlignmentCounts, got {type(c).__name__}")

    ordered = sorted(values)
    if mode == MEAN_OF_SAMPLES:
        mean = sum(values) / len(values)
    else:
        total_ref = sum(c.reference_length for c in counts)
        if total_ref == 0:
            raise EmptyCorpus("pooled aggregation over zero reference length")
        mean = sum(c.distance for c in counts) / total_ref
    return CorpusAggregate(
        mean=mean,
        min=ordered[0],
        max=ordered[-1],
        median=_median(ordered),
        sample_count=len(values),
        mode=mode,
    )
