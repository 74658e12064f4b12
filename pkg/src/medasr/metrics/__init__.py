"""Text normalization and edit-distance-based error-rate scoring."""

from medasr.metrics.aggregate import (
    MEAN_OF_SAMPLES,
    MODES,
    POOLED,
    CorpusAggregate,
    corpus_aggregate,
)
from medasr.metrics.align import (
    AlignmentCounts,
    align_counts,
    available_kernels,
    default_kernel,
    levenshtein,
)
from medasr.metrics.normalize import NormalizedText, normalize
from medasr.metrics.wer import CHARACTER, WORD, MetricResult, compute_cer, compute_wer

__all__ = [
    "AlignmentCounts",
    "CHARACTER",
    "CorpusAggregate",
    "MEAN_OF_SAMPLES",
    "MODES",
    "MetricResult",
    "NormalizedText",
    "POOLED",
    "WORD",
    "align_counts",
    "available_kernels",
    "compute_cer",
    "compute_wer",
    "corpus_aggregate",
    "default_kernel",
    "levenshtein",
    "normalize",
]
