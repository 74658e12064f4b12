"""Word and character error rates from minimal edit alignments.

Both rates are (substitutions + deletions + insertions) / reference length
and are kept as plain fractions everywhere (0.25, never "25"); rendering
layers may multiply by 100.  Rates can exceed 1.0 when insertions dominate.
"""

from dataclasses import dataclass

from medasr.errors import EmptyReference
from medasr.metrics.align import AlignmentCounts, align_counts
from medasr.metrics.normalize import NormalizedText, normalize

WORD = "word"
CHARACTER = "character"


@dataclass(frozen=True)
class MetricResult:
    """An error-rate value tagged with its granularity."""

    value: float
    granularity: str


def _tokens(value) -> tuple[str, ...]:
    if isinstance(value, NormalizedText):
        return value.tokens
    if isinstance(value, str):
        raise TypeError("pass NormalizedText or a token sequence; "
                        "use normalize() on raw strings first")
    return tuple(value)


def compute_wer(reference, hypothesis,
                kernel: str | None = None) -> tuple[AlignmentCounts, MetricResult]:
    """Word error rate between two normalized token sequences.

    Raises EmptyReference when the reference has no tokens (the rate is
    undefined; callers decide whether to skip or fail).
    """
    ref = _tokens(reference)
    hyp = _tokens(hypothesis)
    if not ref:
        raise EmptyReference("reference has no tokens; WER is undefined")
    counts = align_counts(ref, hyp, kernel=kernel)
    return counts, MetricResult(counts.distance / counts.reference_length, WORD)


def compute_cer(reference: str, hypothesis: str,
                kernel: str | None = None) -> tuple[AlignmentCounts, MetricResult]:
    """Character error rate between two raw texts.

    Both sides are normalized, rejoined with single spaces, and aligned as
    character sequences; the joining spaces count as characters.
    """
    ref_chars = list(normalize(reference).text)
    hyp_chars = list(normalize(hypothesis).text)
    if not ref_chars:
        raise EmptyReference("reference has no characters; CER is undefined")
    counts = align_counts(ref_chars, hyp_chars, kernel=kernel)
    return counts, MetricResult(counts.distance / counts.reference_length, CHARACTER)
