"""Ablation support: per-entry and aggregate WER deltas between two runs.

Sign convention: delta = b - a, so negative means run b improved over run a.
"""

from dataclasses import dataclass

from medasr.bench.harness import EvalReport
from medasr.errors import MismatchedCorpora


@dataclass(frozen=True)
class ReportDelta:
    benchmark: str
    per_entry: tuple[tuple[str, float], ...]
    mean_delta: float
    pooled_delta: float


def compare_reports(a: EvalReport, b: EvalReport) -> ReportDelta:
    if a.benchmark != b.benchmark:
        raise MismatchedCorpora(
            f"benchmarks differ: {a.benchmark!r} vs {b.benchmark!r}")
    a_by_id = {r.entry_id: r for r in a.records}
    b_by_id = {r.entry_id: r for r in b.records}
    if a_by_id.keys() != b_by_id.keys():
        only_a = sorted(a_by_id.keys() - b_by_id.keys())[:5]
        only_b = sorted(b_by_id.keys() - a_by_id.keys())[:5]
        raise MismatchedCorpora(
            f"entry id sets differ (only in a: {only_a}, only in b: {only_b})")
    per_entry = tuple(
        (entry_id, b_by_id[entry_id].wer.value - a_by_id[entry_id].wer.value)
        for entry_id in sorted(a_by_id))
    return ReportDelta(
        benchmark=a.benchmark,
        per_entry=per_entry,
        mean_delta=b.aggregate_mean.mean - a.aggregate_mean.mean,
        pooled_delta=b.aggregate_pooled.mean - a.aggregate_pooled.mean,
    )
