"""Benchmark evaluation harness, report rendering, and run comparison."""

from medasr.bench.compare import ReportDelta, compare_reports
from medasr.bench.harness import (
    KNOWN_BENCHMARKS,
    BenchmarkDataset,
    EvalRecord,
    EvalReport,
    FailureRecord,
    RunOptions,
    aggregates_from_records,
    load_benchmark,
    run_benchmark,
)
from medasr.bench.report import (
    FORMATS,
    load_report,
    render_report,
    report_to_dict,
    save_report,
)

__all__ = [
    "BenchmarkDataset",
    "EvalRecord",
    "EvalReport",
    "FORMATS",
    "FailureRecord",
    "KNOWN_BENCHMARKS",
    "ReportDelta",
    "RunOptions",
    "aggregates_from_records",
    "compare_reports",
    "load_benchmark",
    "load_report",
    "render_report",
    "report_to_dict",
    "run_benchmark",
    "save_report",
]
