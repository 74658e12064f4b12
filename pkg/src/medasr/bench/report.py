"""Rendering and persistence of evaluation reports.

Three render formats (plain table, csv, markdown) plus a JSON file that
mirrors the report losslessly for machine consumption.  Loading a JSON
report recomputes the aggregates from the stored records and refuses files
whose stored aggregates disagree.
"""

import csv
import io
import json
from dataclasses import asdict
from pathlib import Path

from medasr.bench.harness import (
    EvalRecord,
    EvalReport,
    FailureRecord,
    RunOptions,
    aggregates_from_records,
)
from medasr.errors import SchemaError
from medasr.metrics.aggregate import CorpusAggregate
from medasr.metrics.align import AlignmentCounts
from medasr.metrics.wer import WORD, MetricResult

FORMATS = ("table_text", "csv", "markdown")


def render_report(report: EvalReport, fmt: str = "table_text") -> bytes:
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["entry_id", "wer", "substitutions", "deletions",
                         "insertions", "reference_length", "reference",
                         "hypothesis"])
        for r in report.records:
            writer.writerow([r.entry_id, f"{r.wer.value:.6f}",
                             r.counts.substitutions, r.counts.deletions,
                             r.counts.insertions, r.counts.reference_length,
                             " ".join(r.reference), " ".join(r.hypothesis)])
        return out.getvalue().encode("utf-8")

    agg_rows = [report.aggregate_mean, report.aggregate_pooled]
    if fmt == "markdown":
        lines = [f"# Evaluation report: {report.benchmark}", ""]
        lines.append(f"- records: {len(report.records)}, "
                     f"failures: {len(report.failures)}")
        lines.append(f"- noise mode: {report.options.noise_mode}, enhancer: "
                     f"{'on' if report.options.enhancer_enabled else 'off'}")
        lines += ["", "| aggregate | mean | min | max | median | samples |",
                  "|---|---|---|---|---|---|"]
        for agg in agg_rows:
            lines.append(f"| {agg.mode} | {agg.mean:.6f} | {agg.min:.6f} | "
                         f"{agg.max:.6f} | {agg.median:.6f} | {agg.sample_count} |")
        lines += ["", "| entry | wer | S | D | I | N |", "|---|---|---|---|---|---|"]
        for r in report.records:
            lines.append(f"| {r.entry_id} | {r.wer.value:.6f} | "
                         f"{r.counts.substitutions} | {r.counts.deletions} | "
                         f"{r.counts.insertions} | {r.counts.reference_length} |")
        return ("\n".join(lines) + "\n").encode("utf-8")

    if fmt == "table_text":
        lines = [f"benchmark: {report.benchmark}",
                 f"records: {len(report.records)}  failures: {len(report.failures)}",
                 f"noise mode: {report.options.noise_mode}  enhancer: "
                 f"{'on' if report.options.enhancer_enabled else 'off'}",
                 ""]
        header = f"{'aggregate':<16} {'mean':>9} {'min':>9} {'max':>9} {'median':>9}"
        lines.append(header)
        for agg in agg_rows:
            lines.append(f"{agg.mode:<16} {agg.mean:>9.4f} {agg.min:>9.4f} "
                         f"{agg.max:>9.4f} {agg.median:>9.4f}")
        lines.append("")
        lines.append(f"{'entry':<38} {'wer':>8} {'S':>4} {'D':>4} {'I':>4} {'N':>4}")
        for r in report.records:
            lines.append(f"{r.entry_id:<38} {r.wer.value:>8.4f} "
                         f"{r.counts.substitutions:>4} {r.counts.deletions:>4} "
                         f"{r.counts.insertions:>4} {r.counts.reference_length:>4}")
        return ("\n".join(lines) + "\n").encode("utf-8")

    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def _record_to_dict(r: EvalRecord) -> dict:
    return {
        "id": r.entry_id,
        "reference": list(r.reference),
        "hypothesis_raw": list(r.hypothesis_raw),
        "hypothesis": list(r.hypothesis),
        "substitutions": r.counts.substitutions,
        "deletions": r.counts.deletions,
        "insertions": r.counts.insertions,
        "reference_length": r.counts.reference_length,
        "wer": r.wer.value,
    }


def report_to_dict(report: EvalReport) -> dict:
    return {
        "benchmark": report.benchmark,
        "timestamp": report.timestamp,
        "options": asdict(report.options),
        "aggregates": {
            report.aggregate_mean.mode: asdict(report.aggregate_mean),
            report.aggregate_pooled.mode: asdict(report.aggregate_pooled),
        },
        "records": [_record_to_dict(r) for r in report.records],
        "failures": [{"id": f.entry_id, "error": f.error} for f in report.failures],
    }


def save_report(report: EvalReport, path) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(
        json.dumps(report_to_dict(report), ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8")


def _record_from_dict(obj: dict, where: str) -> EvalRecord:
    try:
        counts = AlignmentCounts(int(obj["substitutions"]), int(obj["deletions"]),
                                 int(obj["insertions"]), int(obj["reference_length"]))
        return EvalRecord(
            entry_id=str(obj["id"]),
            reference=tuple(obj["reference"]),
            hypothesis_raw=tuple(obj["hypothesis_raw"]),
            hypothesis=tuple(obj["hypothesis"]),
            counts=counts,
            wer=MetricResult(float(obj["wer"]), WORD),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"{where}: bad eval record: {exc}") from exc


def load_report(path) -> EvalReport:
    """Load a JSON report, verifying the aggregates against the records."""
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    for key in ("benchmark", "options", "aggregates", "records"):
        if key not in obj:
            raise SchemaError(f"{path}: missing field {key!r}")
    records = tuple(_record_from_dict(r, where=str(path)) for r in obj["records"])
    failures = tuple(FailureRecord(str(f["id"]), str(f["error"]))
                     for f in obj.get("failures", []))
    try:
        options = RunOptions(**obj["options"])
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{path}: bad options: {exc}") from exc
    if not records:
        raise SchemaError(f"{path}: report contains no records")
    agg_mean, agg_pooled = aggregates_from_records(records)
    for agg in (agg_mean, agg_pooled):
        stored = obj["aggregates"].get(agg.mode)
        if stored is None or CorpusAggregate(**stored) != agg:
            raise SchemaError(
                f"{path}: stored {agg.mode} aggregate does not match its records")
    return EvalReport(
        benchmark=str(obj["benchmark"]),
        records=records,
        failures=failures,
        aggregate_mean=agg_mean,
        aggregate_pooled=agg_pooled,
        options=options,
        timestamp=str(obj.get("timestamp", "")),
    )
