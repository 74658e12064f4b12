"""Command-line entry point.

Every subcommand is a thin adapter over the library; anything it does can be
reproduced with direct calls.  All randomness flows from explicit ``--seed``
flags that default to 42, so a flag-free run is fully reproducible.  Exit
codes: 0 success, 1 runtime error (message on stderr), 2 usage error.
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from medasr import backends, bench, corpus
from medasr.audio.quality import analyze_quality
from medasr.audio.wavio import read_wav
from medasr.backends.endpoints import endpoint_from_env
from medasr.errors import MedasrError

log = logging.getLogger("medasr")

_DEFAULT_SEED = 42


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _parse_columns(spec: str) -> dict[str, str]:
    mapping = {}
    for part in spec.split(","):
        if "=" not in part:
            raise argparse.ArgumentTypeError(
                f"column mapping entries look like field=Header, got {part!r}")
        field, column = part.split("=", 1)
        mapping[field.strip()] = column.strip()
    return mapping


def _delimiter(name: str) -> str:
    return {"comma": ",", "tab": "\t"}[name]


def _remote_endpoint(role: str, timeout_ms: int, retries: int):
    endpoint = endpoint_from_env(role, timeout_ms=timeout_ms, max_retries=retries)
    if endpoint is None:
        raise MedasrError(
            f"remote backend selected for role {role!r} but "
            f"{backends.ENDPOINT_ENV_PREFIX}{role.upper()} is not set")
    return endpoint


def _make_transcriber(args, entries):
    if args.transcriber == "mock-identity":
        return backends.IdentityTranscriber()
    if args.transcriber == "mock-noisy":
        cfg = backends.NoisyChannelConfig(sub_rate=args.sub_rate,
                                          del_rate=args.del_rate,
                                          ins_rate=args.ins_rate,
                                          seed=args.seed)
        return backends.NoisyChannelTranscriber.from_entries(entries, cfg)
    return backends.RemoteTranscriber(
        _remote_endpoint("transcribe", args.timeout_ms, args.retries))


def _make_enhancer(args):
    if args.enhancer == "off":
        return None
    if args.enhancer == "lexicon":
        if not args.lexicon:
            raise MedasrError("--enhancer lexicon requires --lexicon FILE")
        return backends.LexiconEnhancer(
            backends.Lexicon.from_file(args.lexicon,
                                       max_edit_distance=args.max_edit_distance))
    return backends.RemoteEnhancer(
        _remote_endpoint("enhance", args.timeout_ms, args.retries))


def _cmd_ingest(args) -> int:
    result = corpus.ingest_sources(args.input, args.source,
                                   _parse_columns(args.columns),
                                   delimiter=_delimiter(args.delimiter))
    corpus.write_source_records(result.records, args.output)
    print(f"ingested {len(result.records)} records "
          f"({result.duplicates} duplicates dropped, "
          f"{result.skipped} empty-term rows skipped) -> {args.output}")
    return 0


def _cmd_gen_text(args) -> int:
    records = corpus.read_source_records(args.records)
    if args.backend == "mock":
        backend = backends.MockTextGenerator()
    else:
        backend = backends.RemoteTextGenerator(
            _remote_endpoint("generate", args.timeout_ms, args.retries))
    sentences = corpus.generate_text(records, backend, seed=args.seed,
                                     jobs=args.jobs)
    corpus.write_sentences(sentences, args.output)
    print(f"generated {len(sentences)} sentences -> {args.output}")
    return 0


def _cmd_gen_audio(args) -> int:
    sentences = corpus.read_sentences(args.sentences)
    if args.backend == "mock":
        backend = backends.MockTtsBackend()
    else:
        backend = backends.RemoteTtsBackend(
            _remote_endpoint("tts", args.timeout_ms, args.retries))
    style = corpus.TtsStyleParams(alpha=args.alpha, beta=args.beta,
                                  diffusion_steps=args.diffusion_steps,
                                  embedding_scale=args.embedding_scale)
    entries = corpus.synthesize_audio(sentences, backend, style,
                                      args.voices.split(","), args.out_dir,
                                      resume=args.resume, jobs=args.jobs)
    manifest_path = Path(args.out_dir) / args.manifest_name
    corpus.write_manifest(entries, manifest_path)
    print(f"synthesized {len(entries)} clips, manifest -> {manifest_path}")
    return 0


def _cmd_split(args) -> int:
    entries = corpus.read_manifest(args.manifest)
    train, test = corpus.split_dataset(
        entries, corpus.SplitConfig(ratio=args.ratio, seed=args.seed))
    corpus.write_manifest(train, args.train_out)
    corpus.write_manifest(test, args.test_out)
    print(f"split {len(entries)} entries -> {len(train)} train / {len(test)} test")
    return 0


def _cmd_quality(args) -> int:
    report = analyze_quality(args.audio, frame_ms=args.frame_ms,
                             threshold_db_rel=args.threshold_db)
    if args.json:
        print(json.dumps({
            "snr_db": report.snr_db, "sample_rate": report.sample_rate,
            "bitrate_kbps": report.bitrate_kbps, "duration_s": report.duration_s,
            "bit_depth": report.bit_depth, "channels": report.channels,
        }))
    else:
        print(f"sample_rate: {report.sample_rate} Hz")
        print(f"bit_depth: {report.bit_depth} bit, channels: {report.channels}")
        print(f"bitrate: {report.bitrate_kbps:.2f} kbps")
        print(f"duration: {report.duration_s:.3f} s")
        print(f"snr: {report.snr_db:.2f} dB")
    return 0


def _cmd_transcribe(args) -> int:
    dataset = bench.load_benchmark("custom", args.manifest)
    transcriber = _make_transcriber(args, dataset.entries)
    with open(args.output, "w", encoding="utf-8") as fh:
        for entry in dataset.entries:
            clip = None
            if not args.text_only:
                clip = read_wav(Path(dataset.audio_root) / entry.audio_path)
            hyp = transcriber.transcribe(entry, clip)
            fh.write(json.dumps({"id": entry.id, "hypothesis": hyp},
                                ensure_ascii=False, separators=(",", ":")) + "\n")
    print(f"transcribed {len(dataset.entries)} entries -> {args.output}")
    return 0


def _cmd_enhance(args) -> int:
    enhancer = backends.LexiconEnhancer(
        backends.Lexicon.from_file(args.lexicon,
                                   max_edit_distance=args.max_edit_distance))
    count = 0
    with open(args.input, encoding="utf-8") as src, \
            open(args.output, "w", encoding="utf-8") as dst:
        for line in src:
            if not line.strip():
                continue
            obj = json.loads(line)
            obj["hypothesis"] = enhancer.enhance(obj["hypothesis"])
            dst.write(json.dumps(obj, ensure_ascii=False,
                                 separators=(",", ":")) + "\n")
            count += 1
    print(f"enhanced {count} hypotheses -> {args.output}")
    return 0


def _cmd_eval(args) -> int:
    dataset = bench.load_benchmark(args.name, args.manifest)
    transcriber = _make_transcriber(args, dataset.entries)
    enhancer = _make_enhancer(args)
    options = bench.RunOptions(noise_mode=args.noise_mode,
                               enhancer_enabled=enhancer is not None,
                               text_only=args.text_only,
                               vad_strip=args.vad_strip,
                               jobs=args.jobs)
    report = bench.run_benchmark(dataset, transcriber, enhancer, options)
    bench.save_report(report, args.report)
    agg = report.aggregate_mean
    print(f"{report.benchmark}: {len(report.records)} records, "
          f"{len(report.failures)} failures")
    print(f"mean_of_samples WER {agg.mean:.4f} "
          f"(min {agg.min:.4f} / max {agg.max:.4f} / median {agg.median:.4f})")
    print(f"pooled WER {report.aggregate_pooled.mean:.4f}")
    print(f"report -> {args.report}")
    return 0


def _cmd_report(args) -> int:
    report = bench.load_report(args.input)
    rendered = bench.render_report(report, args.format)
    if args.output:
        Path(args.output).write_bytes(rendered)
        print(f"rendered {args.format} -> {args.output}")
    else:
        sys.stdout.write(rendered.decode("utf-8"))
    return 0


def _cmd_emit_train_config(args) -> int:
    asr_cfg = (corpus.asr_epoch_preset() if args.asr_schedule == "epochs"
               else corpus.asr_defaults())
    asr_path, enh_path = corpus.emit_training_configs(args.out_dir, asr=asr_cfg)
    print(f"wrote {asr_path} and {enh_path}")
    return 0


def _add_backend_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--timeout-ms", type=int, default=10000,
                   help="remote call timeout in milliseconds")
    p.add_argument("--retries", type=int, default=2,
                   help="extra attempts after a remote timeout")


def _add_noisy_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sub-rate", type=float, default=0.0)
    p.add_argument("--del-rate", type=float, default=0.0)
    p.add_argument("--ins-rate", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="medasr",
        description="Synthetic clinical speech corpus pipeline and "
                    "WER/CER benchmark harness")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ingest", help="read delimited vocabulary exports into records")
    p.add_argument("--input", nargs="+", required=True, help="delimited export file(s)")
    p.add_argument("--source", required=True, choices=corpus.SOURCES)
    p.add_argument("--columns", required=True,
                   help="field=Header mapping, e.g. term=Term,code=Code")
    p.add_argument("--delimiter", choices=("comma", "tab"), default="comma")
    p.add_argument("--output", required=True, help="records JSONL to write")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("gen-text", help="generate one synthetic sentence per record")
    p.add_argument("--records", required=True, help="records JSONL from ingest")
    p.add_argument("--backend", choices=("mock", "remote"), default="mock")
    p.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--output", required=True, help="sentences JSONL to write")
    _add_backend_flags(p)
    p.set_defaults(func=_cmd_gen_text)

    p = sub.add_parser("gen-audio", help="render sentences to a standardized WAV corpus")
    p.add_argument("--sentences", required=True, help="sentences JSONL from gen-text")
    p.add_argument("--backend", choices=("mock", "remote"), default="mock")
    p.add_argument("--voices", default="male,female",
                   help="comma-separated subset of male,female")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--manifest-name", default="manifest.jsonl")
    p.add_argument("--alpha", type=float, default=0.3)
    p.add_argument("--beta", type=float, default=0.7)
    p.add_argument("--diffusion-steps", type=int, default=6)
    p.add_argument("--embedding-scale", type=float, default=1.0)
    p.add_argument("--resume", action="store_true",
                   help="skip clips whose files already exist")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    _add_backend_flags(p)
    p.set_defaults(func=_cmd_gen_audio)

    p = sub.add_parser("split", help="deterministic train/test partition of a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--ratio", type=float, default=0.8)
    p.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    p.add_argument("--train-out", required=True)
    p.add_argument("--test-out", required=True)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("quality", help="report sample rate, bitrate, duration, SNR")
    p.add_argument("--audio", required=True, help="PCM WAV file")
    p.add_argument("--frame-ms", type=float, default=30.0)
    p.add_argument("--threshold-db", type=float, default=6.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_quality)

    p = sub.add_parser("transcribe", help="produce hypotheses for a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument("--transcriber", default="mock-identity",
                   choices=("mock-identity", "mock-noisy", "remote"))
    p.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    p.add_argument("--text-only", action="store_true",
                   help="do not load audio files (channel simulation)")
    p.add_argument("--output", required=True, help="hypotheses JSONL to write")
    _add_noisy_flags(p)
    _add_backend_flags(p)
    p.set_defaults(func=_cmd_transcribe)

    p = sub.add_parser("enhance", help="lexicon-correct a hypotheses file")
    p.add_argument("--input", required=True, help="hypotheses JSONL")
    p.add_argument("--lexicon", required=True, help="one term per line")
    p.add_argument("--max-edit-distance", type=int, default=2)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_enhance)

    p = sub.add_parser("eval", help="run the benchmark evaluation pipeline")
    p.add_argument("--manifest", required=True)
    p.add_argument("--name", default="custom",
                   help=f"benchmark name (known: {', '.join(bench.KNOWN_BENCHMARKS)})")
    p.add_argument("--transcriber", default="mock-identity",
                   choices=("mock-identity", "mock-noisy", "remote"))
    p.add_argument("--enhancer", default="off", choices=("off", "lexicon", "remote"))
    p.add_argument("--lexicon", help="lexicon file for --enhancer lexicon")
    p.add_argument("--max-edit-distance", type=int, default=2)
    p.add_argument("--noise-mode", default="passthrough",
                   choices=("passthrough", "spectral_gate"))
    p.add_argument("--vad-strip", action="store_true",
                   help="strip non-speech audio before transcription")
    p.add_argument("--text-only", action="store_true")
    p.add_argument("--seed", type=int, default=_DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--report", default="report.json",
                   help="JSON report path to write (default: report.json)")
    _add_noisy_flags(p)
    _add_backend_flags(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("report", help="render a saved JSON report")
    p.add_argument("--input", required=True)
    p.add_argument("--format", default="table_text", choices=bench.FORMATS)
    p.add_argument("--output", help="output file (stdout when omitted)")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("emit-train-config",
                       help="write ASR and enhancer fine-tuning configs")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--asr-schedule", choices=("steps", "epochs"), default="steps")
    p.set_defaults(func=_cmd_emit_train_config)

    return parser


def dispatch(argv=None) -> int:
    """Parse and run; returns the process exit code instead of raising."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MedasrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(dispatch())


main = console_main

if __name__ == "__main__":
    console_main()
