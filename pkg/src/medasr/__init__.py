"""medasr: synthetic clinical speech corpus pipeline and ASR benchmark harness.

Subpackages:
    metrics  - text normalization, WER/CER scoring, corpus aggregation
    audio    - resampling, duration standardization, log-mel features, VAD,
               noise reduction, quality analysis, WAV and feature-grid I/O
    corpus   - source ingestion, text/audio generation, split, manifests,
               training-config emission
    backends - deterministic mocks, noisy-channel simulator, lexicon
               enhancer, HTTP wire protocol for real model services
    bench    - benchmark evaluation harness, reports, run comparison
"""

__version__ = "0.1.0"
