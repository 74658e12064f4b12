"""Audio quality analysis: header facts, PCM bitrate, and a VAD-based SNR."""

from dataclasses import dataclass

import numpy as np

from medasr.audio.clip import AudioClip
from medasr.audio.vad import VadSegments, energy_vad
from medasr.audio.wavio import read_wav, read_wav_header

_EPS = 1e-12


@dataclass(frozen=True)
class AudioQualityReport:
    snr_db: float
    sample_rate: int
    bitrate_kbps: float
    duration_s: float
    bit_depth: int
    channels: int


def snr_db(clip: AudioClip, segments: VadSegments) -> float:
    """10*log10(speech power / non-speech power) under the given partition.

    Powers are mean squares over the partitioned samples.  When either side
    of the partition is empty there is no contrast to measure and the
    estimate is 0.0 dB by convention (the degenerate case a fully-voiced or
    fully-silent clip produces).
    """
    flen = int(round(clip.sample_rate * segments.frame_ms / 1000.0))
    n = len(clip)
    mask = np.zeros(n, dtype=bool)
    for start, end in segments.segments:
        mask[start * flen:min(end * flen, n)] = True
    speech = clip.samples[mask]
    noise = clip.samples[~mask]
    if speech.size == 0 or noise.size == 0:
        return 0.0
    p_speech = float(np.mean(speech * speech))
    p_noise = float(np.mean(noise * noise))
    return 10.0 * float(np.log10((p_speech + _EPS) / (p_noise + _EPS)))


def analyze_quality(path, frame_ms: float = 30.0,
                    threshold_db_rel: float = 6.0) -> AudioQualityReport:
    """Read a PCM WAV file and report rate, bitrate, duration, and SNR."""
    sample_rate, bit_depth, channels, n_frames = read_wav_header(path)
    clip = read_wav(path)
    segments, _ = energy_vad(clip, frame_ms=frame_ms,
                             threshold_db_rel=threshold_db_rel)
    return AudioQualityReport(
        snr_db=snr_db(clip, segments),
        sample_rate=sample_rate,
        bitrate_kbps=sample_rate * bit_depth * channels / 1000.0,
        duration_s=n_frames / sample_rate,
        bit_depth=bit_depth,
        channels=channels,
    )
