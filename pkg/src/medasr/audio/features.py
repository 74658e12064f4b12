"""Log-mel spectrogram front-end and the on-disk feature-grid format.

Fixed convention: 16 kHz input, 400-sample periodic Hann window, 160-sample
hop, 80 triangular mel filters spanning 0-8000 Hz (Slaney-style scale and
normalization), power clamped to 1e-10 before log10.  This matches the
published front-end of the encoder family these features feed, so dumped
grids are plug-compatible with an external model server.
"""

import math
import struct
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from medasr.audio.clip import AudioClip
from medasr.errors import MalformedAudio, WrongSampleRate

SAMPLE_RATE = 16000
N_FFT = 400
HOP = 160
N_MELS = 80
FREQ_MAX = 8000.0
POWER_FLOOR = 1e-10
LOG_FLOOR = math.log10(POWER_FLOOR)

_MAGIC = b"MELG"
_ENCODINGS = {1: "<f4", 2: "<f8"}
_ENCODING_CODES = {"f4": 1, "f8": 2}


@dataclass(frozen=True)
class MelSpectrogram:
    """frames x bins grid of log10 mel-band powers."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError(f"values must be 2-D, got shape {arr.shape}")
        object.__setattr__(self, "values", arr)

    @property
    def frames(self) -> int:
        return self.values.shape[0]

    @property
    def bins(self) -> int:
        return self.values.shape[1]


def _hz_to_mel(freq):
    # Slaney scale: linear below 1 kHz, logarithmic above.
    freq = np.asarray(freq, dtype=np.float64)
    f_sp = 200.0 / 3
    min_log_hz = 1000.0
    logstep = math.log(6.4) / 27.0
    mel = freq / f_sp
    above = freq >= min_log_hz
    mel = np.where(above, min_log_hz / f_sp + np.log(np.maximum(freq, min_log_hz) / min_log_hz) / logstep, mel)
    return mel


def _mel_to_hz(mel):
    mel = np.asarray(mel, dtype=np.float64)
    f_sp = 200.0 / 3
    min_log_hz = 1000.0
    min_log_mel = min_log_hz / f_sp
    logstep = math.log(6.4) / 27.0
    hz = mel * f_sp
    above = mel >= min_log_mel
    return np.where(above, min_log_hz * np.exp(logstep * (mel - min_log_mel)), hz)


@lru_cache(maxsize=4)
def mel_filterbank(n_mels: int = N_MELS, n_fft: int = N_FFT,
                   sample_rate: int = SAMPLE_RATE,
                   freq_max: float = FREQ_MAX) -> np.ndarray:
    """(n_mels, n_fft//2 + 1) triangular filter matrix, Slaney-normalized."""
    fft_freqs = np.linspace(0.0, sample_rate / 2.0, n_fft // 2 + 1)
    mel_pts = np.linspace(_hz_to_mel(0.0), _hz_to_mel(freq_max), n_mels + 2)
    hz_pts = _mel_to_hz(mel_pts)
    weights = np.zeros((n_mels, fft_freqs.size))
    for i in range(n_mels):
        lower = (fft_freqs - hz_pts[i]) / (hz_pts[i + 1] - hz_pts[i])
        upper = (hz_pts[i + 2] - fft_freqs) / (hz_pts[i + 2] - hz_pts[i + 1])
        weights[i] = np.maximum(0.0, np.minimum(lower, upper))
        weights[i] *= 2.0 / (hz_pts[i + 2] - hz_pts[i])
    return weights


def log_mel(clip: AudioClip) -> MelSpectrogram:
    """Log-mel features for a 16 kHz clip; frame count is len(samples)//hop."""
    if clip.sample_rate != SAMPLE_RATE:
        raise WrongSampleRate(
            f"log-mel front-end requires {SAMPLE_RATE} Hz input, "
            f"got {clip.sample_rate} Hz; resample first")
    x = clip.samples
    n_frames = x.size // HOP
    if n_frames == 0:
        return MelSpectrogram(np.zeros((0, N_MELS)))

    pad = N_FFT // 2
    mode = "reflect" if x.size > pad else "constant"
    padded = np.pad(x, pad, mode=mode)
    window = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(N_FFT) / N_FFT))
    idx = np.arange(n_frames)[:, None] * HOP + np.arange(N_FFT)[None, :]
    frames = padded[idx] * window
    spectrum = np.fft.rfft(frames, axis=1)
    power = spectrum.real ** 2 + spectrum.imag ** 2
    mel_power = power @ mel_filterbank().T
    return MelSpectrogram(np.log10(np.maximum(mel_power, POWER_FLOOR)))


def write_features(path, mel: MelSpectrogram, encoding: str = "f8") -> None:
    """Dump a feature grid: magic, frames, bins, encoding code, then values.

    Header fields are little-endian uint32; values are row-major little-endian
    float32 (``f4``) or float64 (``f8``).
    """
    if encoding not in _ENCODING_CODES:
        raise ValueError(f"encoding must be one of {sorted(_ENCODING_CODES)}")
    code = _ENCODING_CODES[encoding]
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<III", mel.frames, mel.bins, code))
        fh.write(np.ascontiguousarray(mel.values, dtype=_ENCODINGS[code]).tobytes())


def read_features(path) -> MelSpectrogram:
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != _MAGIC or len(blob) < 16:
        raise MalformedAudio("not a feature-grid file (bad magic)")
    frames, bins, code = struct.unpack("<III", blob[4:16])
    if code not in _ENCODINGS:
        raise MalformedAudio(f"unknown feature encoding code {code}")
    dtype = np.dtype(_ENCODINGS[code])
    expected = 16 + frames * bins * dtype.itemsize
    if len(blob) != expected:
        raise MalformedAudio(
            f"feature payload is {len(blob)} bytes, expected {expected}")
    values = np.frombuffer(blob, dtype=dtype, offset=16).reshape(frames, bins)
    return MelSpectrogram(values.astype(np.float64))
