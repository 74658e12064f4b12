"""Sample-rate conversion with a Kaiser-windowed sinc interpolator.

Each output sample is a 16-tap windowed-sinc dot product centred on its exact
fractional position in the input, with the sinc cutoff lowered when
downsampling so aliases stay well below the passband (>60 dB for mid-band
tones, which linear interpolation cannot reach).  Tap rows are normalized to
unit DC gain, so constant signals pass through unchanged.
"""

import numpy as np

from medasr.audio.clip import AudioClip
from medasr.errors import InvalidRate

_CHUNK = 1 << 16


def _kaiser(delta: np.ndarray, half_width: float, beta: float) -> np.ndarray:
    arg = delta / half_width
    inside = np.abs(arg) < 1.0
    out = np.zeros_like(delta)
    out[inside] = np.i0(beta * np.sqrt(1.0 - arg[inside] ** 2)) / np.i0(beta)
    return out


def resample(clip: AudioClip, target_hz: int, *,
             taps: int = 16, beta: float = 8.6) -> AudioClip:
    """Return the clip resampled to ``target_hz``.

    Output length is round(len * target / source), preserving total duration
    to within one sample period.  Deterministic; a pure function of the
    input samples and rates.
    """
    if int(target_hz) <= 0:
        raise InvalidRate(f"target rate must be positive, got {target_hz}")
    if not len(clip):
        raise ValueError("cannot resample an empty clip")
    target_hz = int(target_hz)
    if target_hz == clip.sample_rate:
        return AudioClip(clip.samples.copy(), clip.sample_rate)

    x = clip.samples
    n = x.size
    step = clip.sample_rate / target_hz          # input samples per output sample
    out_len = int(round(n * target_hz / clip.sample_rate))
    cutoff = min(1.0, target_hz / clip.sample_rate)
    half = taps // 2
    offsets = np.arange(-half + 1, half + 1)

    y = np.empty(out_len, dtype=np.float64)
    for start in range(0, out_len, _CHUNK):
        stop = min(start + _CHUNK, out_len)
        t = np.arange(start, stop, dtype=np.float64) * step
        k = np.floor(t).astype(np.int64)
        idx = k[:, None] + offsets[None, :]
        delta = t[:, None] - idx
        coeff = cutoff * np.sinc(cutoff * delta) * _kaiser(delta, half, beta)
        gain = coeff.sum(axis=1)
        gain[gain == 0.0] = 1.0
        coeff /= gain[:, None]
        valid = (idx >= 0) & (idx < n)
        gathered = np.where(valid, x[np.clip(idx, 0, n - 1)], 0.0)
        y[start:stop] = np.einsum("ij,ij->i", coeff, gathered)

    return AudioClip(np.clip(y, -1.0, 1.0), target_hz)
