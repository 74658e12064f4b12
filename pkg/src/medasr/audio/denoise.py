"""Noise reduction: passthrough or spectral gating.

The spectral gate estimates a per-bin noise magnitude from the
lowest-energy 10% of STFT frames and attenuates any time-frequency bin that
does not rise ``margin_db`` above it.  Passthrough exists so benchmark runs
can record "no preprocessing" explicitly.
"""

import numpy as np

from medasr.audio.clip import AudioClip

PASSTHROUGH = "passthrough"
SPECTRAL_GATE = "spectral_gate"
MODES = (PASSTHROUGH, SPECTRAL_GATE)

_N_FFT = 512
_HOP = 128


def noise_reduce(clip: AudioClip, mode: str = PASSTHROUGH, *,
                 margin_db: float = 6.0, attenuation: float = 0.1) -> AudioClip:
    """Apply the selected noise-reduction mode; output length equals input."""
    if mode == PASSTHROUGH:
        return clip
    if mode != SPECTRAL_GATE:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not len(clip):
        raise ValueError("cannot denoise an empty clip")

    x = clip.samples
    n = x.size
    pad = _N_FFT // 2
    # Right-pad so every analysis hop is a full window and the tail is covered.
    total = pad + n + pad
    deficit = (-(total - _N_FFT)) % _HOP
    padded = np.concatenate([np.zeros(pad), x, np.zeros(pad + deficit)])
    n_frames = 1 + (padded.size - _N_FFT) // _HOP

    window = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(_N_FFT) / _N_FFT))
    idx = np.arange(n_frames)[:, None] * _HOP + np.arange(_N_FFT)[None, :]
    spectrum = np.fft.rfft(padded[idx] * window, axis=1)
    mag = np.abs(spectrum)

    frame_energy = (mag * mag).sum(axis=1)
    quiet_count = max(1, int(0.1 * n_frames))
    quiet = np.argsort(frame_energy, kind="stable")[:quiet_count]
    noise_mag = mag[quiet].mean(axis=0)
    threshold = noise_mag * 10.0 ** (margin_db / 20.0)
    gain = np.where(mag > threshold[None, :], 1.0, attenuation)

    # Weighted overlap-add resynthesis with window-squared normalization.
    frames_out = np.fft.irfft(spectrum * gain, n=_N_FFT, axis=1) * window
    out = np.zeros(padded.size)
    norm = np.zeros(padded.size)
    wsq = window * window
    for f in range(n_frames):
        start = f * _HOP
        out[start:start + _N_FFT] += frames_out[f]
        norm[start:start + _N_FFT] += wsq
    out = out / np.maximum(norm, 1e-12)
    return AudioClip(np.clip(out[pad:pad + n], -1.0, 1.0), clip.sample_rate)
