"""Mono audio clip container and duration standardization."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class AudioClip:
    """Mono waveform: float64 samples in [-1, 1] at an integer sample rate."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError(f"samples must be 1-D, got shape {arr.shape}")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("samples contain non-finite values")
        if arr.size and float(np.max(np.abs(arr))) > 1.0:
            raise ValueError("samples exceed the [-1, 1] amplitude range")
        if int(self.sample_rate) <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))

    def __len__(self):
        return self.samples.size

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate


def standardize_duration(clip: AudioClip, target_s: float = 30.0) -> AudioClip:
    """Force a clip to exactly ``target_s`` seconds at its own sample rate.

    Shorter clips are zero-padded at the tail (digital zeros, no dither);
    longer clips are truncated at the tail; exact-length clips come back
    bit-identical.  Idempotent by construction.
    """
    if not len(clip):
        raise ValueError("cannot standardize an empty clip")
    target_len = int(round(target_s * clip.sample_rate))
    n = len(clip)
    if n == target_len:
        return clip
    if n > target_len:
        return AudioClip(clip.samples[:target_len].copy(), clip.sample_rate)
    out = np.zeros(target_len, dtype=np.float64)
    out[:n] = clip.samples
    return AudioClip(out, clip.sample_rate)
