"""Audio DSP front-end: clips, WAV I/O, resampling, features, VAD, denoise."""

from medasr.audio.clip import AudioClip, standardize_duration
from medasr.audio.denoise import MODES as NOISE_MODES
from medasr.audio.denoise import PASSTHROUGH, SPECTRAL_GATE, noise_reduce
from medasr.audio.features import (
    HOP,
    LOG_FLOOR,
    N_FFT,
    N_MELS,
    POWER_FLOOR,
    MelSpectrogram,
    log_mel,
    mel_filterbank,
    read_features,
    write_features,
)
from medasr.audio.quality import AudioQualityReport, analyze_quality, snr_db
from medasr.audio.resample import resample
from medasr.audio.vad import VadSegments, energy_vad, frame_energies_db
from medasr.audio.wavio import (
    clip_from_wav_bytes,
    read_wav,
    read_wav_header,
    wav_bytes,
    write_wav,
)

__all__ = [
    "AudioClip",
    "AudioQualityReport",
    "HOP",
    "LOG_FLOOR",
    "MelSpectrogram",
    "N_FFT",
    "N_MELS",
    "NOISE_MODES",
    "PASSTHROUGH",
    "POWER_FLOOR",
    "SPECTRAL_GATE",
    "VadSegments",
    "analyze_quality",
    "clip_from_wav_bytes",
    "energy_vad",
    "frame_energies_db",
    "log_mel",
    "mel_filterbank",
    "noise_reduce",
    "read_features",
    "read_wav",
    "read_wav_header",
    "resample",
    "snr_db",
    "standardize_duration",
    "wav_bytes",
    "write_features",
    "write_wav",
]
