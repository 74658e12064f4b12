import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from medasr.audio import AudioClip
from medasr.corpus import ManifestEntry, TtsStyleParams


def sine_clip(freq_hz=440.0, duration_s=1.0, sample_rate=16000, amplitude=0.5):
    t = np.arange(int(duration_s * sample_rate)) / sample_rate
    return AudioClip(amplitude * np.sin(2.0 * np.pi * freq_hz * t), sample_rate)


def silence_clip(duration_s=1.0, sample_rate=16000):
    return AudioClip(np.zeros(int(duration_s * sample_rate)), sample_rate)


def text_entry(entry_id: str, text: str) -> ManifestEntry:
    """Manifest entry for text-only pipelines; audio path is never resolved."""
    return ManifestEntry(id=entry_id, audio_path=f"audio/{entry_id}.wav",
                         text=text, duration_s=30.0, voice="male",
                         style=TtsStyleParams(), source="ICD10")


@pytest.fixture
def tiny_manifest_entries():
    return [
        text_entry("e1", "the patient was prescribed amoxicillin"),
        text_entry("e2", "we also prescribed ibuprofen twice daily"),
        text_entry("e3", "sertraline fifty milligrams at night"),
    ]
