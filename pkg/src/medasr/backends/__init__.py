"""Model-backend contracts: deterministic mocks, a noisy-channel test double,
a lexicon enhancer, and the HTTP wire protocol for real services."""

from medasr.backends.endpoints import (
    ENDPOINT_ENV_PREFIX,
    ROLES,
    BackendEndpoint,
    RemoteEnhancer,
    RemoteTextGenerator,
    RemoteTranscriber,
    RemoteTtsBackend,
    WireRequest,
    WireResponse,
    endpoint_from_env,
    remote_call,
)
from medasr.backends.enhance import Lexicon, LexiconEnhancer, lexicon_enhance
from medasr.backends.mock import (
    MOCK_TTS_RATE,
    SENTENCE_TEMPLATES,
    CannedTranscriber,
    IdentityTranscriber,
    MockTextGenerator,
    MockTtsBackend,
    fill_template,
    mock_context,
    mock_tts,
    template_generate,
)
from medasr.backends.noisy import (
    NoisyChannelConfig,
    NoisyChannelTranscriber,
    noisy_transcribe,
)

__all__ = [
    "BackendEndpoint",
    "CannedTranscriber",
    "ENDPOINT_ENV_PREFIX",
    "IdentityTranscriber",
    "Lexicon",
    "LexiconEnhancer",
    "MOCK_TTS_RATE",
    "MockTextGenerator",
    "MockTtsBackend",
    "NoisyChannelConfig",
    "NoisyChannelTranscriber",
    "ROLES",
    "RemoteEnhancer",
    "RemoteTextGenerator",
    "RemoteTranscriber",
    "RemoteTtsBackend",
    "SENTENCE_TEMPLATES",
    "WireRequest",
    "WireResponse",
    "endpoint_from_env",
    "fill_template",
    "lexicon_enhance",
    "mock_context",
    "mock_tts",
    "noisy_transcribe",
    "remote_call",
    "template_generate",
]
