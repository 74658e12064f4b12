"""Seeded noisy-channel transcriber.

Stands in for a real ASR model during end-to-end tests: it corrupts the
reference token stream with independent substitution/deletion/insertion
events at configured rates.  The RNG stream is keyed by (config seed,
entry id), so corruption is reproducible per utterance and independent of
evaluation order or thread scheduling.
"""

from dataclasses import dataclass

from medasr._rng import derive_rng
from medasr.metrics.normalize import normalize


@dataclass(frozen=True)
class NoisyChannelConfig:
    sub_rate: float = 0.0
    del_rate: float = 0.0
    ins_rate: float = 0.0
    seed: int = 42

    def __post_init__(self):
        for name in ("sub_rate", "del_rate", "ins_rate"):
            rate = getattr(self, name)
            if not 0.0 <= rate <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {rate}")
        if self.sub_rate + self.del_rate > 1.0:
            raise ValueError("sub_rate + del_rate must not exceed 1")


def noisy_transcribe(entry, cfg: NoisyChannelConfig, vocabulary) -> str:
    """Corrupt one entry's reference text.

    Per token: substitute with a different in-vocabulary token with
    probability sub_rate, else delete with probability del_rate, else keep.
    After each token position, insert a random vocabulary token with
    probability ins_rate.
    """
    tokens = normalize(entry.text).tokens
    vocab = list(vocabulary)
    rng = derive_rng("noisy", cfg.seed, entry.id)
    out = []
    for token in tokens:
        u = rng.random()
        if u < cfg.sub_rate and vocab:
            pick = rng.randrange(len(vocab))
            if vocab[pick] == token:
                pick = (pick + 1) % len(vocab)
            out.append(vocab[pick])
        elif u < cfg.sub_rate + cfg.del_rate:
            pass
        else:
            out.append(token)
        if rng.random() < cfg.ins_rate and vocab:
            out.append(vocab[rng.randrange(len(vocab))])
    return " ".join(out)


class NoisyChannelTranscriber:
    """Transcriber-protocol wrapper; vocabulary defaults to the corpus tokens."""

    def __init__(self, cfg: NoisyChannelConfig, vocabulary=None):
        self.cfg = cfg
        self.vocabulary = sorted(set(vocabulary)) if vocabulary else []

    @classmethod
    def from_entries(cls, entries, cfg: NoisyChannelConfig):
        vocab = set()
        for entry in entries:
            vocab.update(normalize(entry.text).tokens)
        return cls(cfg, vocab)

    def transcribe(self, entry, clip=None) -> str:
        vocab = self.vocabulary or list(normalize(entry.text).tokens)
        return noisy_transcribe(entry, self.cfg, vocab)
