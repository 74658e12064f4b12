"""Deterministic train/test partitioning.

A splitmix64-driven Fisher-Yates shuffle keyed solely by the seed, then the
first floor(ratio * n) entries form the training set.  The same (entries,
ratio, seed) triple always yields the same partition on any platform; the
seed is not interchangeable with other libraries' random_state streams.
"""

from dataclasses import dataclass

from medasr._rng import SplitMix64


@dataclass(frozen=True)
class SplitConfig:
    ratio: float = 0.8
    seed: int = 42

    def __post_init__(self):
        if not 0.0 < self.ratio < 1.0:
            raise ValueError(f"ratio must be in (0, 1), got {self.ratio}")


def split_dataset(entries, config: SplitConfig = SplitConfig()):
    """Shuffle entries by seed and split: (train, test), disjoint and exhaustive."""
    entries = list(entries)
    if not entries:
        raise ValueError("cannot split an empty dataset")
    order = list(range(len(entries)))
    SplitMix64(config.seed).shuffle(order)
    # floor(ratio * n), nudged so exact products (0.8 * 1000) are not lost
    # to binary rounding just below the integer.
    train_size = int(config.ratio * len(entries) + 1e-9)
    train = [entries[i] for i in order[:train_size]]
    test = [entries[i] for i in order[train_size:]]
    return train, test
