#!/usr/bin/env python3
"""Benchmark the compiled alignment kernel against the pure-Python fallback.

Times corpus-style WER scoring (token sequences) and CER scoring (character
sequences) over a synthetic seeded workload and prints per-kernel throughput.

    python3 benchmarks/bench_align.py [--pairs 2000] [--repeat 3]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from medasr._rng import SplitMix64
from medasr.metrics import align_counts, available_kernels


def make_workload(pairs, seed=42):
    rng = SplitMix64(seed)
    vocab = [f"word{i:03d}" for i in range(400)]
    word_pairs = []
    char_pairs = []
    for _ in range(pairs):
        n = 8 + rng.randrange(18)
        ref = [vocab[rng.randrange(len(vocab))] for _ in range(n)]
        hyp = list(ref)
        for i in range(len(hyp)):           # ~15% token corruption
            if rng.random() < 0.15:
                hyp[i] = vocab[rng.randrange(len(vocab))]
        word_pairs.append((ref, hyp))
        char_pairs.append((list(" ".join(ref)), list(" ".join(hyp))))
    return word_pairs, char_pairs


def time_kernel(kernel, pairs, repeat):
    best = float("inf")
    checksum = 0
    for _ in range(repeat):
        started = time.perf_counter()
        checksum = 0
        for ref, hyp in pairs:
            checksum += align_counts(ref, hyp, kernel=kernel).distance
        best = min(best, time.perf_counter() - started)
    return best, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = available_kernels()
    print(f"kernels available: {', '.join(kernels)}")
    word_pairs, char_pairs = make_workload(args.pairs)

    for label, pairs in (("WER (token sequences)", word_pairs),
                         ("CER (character sequences)", char_pairs)):
        print(f"\n{label}, {len(pairs)} pairs, best of {args.repeat}:")
        timings = {}
        checksums = set()
        for kernel in kernels:
            elapsed, checksum = time_kernel(kernel, pairs, args.repeat)
            timings[kernel] = elapsed
            checksums.add(checksum)
            print(f"  {kernel:<8} {elapsed:8.3f} s "
                  f"({len(pairs) / elapsed:10.0f} pairs/s)")
        if len(checksums) != 1:
            print("  WARNING: kernels disagree on total edit distance!")
            return 1
        if "c" in timings and "python" in timings:
            print(f"  speedup: {timings['python'] / timings['c']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
