"""Shared test utilities: independent optima, counting streams, corpora."""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence


def brute_force_optimum(weights: Sequence[int], num_blocks: int) -> int:
    """Minimum bottleneck by exhaustive separator enumeration.

    Places the p-1 interior separators at every non-decreasing tuple of
    positions in [1, n+1], so empty blocks are covered. Intended for small
    instances only; it is the ground truth the faster oracles are tested
    against.
    """
    n = len(weights)
    prefix = [0]
    for w in weights:
        prefix.append(prefix[-1] + w)
    best = prefix[-1]
    for mids in combinations_with_replacement(range(1, n + 2), num_blocks - 1):
        cuts = (1, *mids, n + 1)
        worst = max(
            prefix[cuts[k + 1] - 1] - prefix[cuts[k] - 1]
            for k in range(num_blocks)
        )
        if worst < best:
            best = worst
    return best


class CountingStream:
    """Iterator wrapper that records how many elements were pulled."""

    def __init__(self, weights: Iterable[int]) -> None:
        self._it = iter(weights)
        self.count = 0

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        value = next(self._it)
        self.count += 1
        return value


def random_stream(rng: random.Random, max_len: int = 100, max_weight: int = 10) -> list[int]:
    """Length 1..max_len, weights uniform in [0, cap] for a random cap."""
    n = rng.randint(1, max_len)
    cap = rng.randint(0, max_weight)
    return [rng.randint(0, cap) for _ in range(n)]


def seeded_corpus(
    count: int, base_seed: int, max_len: int = 100, max_weight: int = 10
) -> list[list[int]]:
    return [
        random_stream(random.Random(base_seed + k), max_len, max_weight)
        for k in range(count)
    ]


P_CHOICES = (2, 3, 5, 8)


def paired_blocks(index: int) -> int:
    """Deterministic p for the index-th corpus stream, cycling 2, 3, 5, 8."""
    return P_CHOICES[index % len(P_CHOICES)]
