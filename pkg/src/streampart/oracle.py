"""Exact offline optima for in-memory instances, plus bound realization.

The binary-search oracle walks the closed sandwich interval
``[max(ceil(S/p), m), floor((S + (p-1)*m) / p)]`` whose upper end is always
feasible, testing feasibility with the same greedy maximal packing the
streaming probes use. The quadratic DP is an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import InfeasibleBoundError, as_fraction, floor_fraction


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    method: str


def _greedy_fits(weights: Sequence[int], threshold: int, num_blocks: int) -> bool:
    """Can a greedy maximal packing place everything in at most num_blocks blocks?"""
    blocks = 1
    acc = 0
    for w in weights:
        if w > threshold:
            return False
        if acc + w <= threshold:
            acc += w
        else:
            blocks += 1
            if blocks > num_blocks:
                return False
            acc = w
    return True


def opt_bottleneck_binsearch(weights: Sequence[int], num_blocks: int) -> OracleResult:
    """Least feasible bottleneck, by binary search inside the sandwich interval."""
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    total = sum(weights)
    heaviest = max(weights, default=0)
    low = max(-(-total // num_blocks), heaviest)
    high = (total + (num_blocks - 1) * heaviest) // num_blocks
    while low < high:
        mid = (low + high) // 2
        if _greedy_fits(weights, mid, num_blocks):
            high = mid
        else:
            low = mid + 1
    if not _greedy_fits(weights, low, num_blocks):
        raise RuntimeError("sandwich interval contained no feasible value")
    return OracleResult(low, "binsearch")


def opt_bottleneck_dp(
    weights: Sequence[int], num_blocks: int, *, max_cells: int = 20_000_000
) -> OracleResult:
    """Least feasible bottleneck, by the classic quadratic prefix recurrence."""
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    n = len(weights)
    if n * n * num_blocks > max_cells:
        raise ValueError(
            f"instance too large for the quadratic oracle "
            f"(n^2 * p = {n * n * num_blocks} > {max_cells})"
        )
    prefix = [0] * (n + 1)
    for idx, w in enumerate(weights, start=1):
        prefix[idx] = prefix[idx - 1] + w
    # best[i] = least bottleneck for the first i elements with the current block budget
    best = prefix[:]
    effective = min(num_blocks, n) if n else 1
    for _ in range(2, effective + 1):
        nxt = [0] * (n + 1)
        for i in range(1, n + 1):
            target = prefix[i]
            value = target  # j = 0: everything in the last block
            for j in range(1, i + 1):
                candidate = best[j]
                tail = target - prefix[j]
                if tail > candidate:
                    candidate = tail
                if candidate < value:
                    value = candidate
                if tail <= best[j]:
                    break  # best[j] grows and the tail shrinks with j
            nxt[i] = value
        best = nxt
    return OracleResult(best[n], "dp")


def realize_partition(weights: Sequence[int], num_blocks: int, bound) -> tuple[int, ...]:
    """Second pass: turn a feasible bottleneck value into separator positions.

    Greedy maximal packing under floor(bound); raises InfeasibleBoundError
    when the bound is below the optimum.
    """
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    bound = as_fraction(bound)
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    threshold = floor_fraction(bound)
    separators = [1]
    acc = 0
    for index, w in enumerate(weights, start=1):
        if w > threshold:
            raise InfeasibleBoundError(
                f"element {w} exceeds the floored bound {threshold}"
            )
        if acc + w <= threshold:
            acc += w
        else:
            if len(separators) == num_blocks:
                raise InfeasibleBoundError(
                    f"bound {bound} admits no partitioning into {num_blocks} blocks"
                )
            separators.append(index)
            acc = w
    padding = num_blocks - len(separators)
    separators.extend([len(weights) + 1] * (padding + 1))
    return tuple(separators)
