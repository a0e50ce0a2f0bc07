"""One-pass greedy feasibility test for a fixed bottleneck bound.

The test packs elements into maximal blocks: an element joins the current
block while the block sum stays within the floored bound, otherwise it opens
the next block and its index is recorded as a separator. The test fails the
moment a single element exceeds the floored bound, or the moment an element
would open one block more than allowed. Success for integer bounds is
exactly equivalent to the bound being at least the offline optimum, which is
what makes racing several of these instances a search procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .core import SpaceMeter, as_fraction, floor_fraction

# element index, block ordinal, block weight, threshold
PROBE_STATE_WORDS = 4

PART_MODE = "part"
PARTB_MODE = "partb"


class ProbeFailure(Enum):
    ELEMENT_EXCEEDS_THRESHOLD = "element-exceeds-threshold"
    PARTITIONS_EXHAUSTED = "partitions-exhausted"


@dataclass(frozen=True)
class ProbeOutcome:
    success: bool
    failure: ProbeFailure | None = None
    separators: tuple[int, ...] | None = None


class ProbeInstance:
    """Feasibility state machine for one bound.

    `bound` may be any non-negative rational; behaviour depends only on its
    floor. In separator-storing mode the instance records, for each block
    after the first, the index of the element that opened it.
    """

    __slots__ = (
        "bound",
        "threshold_floor",
        "num_blocks",
        "block_ordinal",
        "block_weight",
        "next_index",
        "separators",
        "failure",
    )

    def __init__(
        self,
        bound,
        num_blocks: int,
        *,
        store_separators: bool = True,
        meter: SpaceMeter | None = None,
    ) -> None:
        bound = as_fraction(bound)
        if bound < 0:
            raise ValueError(f"bound must be non-negative, got {bound}")
        if num_blocks < 2:
            raise ValueError(f"block count must be at least 2, got {num_blocks}")
        self.bound: Fraction = bound
        self.threshold_floor = floor_fraction(bound)
        self.num_blocks = num_blocks
        self.block_ordinal = 1
        self.block_weight = 0
        self.next_index = 1
        self.separators: list[int] | None = [] if store_separators else None
        self.failure: ProbeFailure | None = None
        if meter is not None:
            # separator storage is reserved up front: one word per boundary
            extra = num_blocks - 1 if store_separators else 0
            meter.charge(PROBE_STATE_WORDS + extra)

    @property
    def alive(self) -> bool:
        return self.failure is None

    def feed(self, weight: int) -> None:
        if self.failure is not None:
            raise RuntimeError("cannot feed a failed probe instance")
        if weight < 0:
            raise ValueError(f"negative weight {weight}")
        threshold = self.threshold_floor
        if weight > threshold:
            self.failure = ProbeFailure.ELEMENT_EXCEEDS_THRESHOLD
        elif self.block_weight + weight <= threshold:
            self.block_weight += weight
        elif self.block_ordinal < self.num_blocks:
            # this element opens the next block; its index is the separator
            if self.separators is not None:
                self.separators.append(self.next_index)
            self.block_ordinal += 1
            self.block_weight = weight
        else:
            self.failure = ProbeFailure.PARTITIONS_EXHAUSTED
        self.next_index += 1

    def finish(self, length: int | None = None) -> ProbeOutcome:
        """Close the pass; unused separators are padded past the stream end."""
        fed = self.next_index - 1
        if length is not None and length != fed:
            raise ValueError(f"stream length mismatch: fed {fed} elements, caller says {length}")
        if self.failure is not None:
            return ProbeOutcome(False, failure=self.failure)
        if self.separators is None:
            return ProbeOutcome(True)
        padding = self.num_blocks - 1 - len(self.separators)
        separators = (1, *self.separators, *([fed + 1] * (padding + 1)))
        return ProbeOutcome(True, separators=separators)


def probe_run(
    stream: Iterable[int],
    bound,
    num_blocks: int,
    *,
    mode: str = PART_MODE,
    meter: SpaceMeter | None = None,
) -> ProbeOutcome:
    """Run a single probe over a whole stream (stops early once failed)."""
    if mode not in (PART_MODE, PARTB_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    instance = ProbeInstance(
        bound, num_blocks, store_separators=(mode == PART_MODE), meter=meter
    )
    for weight in stream:
        instance.feed(weight)
        if instance.failure is not None:
            break
    return instance.finish()


def greedy_maximality_check(weights: Sequence[int], outcome: ProbeOutcome, bound) -> bool:
    """True iff every recorded separator closed a maximal block.

    A block is maximal when adding the element that opened the next block
    would have pushed it past the floored bound.
    """
    if not outcome.success or outcome.separators is None:
        raise ValueError("maximality check needs a successful separator-storing outcome")
    threshold = floor_fraction(as_fraction(bound))
    length = len(weights)
    separators = outcome.separators
    for k in range(1, len(separators) - 1):
        boundary = separators[k]
        if boundary > length:
            continue  # padding: no block was opened here
        opened_weight = sum(weights[separators[k - 1] - 1 : boundary - 1])
        if opened_weight + weights[boundary - 1] <= threshold:
            return False
    return True
