"""Single-pass solvers: race feasibility instances over one stream and
report the best feasible bottleneck for the declared knowledge regime.

Four regimes are supported, each reading the stream exactly once:

* total weight known: geometric candidate grid from total/blocks upward;
* maximum and length known: geometric grid from the maximum upward;
* maximum known: a doubling-and-ratio probe grid raced together with a set
  of escalating instances, covering both small and large optima;
* nothing known: a self-adjusting 2-approximation (with separators) or a
  closed-form bound (value only).

All candidate bounds are exact rationals and all feasibility floors are
computed exactly, so a reported bottleneck is never below the optimum.
Declared knowledge is verified against the stream after the pass; lying is
reported as an error instead of an unsound result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .core import (
    DeclaredBoundError,
    KnowledgeMismatchError,
    SpaceMeter,
    as_fraction,
    ceil_fraction,
)
from .feasibility import PART_MODE, PARTB_MODE, ProbeInstance
from .probe_ext import ProbeExtInstance

KNOWN_TOTAL_TAG = "known-S"
KNOWN_MAX_LENGTH_TAG = "known-mn"
KNOWN_MAX_TAG = "known-m"
UNKNOWN_TAG = "unknown-2approx"

# the ratio guarantee of solve_known_max is only established below this
EPSILON_GUARANTEE_LIMIT = Fraction(1, 64)
WARN_EPSILON_RANGE = "epsilon-outside-established-guarantee"

# driver state: one word per declared value plus the element counter
KNOWN_TOTAL_DRIVER_WORDS = 2
KNOWN_MAX_LENGTH_DRIVER_WORDS = 3
KNOWN_MAX_DRIVER_WORDS = 2
# element counter, running total, running max
UNKNOWN_VALUE_DRIVER_WORDS = 3
# element counter, running total, running max, bound, plus a start index and
# a weight per maintained block
UNKNOWN_PART_DRIVER_WORDS = 4


@dataclass(frozen=True)
class KnowledgeProfile:
    """What the caller declares about the stream before the pass."""

    max_weight: int | None = None
    length: int | None = None
    total_weight: int | None = None

    def __post_init__(self) -> None:
        for name in ("max_weight", "length", "total_weight"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"declared {name} must be non-negative, got {value}")


@dataclass
class SolveResult:
    mode: str
    algorithm: str
    bottleneck: Fraction
    separators: tuple[int, ...] | None
    merges: int | None
    instance_count: int
    space_peak_words: int
    elements_read: int
    epsilon: Fraction | None
    warning_flags: tuple[str, ...] = ()
    # grid detail for the doubling-and-ratio solver; not serialized
    probe_instances: int | None = None
    probe_ext_instances: int | None = None

    @property
    def bottleneck_ceil(self) -> int:
        return ceil_fraction(self.bottleneck)

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "algorithm": self.algorithm,
            "bottleneck_num": self.bottleneck.numerator,
            "bottleneck_den": self.bottleneck.denominator,
            "bottleneck_ceil": self.bottleneck_ceil,
            "separators": None if self.separators is None else list(self.separators),
            "merges": self.merges,
            "instance_count": self.instance_count,
            "space_peak_words": self.space_peak_words,
            "elements_read": self.elements_read,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "warning_flags": list(self.warning_flags),
        }


def growth_steps(ratio: Fraction, target) -> int:
    """Smallest non-negative c with ratio**c >= target, computed exactly."""
    ratio = as_fraction(ratio)
    if ratio <= 1:
        raise ValueError(f"growth ratio must exceed 1, got {ratio}")
    target = as_fraction(target)
    steps = 0
    power = Fraction(1)
    while power < target:
        power *= ratio
        steps += 1
    return steps


def _checked_mode(mode: str) -> str:
    if mode not in (PART_MODE, PARTB_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def _checked_epsilon(epsilon) -> Fraction:
    if epsilon is None:
        raise ValueError("epsilon is required for the approximation solvers")
    epsilon = as_fraction(epsilon)
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return epsilon


def _drive(
    stream: Iterable[int],
    probes: list[ProbeInstance],
    escalators: list[ProbeExtInstance],
    declared_max: int | None = None,
) -> tuple[int, int, int]:
    """Feed every live instance in one pass; return (length, total, max)."""
    length = 0
    total = 0
    biggest = 0
    live = list(probes)
    for weight in stream:
        if weight < 0:
            raise ValueError(f"negative weight {weight}")
        if declared_max is not None and weight > declared_max:
            raise DeclaredBoundError(
                f"element {weight} exceeds declared maximum weight {declared_max}"
            )
        length += 1
        total += weight
        if weight > biggest:
            biggest = weight
        lost = False
        for instance in live:
            instance.feed(weight)
            if instance.failure is not None:
                lost = True
        if lost:
            live = [inst for inst in live if inst.failure is None]
        for instance in escalators:
            instance.feed(weight)
    return length, total, biggest


def _smallest_success(instances: list[ProbeInstance]) -> ProbeInstance:
    # bounds are created in increasing order, so the first survivor is smallest
    winner = next((inst for inst in instances if inst.failure is None), None)
    if winner is None:
        raise RuntimeError("no candidate bound was feasible despite verified declarations")
    return winner


def solve_known_total(
    stream: Iterable[int],
    num_blocks: int,
    epsilon,
    total_weight: int,
    *,
    mode: str = PART_MODE,
    meter: SpaceMeter | None = None,
) -> SolveResult:
    """Candidates (total/p) * (1+eps)^i for i = 0..steps(p); smallest success wins."""
    mode = _checked_mode(mode)
    epsilon = _checked_epsilon(epsilon)
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    if total_weight < 0:
        raise ValueError(f"declared total weight must be non-negative, got {total_weight}")
    meter = meter if meter is not None else SpaceMeter()
    meter.charge(KNOWN_TOTAL_DRIVER_WORDS)
    growth = 1 + epsilon
    count = growth_steps(growth, num_blocks) + 1
    base = Fraction(total_weight, num_blocks)
    bounds = []
    power = Fraction(1)
    for _ in range(count):
        bounds.append(base * power)
        power *= growth
    instances = [
        ProbeInstance(b, num_blocks, store_separators=(mode == PART_MODE), meter=meter)
        for b in bounds
    ]
    length, total, _ = _drive(stream, instances, [])
    if total != total_weight:
        raise KnowledgeMismatchError(
            f"declared total weight {total_weight} but the stream sums to {total}"
        )
    winner = _smallest_success(instances)
    outcome = winner.finish(length)
    return SolveResult(
        mode=mode,
        algorithm=KNOWN_TOTAL_TAG,
        bottleneck=winner.bound,
        separators=outcome.separators,
        merges=None,
        instance_count=len(instances),
        space_peak_words=meter.peak_words,
        elements_read=length,
        epsilon=epsilon,
    )


def solve_known_max_length(
    stream: Iterable[int],
    num_blocks: int,
    epsilon,
    max_weight: int,
    length: int,
    *,
    mode: str = PART_MODE,
    meter: SpaceMeter | None = None,
) -> SolveResult:
    """Candidates max * (1+eps)^i for i = 0..steps(length); smallest success wins."""
    mode = _checked_mode(mode)
    epsilon = _checked_epsilon(epsilon)
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    if max_weight < 0 or length < 0:
        raise ValueError("declared maximum and length must be non-negative")
    meter = meter if meter is not None else SpaceMeter()
    meter.charge(KNOWN_MAX_LENGTH_DRIVER_WORDS)
    growth = 1 + epsilon
    count = growth_steps(growth, max(length, 1)) + 1
    bounds = []
    power = Fraction(1)
    for _ in range(count):
        bounds.append(max_weight * power)
        power *= growth
    instances = [
        ProbeInstance(b, num_blocks, store_separators=(mode == PART_MODE), meter=meter)
        for b in bounds
    ]
    seen, total, biggest = _drive(stream, instances, [], declared_max=max_weight)
    if seen != length:
        raise KnowledgeMismatchError(f"declared length {length} but read {seen} elements")
    if biggest != max_weight:
        raise KnowledgeMismatchError(
            f"declared maximum weight {max_weight} but observed {biggest}"
        )
    winner = _smallest_success(instances)
    outcome = winner.finish(seen)
    return SolveResult(
        mode=mode,
        algorithm=KNOWN_MAX_LENGTH_TAG,
        bottleneck=winner.bound,
        separators=outcome.separators,
        merges=None,
        instance_count=len(instances),
        space_peak_words=meter.peak_words,
        elements_read=seen,
        epsilon=epsilon,
    )


def solve_known_max(
    stream: Iterable[int],
    num_blocks: int,
    epsilon,
    max_weight: int,
    *,
    mode: str = PART_MODE,
    meter: SpaceMeter | None = None,
) -> SolveResult:
    """Race a doubling-and-ratio probe grid against escalating instances.

    Probe bounds are 2^i * (1+eps)^j * max_weight over a grid sized from
    delta = eps / (1 + eps/2); escalating instances use slacks
    (1 + eps/2)^j - 1. If any probe succeeded, the smallest successful
    probe bound wins (the grid is dense enough that its value is within
    (1+eps) of optimal whenever it is non-trivial); escalator results are
    the fallback for the large-optimum regime where every probe fails.
    """
    mode = _checked_mode(mode)
    epsilon = _checked_epsilon(epsilon)
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    if max_weight < 0:
        raise ValueError(f"declared maximum weight must be non-negative, got {max_weight}")
    meter = meter if meter is not None else SpaceMeter()
    meter.charge(KNOWN_MAX_DRIVER_WORDS)
    warnings: tuple[str, ...] = ()
    if epsilon >= EPSILON_GUARANTEE_LIMIT:
        warnings = (WARN_EPSILON_RANGE,)

    delta = epsilon / (1 + epsilon / 2)
    doubling_levels = growth_steps(Fraction(2), 1 / delta**2) + 1
    ratio_growth = 1 + epsilon
    ratio_levels = growth_steps(ratio_growth, 2) + 1
    ratio_powers = []
    power = Fraction(1)
    for _ in range(ratio_levels):
        ratio_powers.append(power)
        power *= ratio_growth
    store = mode == PART_MODE
    probes = []
    for i in range(doubling_levels):
        for j in range(ratio_levels):
            bound = max_weight * ratio_powers[j] * (1 << i)
            probes.append(ProbeInstance(bound, num_blocks, store_separators=store, meter=meter))

    slack_growth = 1 + epsilon / 2
    slack_levels = growth_steps(slack_growth, 2) + 1
    escalators = []
    power = Fraction(1)
    for _ in range(slack_levels):
        escalators.append(
            ProbeExtInstance(
                max_weight, num_blocks, power - 1, store_separators=store, meter=meter
            )
        )
        power *= slack_growth

    length, total, biggest = _drive(stream, probes, escalators, declared_max=max_weight)
    if biggest != max_weight:
        raise KnowledgeMismatchError(
            f"declared maximum weight {max_weight} but observed {biggest}"
        )

    best_value: Fraction | None = None
    best_probe: ProbeInstance | None = None
    for instance in probes:  # scan order is lexicographic in (i, j)
        if instance.failure is None and (best_value is None or instance.bound < best_value):
            best_value = instance.bound
            best_probe = instance
    best_escalator: ProbeExtInstance | None = None
    if best_probe is None:
        for instance in escalators:
            value = instance.bottleneck
            if best_value is None or value < best_value:
                best_value = value
                best_escalator = instance
    if best_probe is not None:
        outcome = best_probe.finish(length)
        bottleneck = best_probe.bound
        separators = outcome.separators
        merges = None
    else:
        assert best_escalator is not None
        ext_result = best_escalator.finish(length)
        bottleneck = ext_result.bottleneck
        separators = ext_result.separators
        merges = ext_result.merges
    return SolveResult(
        mode=mode,
        algorithm=KNOWN_MAX_TAG,
        bottleneck=bottleneck,
        separators=separators,
        merges=merges,
        instance_count=len(probes) + len(escalators),
        space_peak_words=meter.peak_words,
        elements_read=length,
        epsilon=epsilon,
        warning_flags=warnings,
        probe_instances=len(probes),
        probe_ext_instances=len(escalators),
    )


class UnknownPartSolver:
    """Self-adjusting 2-approximation that maintains separators.

    After each element the bound is 2 * max(running max, running total / p).
    The maintained blocks plus the incoming element are regrouped greedily
    under the new bound, so at most p blocks are ever needed and boundaries
    only move forward. All comparisons are exact via cross-multiplication.
    """

    def __init__(self, num_blocks: int, meter: SpaceMeter | None = None) -> None:
        if num_blocks < 2:
            raise ValueError(f"block count must be at least 2, got {num_blocks}")
        self.num_blocks = num_blocks
        self.separators = [1] * (num_blocks + 1)
        self.block_weights = [0] * num_blocks
        self.total = 0
        self.max_weight = 0
        self.elements_read = 0
        self.meter = meter if meter is not None else SpaceMeter()
        self.meter.charge(UNKNOWN_PART_DRIVER_WORDS + 2 * num_blocks)

    @property
    def bound(self) -> Fraction:
        return Fraction(2 * max(self.max_weight * self.num_blocks, self.total), self.num_blocks)

    def feed(self, weight: int) -> None:
        if weight < 0:
            raise ValueError(f"negative weight {weight}")
        self.elements_read += 1
        index = self.elements_read
        self.total += weight
        if weight > self.max_weight:
            self.max_weight = weight
        blocks = self.num_blocks
        # compare p * (acc + w) <= p * bound = 2 * max(max_weight * p, total)
        cap = 2 * max(self.max_weight * blocks, self.total)
        starts = [1]
        sums = []
        acc = 0
        first = True
        for start, w in self._items(index, weight):
            if first:
                acc = w
                first = False
            elif blocks * (acc + w) <= cap:
                acc += w
            else:
                sums.append(acc)
                starts.append(start)
                acc = w
        sums.append(acc)
        if len(sums) > blocks:
            raise RuntimeError("regrouping exceeded the block budget")
        grown = index + 1
        self.separators = starts + [grown] * (blocks + 1 - len(starts))
        self.block_weights = sums + [0] * (blocks - len(sums))

    def _items(self, index: int, weight: int) -> Iterator[tuple[int, int]]:
        for k in range(self.num_blocks):
            yield self.separators[k], self.block_weights[k]
        yield index, weight

    def result(self) -> SolveResult:
        return SolveResult(
            mode=PART_MODE,
            algorithm=UNKNOWN_TAG,
            bottleneck=self.bound,
            separators=tuple(self.separators),
            merges=None,
            instance_count=1,
            space_peak_words=self.meter.peak_words,
            elements_read=self.elements_read,
            epsilon=None,
        )


def solve_unknown_part(
    stream: Iterable[int], num_blocks: int, *, meter: SpaceMeter | None = None
) -> SolveResult:
    solver = UnknownPartSolver(num_blocks, meter)
    for weight in stream:
        solver.feed(weight)
    return solver.result()


def solve_unknown_partb(
    stream: Iterable[int], num_blocks: int, *, meter: SpaceMeter | None = None
) -> SolveResult:
    """Value-only 2-approximation: max(running max, total / p) + running max."""
    if num_blocks < 2:
        raise ValueError(f"block count must be at least 2, got {num_blocks}")
    meter = meter if meter is not None else SpaceMeter()
    meter.charge(UNKNOWN_VALUE_DRIVER_WORDS)
    length = 0
    total = 0
    biggest = 0
    for weight in stream:
        if weight < 0:
            raise ValueError(f"negative weight {weight}")
        length += 1
        total += weight
        if weight > biggest:
            biggest = weight
    bottleneck = max(Fraction(biggest), Fraction(total, num_blocks)) + biggest
    return SolveResult(
        mode=PARTB_MODE,
        algorithm=UNKNOWN_TAG,
        bottleneck=bottleneck,
        separators=None,
        merges=None,
        instance_count=0,
        space_peak_words=meter.peak_words,
        elements_read=length,
        epsilon=None,
    )


def dispatch(
    stream: Iterable[int],
    num_blocks: int,
    epsilon,
    profile: KnowledgeProfile,
    *,
    mode: str = PART_MODE,
    meter: SpaceMeter | None = None,
) -> SolveResult:
    """Route to the best solver the profile allows.

    A declared total wins; otherwise a declared maximum selects the
    doubling-and-ratio solver even when the length is also declared, since
    its working state is smaller. The max-and-length solver is only reached
    by calling it directly. With no declarations the 2-approximation runs,
    picking the separator or value-only variant from `mode`.
    """
    mode = _checked_mode(mode)
    if profile.total_weight is not None:
        return solve_known_total(
            stream, num_blocks, epsilon, profile.total_weight, mode=mode, meter=meter
        )
    if profile.max_weight is not None:
        return solve_known_max(
            stream, num_blocks, epsilon, profile.max_weight, mode=mode, meter=meter
        )
    if mode == PART_MODE:
        return solve_unknown_part(stream, num_blocks, meter=meter)
    return solve_unknown_partb(stream, num_blocks, meter=meter)
