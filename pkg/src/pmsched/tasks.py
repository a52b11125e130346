"""Machines, preventive tasks, schedules, and the flow-time/tardiness cost.

A machine carries its availability model, the two inverted durations ``tau1``
(release interval) and ``tau2`` (deadline interval), and the processing time
``mtp`` of one preventive task. Completing task ``m`` at time ``c`` renews the
machine, so the next task's release and due date are ``c + tau1`` and
``c + tau2``: tasks on one machine form a precedence chain whose dates are
only known once the predecessor completes.

The cost of a schedule is the weighted sum, over entries, of flow time
``c - r`` and tardiness ``max(0, c - d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .reliability import ExponentialModel, Thresholds, WeibullModel

ReliabilityModel = Union[ExponentialModel, WeibullModel]


@dataclass(frozen=True)
class CostWeights:
    """Non-negative weights for the flow-time and tardiness terms."""

    flow: float = 1.0
    tardy: float = 1.0

    def __post_init__(self):
        if self.flow < 0.0 or self.tardy < 0.0:
            raise ValueError(f"weights must be >= 0, got ({self.flow}, {self.tardy})")


UNIT_WEIGHTS = CostWeights(1.0, 1.0)


@dataclass(frozen=True)
class Machine:
    """One maintainable machine and its derived maintenance parameters.

    ``tau1``/``tau2`` are the inter-maintenance durations (days) obtained from
    the availability thresholds; ``mtp`` is the processing time of one
    preventive task (days, the mean time to maintain, ``1/mu``).
    """

    id: int
    reliability: ReliabilityModel
    tau1: float
    tau2: float
    mtp: float
    site: int = 1
    thresholds: Optional[Thresholds] = None

    def __post_init__(self):
        if not self.tau1 > 0.0:
            raise ValueError(f"tau1 must be > 0, got {self.tau1}")
        if not self.tau2 > self.tau1:
            raise ValueError(f"need tau2 > tau1, got tau1={self.tau1}, tau2={self.tau2}")
        if not self.mtp > 0.0:
            raise ValueError(f"mtp must be > 0, got {self.mtp}")


@dataclass(frozen=True)
class MaintTask:
    """One preventive task: release ``r``, processing time ``p``, due date ``d``.

    ``index`` is the dense global creation index used for deterministic
    tie-breaking; ``machine_id``/``m`` locate the task on its machine's chain
    (``m``-th task), and are absent for free-standing scheduling instances.
    """

    index: int
    r: float
    p: float
    d: float
    machine_id: Optional[int] = None
    m: int = 1

    def __post_init__(self):
        if not self.p > 0.0:
            raise ValueError(f"processing time must be > 0, got {self.p}")
        if not self.d > self.r:
            raise ValueError(f"due date must exceed release, got r={self.r}, d={self.d}")


@dataclass(frozen=True)
class ScheduleEntry:
    """A task placed on a processor; completion is always ``start + task.p``."""

    task: MaintTask
    processor: int
    start: float
    completion: float


@dataclass(frozen=True)
class Violation:
    """First schedule-invariant violation found, with a short kind tag."""

    kind: str
    message: str


def next_task(machine: Machine, prev_completion: float, m: int, index: int = 0) -> MaintTask:
    """The ``m``-th task on ``machine`` given its predecessor's completion.

    Release and due date are the completion plus ``tau1`` and ``tau2``; for
    ``m == 1`` the predecessor completion is the horizon start, 0.
    """
    if prev_completion < 0.0:
        raise ValueError(f"prev_completion must be >= 0, got {prev_completion}")
    return MaintTask(
        index=index,
        r=prev_completion + machine.tau1,
        p=machine.mtp,
        d=prev_completion + machine.tau2,
        machine_id=machine.id,
        m=m,
    )


def entry_cost(entry: ScheduleEntry, weights: CostWeights = UNIT_WEIGHTS) -> float:
    """Weighted flow-time plus tardiness of one schedule entry."""
    flow = entry.completion - entry.task.r
    tardy = max(0.0, entry.completion - entry.task.d)
    return weights.flow * flow + weights.tardy * tardy


def total_cost(schedule, weights: CostWeights = UNIT_WEIGHTS) -> float:
    """Sum of weighted flow-time and tardiness over all entries."""
    return sum(entry_cost(e, weights) for e in schedule)


def validate_schedule(schedule, tasks, q: int) -> Optional[Violation]:
    """Check schedule invariants; return the first violation or None.

    Checks: processor indices in range, completion equals start plus
    processing time (non-preemption), no early starts, each task scheduled at
    most once, and no overlap among entries sharing a processor.
    """
    seen = set()
    by_processor: dict[int, list[ScheduleEntry]] = {}
    known = {t.index for t in tasks}
    for e in schedule:
        if not (0 <= e.processor < q):
            return Violation("bad-processor", f"processor {e.processor} outside 0..{q - 1}")
        if abs(e.completion - (e.start + e.task.p)) > 1e-9:
            return Violation(
                "preemption",
                f"task {e.task.index}: completion {e.completion} != start+p {e.start + e.task.p}",
            )
        if e.start < e.task.r - 1e-12:
            return Violation(
                "early-start", f"task {e.task.index} starts {e.start} before release {e.task.r}"
            )
        if e.task.index in seen:
            return Violation("duplicate-task", f"task {e.task.index} scheduled twice")
        if known and e.task.index not in known:
            return Violation("unknown-task", f"task {e.task.index} not in the instance")
        seen.add(e.task.index)
        by_processor.setdefault(e.processor, []).append(e)
    for proc, entries in by_processor.items():
        entries = sorted(entries, key=lambda e: e.start)
        for a, b in zip(entries, entries[1:]):
            if b.start < a.completion - 1e-12:
                return Violation(
                    "overlap",
                    f"processor {proc}: task {b.task.index} starts {b.start} "
                    f"before task {a.task.index} completes {a.completion}",
                )
    return None
