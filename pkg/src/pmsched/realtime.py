"""Event-driven real-time dispatcher for the evolving preventive-task stream.

Each machine exposes exactly one pending task at a time: completing it renews
the machine and spawns the next task (release = completion + tau1, due date =
completion + tau2), so future tasks are undefined until their predecessor
completes. Decisions happen whenever a processor frees up before the horizon
ends: the urgency criterion restricts candidates to machines whose elapsed
time since renewal has reached tau1 (their pending task is released),
otherwise all pending tasks compete; the priority-rule strength reduction
picks the winner.

A task is dispatched only if it can start before the horizon end; a processor
whose every candidate would start at or after the horizon is retired. A task
started before the horizon end runs to completion (non-preemptive), even past
it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .priority import dominance_from_arrays, select_position
from .tasks import CostWeights, Machine, MaintTask, ScheduleEntry, UNIT_WEIGHTS, entry_cost, next_task


class HorizonExhausted(Exception):
    """No processor can start another task before the horizon ends."""


@dataclass
class SystemState:
    """Mutable state of one simulation run."""

    machines: list[Machine]
    horizon: float
    free: list[float]  # per-processor earliest start time; inf = retired
    last_completion: list[float]  # per machine, 0.0 until first maintenance
    pending: list[MaintTask]  # the one live task per machine
    seq: list[int]  # per machine, m of the pending task
    log: list[ScheduleEntry] = field(default_factory=list)
    clock: float = 0.0
    next_index: int = 0

    @property
    def q(self) -> int:
        return len(self.free)


def new_state(machines, q: int, horizon: float) -> SystemState:
    """Fresh state at t = 0: every machine carries its first pending task."""
    machines = list(machines)
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if horizon <= 0.0:
        raise ValueError(f"horizon must be > 0, got {horizon}")
    state = SystemState(
        machines=machines,
        horizon=horizon,
        free=[0.0] * q,
        last_completion=[0.0] * len(machines),
        pending=[],
        seq=[1] * len(machines),
    )
    for machine in machines:
        state.pending.append(next_task(machine, 0.0, 1, index=state.next_index))
        state.next_index += 1
    return state


@dataclass(frozen=True)
class UrgencySet:
    """Machines (by position) whose elapsed time since renewal reached tau1."""

    t: float
    members: tuple


def urgency_set(state: SystemState) -> UrgencySet:
    """Urgent machines at the state clock: t - last_completion >= tau1.

    Equivalent to the pending task being released (r <= t)."""
    t = state.clock
    members = tuple(
        k
        for k, machine in enumerate(state.machines)
        if t - state.last_completion[k] >= machine.tau1
    )
    return UrgencySet(t=t, members=members)


def dispatch_step(
    state: SystemState, use_urgency: bool = True, weights: CostWeights = UNIT_WEIGHTS
) -> tuple[ScheduleEntry, SystemState]:
    """Dispatch one task; mutates and returns the state with the new entry.

    Raises :class:`HorizonExhausted` when no processor can start a task before
    the horizon end. Processors whose candidates would all start at or after
    the horizon are retired (their free time is set to infinity) and the next
    processor is considered.
    """
    while True:
        j = min(range(state.q), key=lambda k: state.free[k])
        t = state.free[j]
        if t >= state.horizon:
            raise HorizonExhausted(f"earliest processor free time {t} >= horizon {state.horizon}")
        state.clock = t

        candidates = list(urgency_set(state).members) if use_urgency else []
        if not candidates:
            candidates = list(range(len(state.machines)))
        startable = [k for k in candidates if max(t, state.pending[k].r) < state.horizon]
        if not startable:
            state.free[j] = math.inf
            continue

        r = np.array([state.pending[k].r for k in startable])
        p = np.array([state.pending[k].p for k in startable])
        d = np.array([state.pending[k].d for k in startable])
        ids = np.array([state.pending[k].index for k in startable], dtype=np.int64)
        pos = select_position(dominance_from_arrays(r, p, d, ids, t, weights))
        k = startable[pos]

        task = state.pending[k]
        machine = state.machines[k]
        start = max(t, task.r)
        completion = start + task.p
        entry = ScheduleEntry(task, j, start, completion)
        state.log.append(entry)
        state.free[j] = completion
        state.last_completion[k] = completion
        state.seq[k] += 1
        state.pending[k] = next_task(machine, completion, state.seq[k], index=state.next_index)
        state.next_index += 1
        return entry, state


@dataclass(frozen=True)
class SimReport:
    """Per-run metrics of a horizon simulation.

    ``mean_cost_processed`` averages the weighted cost over dispatched tasks;
    ``mean_cost_needed`` averages over every task needed on the horizon,
    charging each needed-but-unprocessed task as if cut off at the horizon end
    (flow = horizon - release, tardiness = max(0, horizon - due)). Needed
    tasks are the processed ones plus, per machine, the pending task and its
    zero-wait unrolled successors whose release falls before the horizon.
    """

    horizon: float
    q: int
    use_urgency: bool
    processed: int
    needed: int
    mean_cost_processed: float
    mean_cost_needed: float
    busy_time: tuple
    total_cost_processed: float

    @property
    def unprocessed(self) -> int:
        return self.needed - self.processed

    @property
    def mean_busy_time(self) -> float:
        return sum(self.busy_time) / len(self.busy_time)


def _unprocessed_needed(state: SystemState, weights: CostWeights) -> tuple[int, float]:
    """Count and horizon-truncated cost of needed-but-unprocessed tasks.

    Per machine, walks the pending task and then hypothetical successors under
    zero queueing wait (each would complete at its own release plus the
    processing time) while releases stay inside the horizon.
    """
    h = state.horizon
    count = 0
    charge = 0.0
    for k, machine in enumerate(state.machines):
        r = state.pending[k].r
        d = state.pending[k].d
        while r < h:
            count += 1
            charge += weights.flow * (h - r) + weights.tardy * max(0.0, h - d)
            r = r + machine.mtp + machine.tau1
            d = r + (machine.tau2 - machine.tau1)
    return count, charge


def run_horizon(
    state: SystemState, use_urgency: bool = True, weights: CostWeights = UNIT_WEIGHTS
) -> SimReport:
    """Dispatch until the horizon is exhausted and compute the run metrics."""
    try:
        while True:
            dispatch_step(state, use_urgency, weights)
    except HorizonExhausted:
        pass

    processed = len(state.log)
    cost_processed = sum(entry_cost(e, weights) for e in state.log)
    busy = [0.0] * state.q
    for e in state.log:
        busy[e.processor] += e.task.p
    unprocessed, charge = _unprocessed_needed(state, weights)
    needed = processed + unprocessed
    return SimReport(
        horizon=state.horizon,
        q=state.q,
        use_urgency=use_urgency,
        processed=processed,
        needed=needed,
        mean_cost_processed=cost_processed / processed if processed else 0.0,
        mean_cost_needed=(cost_processed + charge) / needed if needed else 0.0,
        busy_time=tuple(busy),
        total_cost_processed=cost_processed,
    )
