"""Static scheduling of a fixed task set: priority-rule scheduler, exact
enumeration for small instances, and the preemptive single-processor bound.

The scheduler dispatches one task per decision: the decision time is the
earliest processor-free time, the task is chosen by the dominance/strength
reduction of the priority rule, and it starts at the later of the decision
time and its release. The exact optimum (small n only) enumerates task orders
under earliest-free dispatch with sound pruning, and the lower bound relaxes
non-preemption: shortest-remaining-processing-time order for the flow part,
with the sorted due dates paired to completion positions for the tardiness
part.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .priority import dominance_from_arrays, select_position
from .tasks import CostWeights, ScheduleEntry, UNIT_WEIGHTS, total_cost

BRUTE_FORCE_MAX_TASKS = 9
BRUTE_FORCE_MAX_PROCESSORS = 2


class TooLarge(ValueError):
    """Instance exceeds the exhaustive-enumeration guard."""


class Unsupported(ValueError):
    """Requested bound is only defined for q = 1 with unit weights."""


@dataclass(frozen=True)
class OfflineInstance:
    """A precedence-free set of tasks to place on q identical processors."""

    tasks: tuple
    q: int = 1
    weights: CostWeights = UNIT_WEIGHTS

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        object.__setattr__(self, "tasks", tuple(self.tasks))


def _earliest_free(free) -> int:
    """Index of the earliest-free processor, smallest index on ties."""
    best = 0
    for j in range(1, len(free)):
        if free[j] < free[best]:
            best = j
    return best


def schedule_ftr(instance: OfflineInstance) -> list[ScheduleEntry]:
    """Schedule every task with the priority rule; returns a valid schedule.

    Candidates are kept sorted by global index so the result is invariant
    under permutations of the input list.
    """
    tasks = sorted(instance.tasks, key=lambda task: task.index)
    if not tasks:
        return []
    r = np.array([task.r for task in tasks])
    p = np.array([task.p for task in tasks])
    d = np.array([task.d for task in tasks])
    ids = np.array([task.index for task in tasks], dtype=np.int64)

    free = [0.0] * instance.q
    alive = np.arange(len(tasks))
    entries: list[ScheduleEntry] = []
    while alive.size:
        j = _earliest_free(free)
        t = free[j]
        state = dominance_from_arrays(r[alive], p[alive], d[alive], ids[alive], t, instance.weights)
        pos = select_position(state)
        task = tasks[alive[pos]]
        start = max(t, task.r)
        completion = start + task.p
        entries.append(ScheduleEntry(task, j, start, completion))
        free[j] = completion
        alive = np.delete(alive, pos)
    return entries


def brute_force_optimal(instance: OfflineInstance) -> tuple[list[ScheduleEntry], float]:
    """Exact minimum-cost schedule by exhaustive search over task orders.

    Orders are dispatched to the earliest-free processor (which loses no
    optimal schedule on identical processors) and explored depth-first in
    index order, so among equal-cost optima the lexicographically first
    sequence is returned. Pruning is sound: partial costs only grow, and a
    state with elementwise-later free times and higher cost than a visited
    state for the same task subset cannot do better.
    """
    tasks = sorted(instance.tasks, key=lambda task: task.index)
    n = len(tasks)
    if n > BRUTE_FORCE_MAX_TASKS or instance.q > BRUTE_FORCE_MAX_PROCESSORS:
        raise TooLarge(
            f"exhaustive search limited to n <= {BRUTE_FORCE_MAX_TASKS}, "
            f"q <= {BRUTE_FORCE_MAX_PROCESSORS}; got n={n}, q={instance.q}"
        )
    if n == 0:
        return [], 0.0
    w = instance.weights
    full = (1 << n) - 1
    best_cost = math.inf
    best_entries: Optional[list[ScheduleEntry]] = None
    visited: dict[int, list[tuple[tuple, float]]] = {}

    def dfs(mask: int, free: list[float], cost: float, seq: list[ScheduleEntry]):
        nonlocal best_cost, best_entries
        if mask == full:
            if cost < best_cost:
                best_cost = cost
                best_entries = list(seq)
            return
        if cost >= best_cost:
            return
        key = tuple(sorted(free))
        pareto = visited.setdefault(mask, [])
        for fk, c in pareto:
            if c <= cost and all(a <= b for a, b in zip(fk, key)):
                return
        pareto[:] = [
            (fk, c) for fk, c in pareto if not (cost <= c and all(a <= b for a, b in zip(key, fk)))
        ]
        pareto.append((key, cost))
        for i in range(n):
            if mask & (1 << i):
                continue
            task = tasks[i]
            j = _earliest_free(free)
            start = max(free[j], task.r)
            completion = start + task.p
            added = w.flow * (completion - task.r) + w.tardy * max(0.0, completion - task.d)
            saved = free[j]
            free[j] = completion
            seq.append(ScheduleEntry(task, j, start, completion))
            dfs(mask | (1 << i), free, cost + added, seq)
            seq.pop()
            free[j] = saved

    dfs(0, [0.0] * instance.q, 0.0, [])
    assert best_entries is not None
    return best_entries, best_cost


def lower_bound(instance: OfflineInstance) -> float:
    """Preemptive lower bound on the single-processor flow-time + tardiness.

    Runs shortest-remaining-processing-time preemptive scheduling over release
    and completion events, then adds flow times against each task's own
    release and tardiness against the sorted due dates paired with completion
    positions (the i-th completed task is charged against the i-th smallest
    due date). Valid only for q = 1 with unit weights.
    """
    if instance.q != 1:
        raise Unsupported(f"lower bound is defined for q = 1, got q = {instance.q}")
    if instance.weights != UNIT_WEIGHTS:
        raise Unsupported("lower bound is defined for unit weights only")
    tasks = sorted(instance.tasks, key=lambda task: (task.r, task.index))
    n = len(tasks)
    if n == 0:
        return 0.0

    released: list[tuple[float, int]] = []  # (remaining, position)
    completions: list[tuple[float, int]] = []  # (completion, position)
    t = 0.0
    i = 0
    while len(completions) < n:
        if not released:
            t = max(t, tasks[i].r)
        while i < n and tasks[i].r <= t:
            heapq.heappush(released, (tasks[i].p, i))
            i += 1
        rem, pos = heapq.heappop(released)
        next_release = tasks[i].r if i < n else math.inf
        if t + rem <= next_release:
            t += rem
            completions.append((t, pos))
        else:
            heapq.heappush(released, (rem - (next_release - t), pos))
            t = next_release

    flow = sum(c - tasks[pos].r for c, pos in completions)
    due_sorted = sorted(task.d for task in tasks)
    tardy = sum(max(c - dd, 0.0) for (c, _), dd in zip(completions, due_sorted))
    return flow + tardy


@dataclass(frozen=True)
class GapReport:
    """Cost of the rule schedule against the available reference values."""

    ftr_cost: float
    lower_bound: Optional[float] = None
    optimal_cost: Optional[float] = None

    @property
    def gap_to_lower_bound(self) -> Optional[float]:
        return None if self.lower_bound is None else self.ftr_cost - self.lower_bound

    @property
    def gap_to_optimal(self) -> Optional[float]:
        return None if self.optimal_cost is None else self.ftr_cost - self.optimal_cost


def gap_report(instance: OfflineInstance) -> GapReport:
    """Schedule with the rule and compare to the bound and, when small enough,
    the exact optimum."""
    ftr_cost = total_cost(schedule_ftr(instance), instance.weights)
    lb = None
    if instance.q == 1 and instance.weights == UNIT_WEIGHTS:
        lb = lower_bound(instance)
    opt = None
    if len(instance.tasks) <= BRUTE_FORCE_MAX_TASKS and instance.q <= BRUTE_FORCE_MAX_PROCESSORS:
        _, opt = brute_force_optimal(instance)
    return GapReport(ftr_cost=ftr_cost, lower_bound=lb, optimal_cost=opt)
