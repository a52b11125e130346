"""Pairwise flow-time/tardiness priority rule, dominance matrix, and strength.

For a pair of tasks {i, j} considered at decision time t, the priority value

    ftr(i, j, t) = w_flow * max(prtf(i, t), q1(i, j, t))
                 + w_tardy * max(prtt(i, t), q2(i, j, t))

is such that scheduling i immediately before j costs no more than the reverse
exactly when ftr(i, j, t) <= ftr(j, i, t). That equivalence is checkable
independently: `pairwise_cost_delta` builds both two-task schedules explicitly
and returns the signed cost difference, which equals the difference of the two
priority values.

`build_dominance` evaluates the relation for every ordered pair of a candidate
set, producing the 0/1 dominance matrix and the strength vector (row sums);
`select_task` then applies the max-strength reduction loop used by both the
offline scheduler and the real-time dispatcher. Pair values depend only on the
two tasks and t, never on the rest of the set, so restricting dominance to a
subset is a plain slice of the full matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tasks import CostWeights, MaintTask, UNIT_WEIGHTS

# Priority ties below this relative tolerance fall back to the index tie-break;
# exact float equality would be fragile for continuous dates.
TIE_RTOL = 1e-12


def prtf(task: MaintTask, t: float) -> float:
    """Flow-time priority term: 2*max(r, t) + p."""
    return 2.0 * max(task.r, t) + task.p


def prtt(task: MaintTask, t: float) -> float:
    """Tardiness priority term: max(r, t) + max(max(r, t) + p, d)."""
    rt = max(task.r, t)
    return rt + max(rt + task.p, task.d)


def q1(task_i: MaintTask, task_j: MaintTask, t: float) -> float:
    """Symmetric pair term max(r_i, t) + max(r_j, t)."""
    return max(task_i.r, t) + max(task_j.r, t)


def q2(task_i: MaintTask, task_j: MaintTask, t: float) -> float:
    """Symmetric pair term max(max(r_i, t), d_i - p_i) + max(max(r_j, t), d_j - p_j)."""
    return max(max(task_i.r, t), task_i.d - task_i.p) + max(
        max(task_j.r, t), task_j.d - task_j.p
    )


def ftr(task_i: MaintTask, task_j: MaintTask, t: float, weights: CostWeights = UNIT_WEIGHTS) -> float:
    """Priority value of i against j at time t (smaller wins)."""
    return weights.flow * max(prtf(task_i, t), q1(task_i, task_j, t)) + weights.tardy * max(
        prtt(task_i, t), q2(task_i, task_j, t)
    )


def dominates(
    task_i: MaintTask, task_j: MaintTask, t: float, weights: CostWeights = UNIT_WEIGHTS
) -> bool:
    """True when scheduling i directly before j costs no more than the reverse.

    Equal priority values (within TIE_RTOL of the larger magnitude) are broken
    by the smaller global index, making the relation a strict total comparison
    at fixed t.
    """
    f_ij = ftr(task_i, task_j, t, weights)
    f_ji = ftr(task_j, task_i, t, weights)
    tol = TIE_RTOL * max(abs(f_ij), abs(f_ji))
    if abs(f_ij - f_ji) <= tol:
        return task_i.index < task_j.index
    return f_ij < f_ji


def pairwise_cost_delta(
    task_i: MaintTask, task_j: MaintTask, t: float, weights: CostWeights = UNIT_WEIGHTS
) -> float:
    """Signed cost difference of the two appended orders, C_ij - C_ji.

    Builds both two-task schedules explicitly (first task starts at
    max(r, t), the second at the first's completion or its own release) and
    sums weighted flow plus tardiness. Serves as the independent oracle for
    `dominates`: the sign always matches ftr(i,j,t) - ftr(j,i,t).
    """

    def appended(a: MaintTask, b: MaintTask) -> float:
        c_a = max(a.r, t) + a.p
        c_b = max(c_a, max(b.r, t)) + b.p
        flow = (c_a - a.r) + (c_b - b.r)
        tardy = max(c_a - a.d, 0.0) + max(c_b - b.d, 0.0)
        return weights.flow * flow + weights.tardy * tardy

    return appended(task_i, task_j) - appended(task_j, task_i)


@dataclass(frozen=True)
class DominanceState:
    """Dominance matrix and strengths over a candidate set at decision time t."""

    task_ids: np.ndarray  # global indices, in candidate order
    omega: np.ndarray  # 0/1, omega[i, j] = 1 iff candidate i dominates candidate j
    strength: np.ndarray  # row sums of omega
    t: float


def ftr_matrix(r, p, d, t: float, weights: CostWeights = UNIT_WEIGHTS) -> np.ndarray:
    """Matrix F with F[i, j] = ftr(task_i, task_j, t) over candidate arrays.

    Vectorized but elementwise identical to the scalar `ftr` (same operations
    in the same order), so the two paths agree bit for bit.
    """
    r = np.asarray(r, dtype=float)
    p = np.asarray(p, dtype=float)
    d = np.asarray(d, dtype=float)
    rt = np.maximum(r, t)
    prtf_v = 2.0 * rt + p
    prtt_v = rt + np.maximum(rt + p, d)
    slack = np.maximum(rt, d - p)
    q1_m = rt[:, None] + rt[None, :]
    q2_m = slack[:, None] + slack[None, :]
    return weights.flow * np.maximum(prtf_v[:, None], q1_m) + weights.tardy * np.maximum(
        prtt_v[:, None], q2_m
    )


def dominance_from_arrays(
    r, p, d, ids, t: float, weights: CostWeights = UNIT_WEIGHTS
) -> DominanceState:
    """Build the dominance matrix and strengths from candidate field arrays."""
    ids = np.asarray(ids, dtype=np.int64)
    f = ftr_matrix(r, p, d, t, weights)
    ft = f.T
    diff = f - ft
    tol = TIE_RTOL * np.maximum(np.abs(f), np.abs(ft))
    tie = np.abs(diff) <= tol
    omega = (diff < -tol) | (tie & (ids[:, None] < ids[None, :]))
    np.fill_diagonal(omega, False)
    omega = omega.astype(np.int8)
    return DominanceState(task_ids=ids, omega=omega, strength=omega.sum(axis=1), t=t)


def build_dominance(tasks, t: float, weights: CostWeights = UNIT_WEIGHTS) -> DominanceState:
    """Dominance state over a nonempty candidate set of tasks."""
    tasks = list(tasks)
    if not tasks:
        raise ValueError("candidate set must be nonempty")
    r = np.array([task.r for task in tasks])
    p = np.array([task.p for task in tasks])
    d = np.array([task.d for task in tasks])
    ids = np.array([task.index for task in tasks], dtype=np.int64)
    return dominance_from_arrays(r, p, d, ids, t, weights)


def select_position(state: DominanceState) -> int:
    """Position of the winning candidate by the max-strength reduction loop.

    Repeatedly keeps the max-strength subset, recomputing strengths within the
    kept subset (a slice of omega, since pair values are set-independent).
    If an iteration fails to shrink the subset (uniform strengths, e.g. a
    dominance cycle), the smallest global index wins.
    """
    omega = state.omega
    ids = state.task_ids
    positions = np.arange(len(ids))
    while True:
        sub = omega[np.ix_(positions, positions)]
        strengths = sub.sum(axis=1)
        keep = positions[strengths == strengths.max()]
        if len(keep) == 1:
            return int(keep[0])
        if len(keep) == len(positions):
            return int(keep[np.argmin(ids[keep])])
        positions = keep


def select_task(tasks, t: float, weights: CostWeights = UNIT_WEIGHTS) -> int:
    """Index into ``tasks`` of the task to schedule at decision time t."""
    return select_position(build_dominance(tasks, t, weights))
