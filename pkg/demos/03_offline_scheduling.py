"""Offline scheduling of a fixed task set, with quality references.

The rule-based scheduler repeatedly picks the strongest task (most pairwise
wins) whenever a processor frees up. On small instances we can afford two
reference points: the exact optimum by exhaustive search, and a lower bound
that relaxes non-preemption (shortest-remaining-time order plus re-paired due
dates). The rule typically lands on or near the optimum.
"""

import numpy as np

from pmsched import (
    MaintTask,
    OfflineInstance,
    brute_force_optimal,
    gap_report,
    lower_bound,
    schedule_ftr,
    total_cost,
)

rng = np.random.default_rng(12)
tasks = []
for k in range(7):
    r = rng.uniform(0.0, 12.0)
    p = rng.uniform(1.0, 4.0)
    tasks.append(MaintTask(index=k, r=r, p=p, d=r + p + rng.uniform(0.0, 6.0)))

instance = OfflineInstance(tasks=tasks, q=1)

print("instance (single processor):")
for t in tasks:
    print(f"  task {t.index}: r = {t.r:5.2f}  p = {t.p:4.2f}  d = {t.d:5.2f}")

entries = schedule_ftr(instance)
print("\nrule schedule:")
for e in entries:
    tardy = max(0.0, e.completion - e.task.d)
    print(
        f"  task {e.task.index}: start {e.start:6.2f}  complete {e.completion:6.2f}"
        f"  flow {e.completion - e.task.r:5.2f}  tardy {tardy:5.2f}"
    )
print(f"rule cost: {total_cost(entries):.3f}")

_, opt_cost = brute_force_optimal(instance)
lb = lower_bound(instance)
print(f"exact optimum (exhaustive): {opt_cost:.3f}")
print(f"preemptive lower bound:     {lb:.3f}")

report = gap_report(instance)
print(
    f"\ngap report: rule {report.ftr_cost:.3f} | optimal {report.optimal_cost:.3f} "
    f"| bound {report.lower_bound:.3f} | rule - opt = {report.gap_to_optimal:.3f}"
)

print("\nsame tasks on two processors:")
instance2 = OfflineInstance(tasks=tasks, q=2)
entries2 = schedule_ftr(instance2)
for e in entries2:
    print(f"  task {e.task.index} -> processor {e.processor}: {e.start:6.2f} .. {e.completion:6.2f}")
print(f"two-processor rule cost: {total_cost(entries2):.3f}")
