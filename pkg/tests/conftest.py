import numpy as np
import pytest

from pmsched import MaintTask


def make_task(index, r, p, d):
    return MaintTask(index=index, r=float(r), p=float(p), d=float(d))


def random_tasks(rng, n, r_span=100.0, p_lo=0.5, p_hi=8.0, slack_hi=20.0):
    """Random precedence-free tasks with d >= r + something sensible."""
    tasks = []
    for i in range(n):
        r = rng.uniform(0.0, r_span)
        p = rng.uniform(p_lo, p_hi)
        d = r + rng.uniform(0.0, p + slack_hi)
        # MaintTask requires d > r
        tasks.append(MaintTask(index=i, r=r, p=p, d=max(d, r + 1e-6)))
    return tasks


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
