"""Priority rule, dominance matrix, strength, and the pairwise cost oracle."""

import numpy as np
import pytest

from pmsched import (
    CostWeights,
    build_dominance,
    dominates,
    ftr,
    pairwise_cost_delta,
    prtf,
    prtt,
    q1,
    q2,
)
from pmsched.priority import dominance_from_arrays, ftr_matrix, select_position
from conftest import make_task, random_tasks

I = make_task(0, r=0, p=2, d=5)
J = make_task(1, r=1, p=3, d=4)


class TestPriorityTerms:
    def test_prtf_values(self):
        assert prtf(make_task(0, 0, 2, 5), 0.0) == 2.0
        assert prtf(make_task(0, 1, 3, 4), 0.0) == 5.0
        assert prtf(make_task(0, 1, 3, 4), 4.0) == 11.0

    def test_prtt_values(self):
        assert prtt(make_task(0, 0, 2, 5), 0.0) == 5.0
        assert prtt(make_task(0, 1, 3, 4), 0.0) == 5.0
        assert prtt(make_task(0, 1, 3, 4), 6.0) == 15.0

    def test_q1_q2_values_and_symmetry(self, rng):
        assert q1(I, J, 0.0) == 1.0
        assert q2(I, J, 0.0) == 4.0
        for _ in range(100):
            a, b = random_tasks(rng, 2)
            t = rng.uniform(0.0, 120.0)
            assert q1(a, b, t) == q1(b, a, t)
            assert q2(a, b, t) == q2(b, a, t)


class TestFtr:
    def test_worked_pair(self):
        assert ftr(I, J, 0.0) == 7.0
        assert ftr(J, I, 0.0) == 10.0

    def test_identical_tasks_symmetric(self):
        a = make_task(0, 3, 2, 8)
        b = make_task(1, 3, 2, 8)
        assert ftr(a, b, 1.0) == ftr(b, a, 1.0)

    def test_zero_tardy_weight_reduces_to_flow_term(self, rng):
        w = CostWeights(2.0, 0.0)
        for _ in range(50):
            a, b = random_tasks(rng, 2)
            t = rng.uniform(0.0, 120.0)
            assert ftr(a, b, t, w) == 2.0 * max(prtf(a, t), q1(a, b, t))

    def test_unchanged_when_t_before_both_releases(self, rng):
        for _ in range(100):
            a, b = random_tasks(rng, 2)
            t0 = min(a.r, b.r)
            t1 = rng.uniform(0.0, t0) if t0 > 0 else 0.0
            assert ftr(a, b, t0, CostWeights(1, 2)) == ftr(a, b, t1, CostWeights(1, 2))


class TestDominates:
    def test_worked_pair_and_reverse(self):
        assert dominates(I, J, 0.0) is True
        assert dominates(J, I, 0.0) is False

    def test_tie_broken_by_index(self):
        a = make_task(0, 3, 2, 8)
        b = make_task(1, 3, 2, 8)
        assert dominates(a, b, 0.0) is True
        assert dominates(b, a, 0.0) is False

    def test_sign_agrees_with_cost_oracle(self):
        assert pairwise_cost_delta(I, J, 0.0) == -3.0
        assert dominates(I, J, 0.0) == (pairwise_cost_delta(I, J, 0.0) <= 0.0)


class TestPairwiseCostDelta:
    def test_identical_tasks_zero(self):
        a = make_task(0, 3, 2, 8)
        b = make_task(1, 3, 2, 8)
        assert pairwise_cost_delta(a, b, 0.0) == 0.0

    def test_identity_with_priority_difference(self, rng):
        # the local-optimality identity: cost difference equals priority difference
        weight_choices = [CostWeights(1, 1), CostWeights(2, 1), CostWeights(1, 3)]
        for _ in range(10000):
            a, b = random_tasks(rng, 2)
            t = rng.uniform(0.0, 150.0)
            w = weight_choices[int(rng.integers(0, 3))]
            lhs = pairwise_cost_delta(a, b, t, w)
            rhs = ftr(a, b, t, w) - ftr(b, a, t, w)
            assert lhs == pytest.approx(rhs, abs=1e-9)


class TestDominance:
    def test_single_task(self):
        state = build_dominance([I], 0.0)
        assert state.omega.tolist() == [[0]]
        assert state.strength.tolist() == [0]

    def test_worked_pair_strengths(self):
        state = build_dominance([I, J], 0.0)
        assert state.strength.tolist() == [1, 0]

    def test_antisymmetry_and_strength_sum(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 12))
            tasks = random_tasks(rng, n)
            t = rng.uniform(0.0, 120.0)
            state = build_dominance(tasks, t)
            omega = state.omega
            assert np.all(np.diag(omega) == 0)
            off = omega + omega.T
            assert np.all(off[~np.eye(n, dtype=bool)] == 1)
            assert state.strength.sum() == n * (n - 1) // 2
            assert np.array_equal(state.strength, omega.sum(axis=1))

    def test_matrix_matches_scalar_exactly(self, rng):
        for _ in range(10):
            n = int(rng.integers(2, 9))
            tasks = random_tasks(rng, n)
            t = rng.uniform(0.0, 120.0)
            w = CostWeights(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0))
            f = ftr_matrix(
                [x.r for x in tasks], [x.p for x in tasks], [x.d for x in tasks], t, w
            )
            state = build_dominance(tasks, t, w)
            for i, a in enumerate(tasks):
                for j, b in enumerate(tasks):
                    assert f[i, j] == ftr(a, b, t, w)
                    if i != j:
                        assert bool(state.omega[i, j]) == dominates(a, b, t, w)

    def test_subset_slice_equals_rebuild(self, rng):
        # pair values are set-independent, so restricting the matrix to a
        # subset must equal building it from that subset directly
        tasks = random_tasks(rng, 10)
        t = 30.0
        full = build_dominance(tasks, t)
        keep = [0, 2, 3, 7, 9]
        rebuilt = build_dominance([tasks[k] for k in keep], t)
        assert np.array_equal(full.omega[np.ix_(keep, keep)], rebuilt.omega)

    def test_same_machine_chain_order_respected(self, rng):
        # equal p, r1 <= r2, d1 <= d2 implies task 1 wins at any decision time
        for _ in range(300):
            p = rng.uniform(0.5, 5.0)
            r1 = rng.uniform(0.0, 50.0)
            r2 = r1 + rng.uniform(0.0, 30.0)
            d1 = r1 + rng.uniform(0.1, 20.0)
            d2 = max(d1, r2 + 0.1) + rng.uniform(0.0, 30.0)
            early = make_task(0, r1, p, d1)
            late = make_task(1, r2, p, d2)
            t = rng.uniform(0.0, 80.0)
            assert dominates(early, late, t)


class TestSelection:
    def test_max_strength_reduction_picks_dominant(self):
        state = build_dominance([I, J], 0.0)
        assert select_position(state) == 0

    def test_identical_tasks_select_smallest_id(self):
        state = dominance_from_arrays(
            [3.0, 3.0, 3.0], [2.0, 2.0, 2.0], [8.0, 8.0, 8.0], [5, 1, 3], 0.0
        )
        assert state.task_ids[select_position(state)] == 1

    def test_dominance_cycle_triggers_no_shrink_guard(self):
        # a beats b, b beats c, c beats a: strengths are uniform, the subset
        # cannot shrink, and the smallest global index must win
        a = make_task(0, 8.633071488715213, 2.0266609146351158, 27.248291578247002)
        b = make_task(1, 15.856248382094607, 1.737214211057863, 18.81611898389424)
        c = make_task(2, 4.271335526791224, 3.8409461473488475, 10.529482985547407)
        t = 15.320421628246264
        assert dominates(a, b, t) and dominates(b, c, t) and dominates(c, a, t)
        state = build_dominance([a, b, c], t)
        assert state.strength.tolist() == [1, 1, 1]
        assert select_position(state) == 0
