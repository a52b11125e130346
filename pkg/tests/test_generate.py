"""Population generator: determinism, parameter rules, sweep sizing."""

import pytest

from pmsched import GenConfig, exp_availability, generate_machine, generate_machines, machine_rng
from pmsched.generate import generate_system, sweep_q_values


class TestGenerateMachine:
    def test_fixed_seed_reproduces_machine(self):
        config = GenConfig(seed=42)
        a = generate_machine(config, machine_rng(42, 7), machine_id=7)
        b = generate_machine(config, machine_rng(42, 7), machine_id=7)
        assert a == b

    def test_deadline_interval_rule(self):
        config = GenConfig(seed=3)
        for i in range(50):
            m = generate_machine(config, machine_rng(3, i), machine_id=i)
            epsilon = (m.tau2 - m.tau1 - m.mtp) / m.mtp
            assert 0.25 <= epsilon <= 0.5
            assert m.tau2 > m.tau1 + m.mtp

    def test_threshold_above_asymptote(self):
        config = GenConfig(seed=5)
        for i in range(50):
            m = generate_machine(config, machine_rng(5, i), machine_id=i)
            a_inf = m.reliability.asymptotic_availability
            assert m.thresholds.alpha1 > a_inf
            # tau1 consistent with the threshold inversion
            assert exp_availability(m.reliability, m.tau1) == pytest.approx(
                m.thresholds.alpha1, abs=1e-9
            )

    def test_processing_time_is_inverse_repair_rate(self):
        config = GenConfig(seed=11)
        for i in range(20):
            m = generate_machine(config, machine_rng(11, i), machine_id=i)
            assert m.mtp == pytest.approx(1.0 / m.reliability.mu, abs=1e-15)


class TestSweep:
    def test_paper_scale_fraction_endpoints(self):
        config = GenConfig(machine_count=500, processor_fractions=(0.02, 0.20))
        assert sweep_q_values(config) == [10, 100]

    def test_small_scale_rounding(self):
        config = GenConfig(machine_count=50, processor_fractions=(0.04,))
        assert sweep_q_values(config) == [2]

    def test_minimum_one_processor(self):
        config = GenConfig(machine_count=10, processor_fractions=(0.02,))
        assert sweep_q_values(config) == [1]

    def test_population_shared_across_sweep(self):
        config = GenConfig(machine_count=20, seed=9)
        machines, qs = generate_system(config)
        machines2, _ = generate_system(config)
        assert machines == machines2
        assert len(qs) == len(config.processor_fractions)


class TestConfigValidation:
    def test_rejects_bad_fraction(self):
        with pytest.raises(ValueError):
            GenConfig(processor_fractions=(0.0,))

    def test_rejects_bad_band(self):
        with pytest.raises(ValueError):
            GenConfig(alpha1_band=(0.0, 0.1))
        with pytest.raises(ValueError):
            GenConfig(alpha1_band=(0.5, 1.5))

    def test_stream_independence_of_order(self):
        # machine i's draw does not depend on whether machines < i were drawn
        config = GenConfig(seed=13, machine_count=5)
        population = generate_machines(config)
        solo = generate_machine(config, machine_rng(13, 3), machine_id=3)
        assert population[3] == solo
