"""Random machine populations and processor-count sweeps, reproducibly.

Rates are drawn from truncated normal laws, the first availability threshold
uniformly from a narrow band just above the asymptotic availability, and the
deadline interval directly as tau2 = tau1 + mtp + epsilon * mtp with epsilon
uniform. The threshold band is parameterized by relative position between the
asymptote and 1: with s uniform on [band_lo, band_hi],

    alpha1 = a_inf + s * (1 - a_inf)   and   tau1 = -ln(s) / (lam + mu),

so the band pins the ratio tau1/mtp = -ln(s) * a_inf. The default band
[1e-6, 1e-4] puts tau1 around 9-14 processing times, which is what lets a
processor pool sized at a few percent of the machine count absorb the whole
task stream on a year horizon.

Reproducibility: every machine draws from its own PCG64 stream seeded with
SeedSequence((seed, machine_index)), so populations are identical across
platforms and machines can be generated in any order or in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .reliability import ExponentialModel, Thresholds, exp_availability, exp_threshold_duration
from .tasks import Machine

_RATE_FLOOR = 1e-6


@dataclass(frozen=True)
class GenConfig:
    """Parameters of the population generator and the processor sweep."""

    machine_count: int = 500
    horizon: float = 365.0
    lambda_law: tuple = (0.004, 0.001)  # (mean, std) per day, truncated > 0
    mu_law: tuple = (0.5, 0.2)  # (mean, std) per day, truncated > 0
    epsilon_range: tuple = (0.25, 0.5)
    alpha1_band: tuple = (1e-6, 1e-4)  # relative position of alpha1 above the asymptote
    processor_fractions: tuple = (0.02, 0.04, 0.06, 0.08, 0.10, 0.12, 0.14, 0.16, 0.18, 0.20)
    seed: int = 0

    def __post_init__(self):
        if self.machine_count < 1:
            raise ValueError(f"machine_count must be >= 1, got {self.machine_count}")
        if self.horizon <= 0.0:
            raise ValueError(f"horizon must be > 0, got {self.horizon}")
        lo, hi = self.epsilon_range
        if not (0.0 < lo <= hi):
            raise ValueError(f"epsilon_range must satisfy 0 < lo <= hi, got {self.epsilon_range}")
        lo, hi = self.alpha1_band
        if not (0.0 < lo <= hi < 1.0):
            raise ValueError(f"alpha1_band must lie inside (0, 1), got {self.alpha1_band}")
        for f in self.processor_fractions:
            if not (0.0 < f <= 1.0):
                raise ValueError(f"processor fractions must lie in (0, 1], got {f}")


def machine_rng(seed: int, index: int) -> np.random.Generator:
    """The dedicated random stream of machine ``index`` for ``seed``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, index))))


def _truncated_normal(rng: np.random.Generator, mean: float, std: float) -> float:
    """Normal draw resampled until it clears the positivity floor."""
    value = rng.normal(mean, std)
    while value <= _RATE_FLOOR:
        value = rng.normal(mean, std)
    return value


def generate_machine(
    config: GenConfig, rng: np.random.Generator, machine_id: int = 0, site: int = 1
) -> Machine:
    """Draw one machine. Draw order is fixed: lambda, mu, alpha1, epsilon."""
    lam = _truncated_normal(rng, *config.lambda_law)
    mu = _truncated_normal(rng, *config.mu_law)
    model = ExponentialModel(lam=lam, mu=mu)
    a_inf = model.asymptotic_availability
    s = rng.uniform(*config.alpha1_band)
    alpha1 = a_inf + s * (1.0 - a_inf)
    tau1 = exp_threshold_duration(model, alpha1)
    mtp = 1.0 / mu
    epsilon = rng.uniform(*config.epsilon_range)
    tau2 = tau1 + mtp + epsilon * mtp
    alpha2 = exp_availability(model, tau2)
    return Machine(
        id=machine_id,
        reliability=model,
        tau1=tau1,
        tau2=tau2,
        mtp=mtp,
        site=site,
        thresholds=Thresholds(alpha1=alpha1, alpha2=alpha2),
    )


def generate_machines(config: GenConfig) -> list[Machine]:
    """The full population for ``config.seed``, one stream per machine index."""
    return [
        generate_machine(config, machine_rng(config.seed, i), machine_id=i)
        for i in range(config.machine_count)
    ]


def sweep_q_values(config: GenConfig) -> list[int]:
    """Processor counts for the fraction sweep: max(1, round-half-up)."""
    return [
        max(1, int(np.floor(f * config.machine_count + 0.5)))
        for f in config.processor_fractions
    ]


def generate_system(config: GenConfig) -> tuple[list[Machine], list[int]]:
    """One machine population plus the processor counts of the sweep.

    The same population is reused for every processor count so sweep rows are
    paired comparisons.
    """
    return generate_machines(config), sweep_q_values(config)
