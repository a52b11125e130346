"""Machine availability models and threshold inversion.

Two renewal-based availability laws are supported:

* a constant failure/repair rate law whose availability after a renewal
  decays exponentially toward the asymptote ``mu / (lam + mu)``, and
* a Weibull wear-out law with constant repair rate, whose availability
  involves an integral with no closed form.

Both laws are strictly decreasing after a renewal (Weibull requires shape
``beta >= 1``), so an availability threshold ``alpha`` maps to a unique
inter-maintenance duration ``tau`` with ``A(tau) == alpha``. Inverting the
first threshold gives the time until the next preventive task is due for
release; inverting a second, lower threshold gives its deadline.

All durations are in days.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class ThresholdUnreachable(ValueError):
    """The availability curve never drops to the requested threshold."""


class NonMonotone(ValueError):
    """Availability is not guaranteed monotone (Weibull shape < 1); inversion refused."""


@dataclass(frozen=True)
class ExponentialModel:
    """Constant failure rate ``lam`` and repair rate ``mu``, both per day."""

    lam: float
    mu: float

    def __post_init__(self):
        if not (self.lam > 0.0 and self.mu > 0.0):
            raise ValueError(f"rates must be positive, got lam={self.lam}, mu={self.mu}")

    @property
    def asymptotic_availability(self) -> float:
        return self.mu / (self.lam + self.mu)


@dataclass(frozen=True)
class WeibullModel:
    """Weibull wear-out with time origin ``gamma``, scale ``sigma``, shape ``beta``,
    and a constant repair rate ``mu`` (per day)."""

    gamma: float
    sigma: float
    beta: float
    mu: float

    def __post_init__(self):
        if self.gamma < 0.0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma}")
        if not self.sigma > 0.0:
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if not self.beta >= 1.0:
            # beta < 1 availability need not be monotone; constructing the model
            # is allowed for evaluation, inversion will refuse. Still reject
            # nonsensical values.
            if not self.beta > 0.0:
                raise ValueError(f"beta must be > 0, got {self.beta}")
        if not self.mu > 0.0:
            raise ValueError(f"mu must be > 0, got {self.mu}")


@dataclass(frozen=True)
class Thresholds:
    """Pair of availability thresholds, ``0 < alpha2 < alpha1 < 1``.

    Crossing ``alpha1`` releases the next preventive task; crossing the lower
    ``alpha2`` marks its deadline.
    """

    alpha1: float
    alpha2: float

    def __post_init__(self):
        if not (0.0 < self.alpha2 < self.alpha1 < 1.0):
            raise ValueError(
                f"need 0 < alpha2 < alpha1 < 1, got alpha1={self.alpha1}, alpha2={self.alpha2}"
            )


def exp_availability(model: ExponentialModel, elapsed: float) -> float:
    """Availability ``elapsed`` days after a renewal under the constant-rate law."""
    if elapsed < 0.0:
        raise ValueError(f"elapsed must be >= 0, got {elapsed}")
    a_inf = model.asymptotic_availability
    return a_inf + (1.0 - a_inf) * math.exp(-(model.lam + model.mu) * elapsed)


def exp_threshold_duration(model: ExponentialModel, alpha: float) -> float:
    """Duration after a renewal at which availability first reaches ``alpha``.

    Computed from the relative position ``s = (alpha - A_inf) / (1 - A_inf)``,
    which equals the log argument of the closed-form inversion but avoids the
    catastrophic cancellation of evaluating ``alpha*(1 + mu/lam) - mu/lam``
    when ``mu >> lam``. Raises :class:`ThresholdUnreachable` when ``alpha``
    lies at or below the asymptote.
    """
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if alpha == 1.0:
        return 0.0
    a_inf = model.asymptotic_availability
    s = (alpha - a_inf) / (1.0 - a_inf)
    if s <= 0.0:
        raise ThresholdUnreachable(
            f"alpha={alpha} is at or below the asymptotic availability {a_inf:.9f}"
        )
    return -math.log(s) / (model.lam + model.mu)


# -- Weibull availability ----------------------------------------------------
#
# With u = (t - gamma) / sigma and h(x) = mu*sigma*x + x**beta, availability is
#
#     A(t) = exp(-h(u)) * (1 + mu*sigma * I(u)),   I(u) = int_0^u exp(h(x)) dx.
#
# exp(h(x)) overflows for moderate u, so every evaluation folds the leading
# factor into the integrand:
#
#     A(t) = exp(-h(u)) + mu*sigma * int_0^u exp(h(x) - h(u)) dx
#
# whose integrand lies in (0, 1] because h is increasing.

_QUAD_RTOL = 1e-10
_MAX_DEPTH = 80
# Horizon cap for limit estimation and bracket expansion, in units of sigma.
# Beyond it the integrand boundary layer is thinner than float spacing.
_HORIZON_CAP = 1e6


def _h(model: WeibullModel, x: float) -> float:
    return model.mu * model.sigma * x + x**model.beta


def _adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
        return left + right + (left + right - whole) / 15.0
    return _adaptive_simpson(
        f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1
    ) + _adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)


def _quad(f, a, b, rtol=_QUAD_RTOL):
    """Adaptive Simpson quadrature of ``f`` over ``[a, b]`` to relative tolerance.

    Two passes: the first estimates the integral magnitude, the second re-runs
    with the tolerance anchored to that estimate. Needed because the integrands
    here concentrate in a thin layer at ``b`` and a 3-point seed badly
    overestimates the scale.
    """
    if b <= a:
        return 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    est = _adaptive_simpson(f, a, b, fa, fm, fb, whole, rtol * max(abs(whole), 1e-300), _MAX_DEPTH)
    return _adaptive_simpson(f, a, b, fa, fm, fb, whole, rtol * max(abs(est), 1e-300), _MAX_DEPTH)


def weibull_availability(model: WeibullModel, t: float) -> float:
    """Availability at absolute time ``t >= gamma`` (renewal at ``gamma``)."""
    if t < model.gamma:
        raise ValueError(f"t={t} is before the time origin gamma={model.gamma}")
    u = (t - model.gamma) / model.sigma
    if u == 0.0:
        return 1.0
    hu = _h(model, u)

    def shifted(x: float) -> float:
        return math.exp(_h(model, x) - hu)

    integral = _quad(shifted, 0.0, u)
    return math.exp(-hu) + model.mu * model.sigma * integral


def weibull_availability_grid(model: WeibullModel, ts) -> np.ndarray:
    """Availability on an ascending grid of absolute times.

    Same quantity as :func:`weibull_availability` but the integral is
    accumulated segment by segment in log space, which is much cheaper than
    independent evaluations when the grid is dense.
    """
    ts = np.asarray(ts, dtype=float)
    if ts.ndim != 1 or ts.size == 0:
        raise ValueError("ts must be a nonempty 1-d array")
    if np.any(np.diff(ts) < 0.0):
        raise ValueError("ts must be ascending")
    if ts[0] < model.gamma:
        raise ValueError(f"grid starts at {ts[0]}, before gamma={model.gamma}")

    us = (ts - model.gamma) / model.sigma
    out = np.empty_like(us)
    log_integral = -math.inf  # log of int_0^u exp(h(x)) dx
    prev_u = 0.0
    for k, u in enumerate(us):
        if u == 0.0:
            out[k] = 1.0
            continue
        hu = _h(model, u)
        if u > prev_u:
            seg = _quad(lambda x: math.exp(_h(model, x) - hu), prev_u, u)
            log_seg = hu + math.log(seg) if seg > 0.0 else -math.inf
            log_integral = np.logaddexp(log_integral, log_seg)
            prev_u = u
        out[k] = math.exp(-hu) + model.mu * model.sigma * math.exp(log_integral - hu)
    return out


def weibull_availability_limit(model: WeibullModel, tol: float = 1e-10) -> float:
    """Numeric estimate of the large-time availability limit.

    Doubles the evaluation horizon until successive values agree within
    ``tol`` or the horizon cap is hit; no closed form is asserted. For shape
    exactly 1 this converges quickly to ``mu*sigma / (1 + mu*sigma)``; for
    shape > 1 the curve keeps decaying (toward zero) and the cap applies.
    """
    horizon = model.sigma
    prev = weibull_availability(model, model.gamma + horizon)
    while horizon < _HORIZON_CAP * model.sigma:
        horizon *= 2.0
        cur = weibull_availability(model, model.gamma + horizon)
        if abs(prev - cur) < tol:
            return cur
        prev = cur
    return prev


def weibull_threshold_duration(model: WeibullModel, alpha: float) -> float:
    """Duration after a renewal at which Weibull availability reaches ``alpha``.

    Bracket expansion followed by bisection; valid only for shape ``beta >= 1``
    (monotone availability). Raises :class:`NonMonotone` for shape < 1 and
    :class:`ThresholdUnreachable` when ``alpha`` is at or below the estimated
    limit (within the finite reachability horizon of ``1e6 * sigma``).
    """
    if model.beta < 1.0:
        raise NonMonotone(
            f"shape beta={model.beta} < 1: availability is not guaranteed monotone"
        )
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if alpha == 1.0:
        return 0.0
    limit = weibull_availability_limit(model)
    if alpha <= limit + 1e-8:
        raise ThresholdUnreachable(
            f"alpha={alpha} is at or below the estimated availability limit {limit:.12g}"
        )

    lo = 0.0
    hi = model.sigma / 10.0
    while weibull_availability(model, model.gamma + hi) > alpha:
        lo = hi
        hi *= 2.0
        if hi > _HORIZON_CAP * model.sigma:
            raise ThresholdUnreachable(
                f"alpha={alpha} not reached within the horizon cap {_HORIZON_CAP * model.sigma} days"
            )

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        a_mid = weibull_availability(model, model.gamma + mid)
        if abs(a_mid - alpha) <= 1e-9 and hi - lo <= 1e-9:
            return mid
        if a_mid > alpha:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def threshold_duration(model, alpha: float) -> float:
    """Dispatch threshold inversion on the model type."""
    if isinstance(model, ExponentialModel):
        return exp_threshold_duration(model, alpha)
    if isinstance(model, WeibullModel):
        return weibull_threshold_duration(model, alpha)
    raise TypeError(f"unsupported model type {type(model).__name__}")


def availability(model, t: float) -> float:
    """Dispatch availability evaluation on the model type.

    For the constant-rate law ``t`` is time since renewal; for the Weibull law
    it is absolute time (renewal at ``gamma``).
    """
    if isinstance(model, ExponentialModel):
        return exp_availability(model, t)
    if isinstance(model, WeibullModel):
        return weibull_availability(model, t)
    raise TypeError(f"unsupported model type {type(model).__name__}")
