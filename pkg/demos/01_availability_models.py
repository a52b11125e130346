"""Availability models and threshold inversion.

A machine renewed by a preventive task starts at availability 1 and decays:
under constant failure/repair rates toward the asymptote mu/(lam+mu), under a
Weibull wear-out law toward a lower limit. Picking an operational threshold
alpha1 and solving A(tau) = alpha1 gives the duration until the next
preventive task is due for release; a second, lower threshold gives its
deadline.
"""

import numpy as np

from pmsched import (
    ExponentialModel,
    ThresholdUnreachable,
    WeibullModel,
    exp_availability,
    exp_threshold_duration,
    weibull_availability,
    weibull_availability_grid,
    weibull_threshold_duration,
)

print("=== Constant-rate availability ===")
model = ExponentialModel(lam=0.01, mu=0.1)
print(f"failure rate {model.lam}/day, repair rate {model.mu}/day")
print(f"asymptotic availability: {model.asymptotic_availability:.6f}")
for elapsed in (0.0, 2.0, 7.259, 30.0, 100.0):
    print(f"  A({elapsed:6.2f} days after renewal) = {exp_availability(model, elapsed):.6f}")

print("\nInverting thresholds into inter-maintenance durations:")
for alpha in (0.99, 0.95, 0.92):
    tau = exp_threshold_duration(model, alpha)
    roundtrip = exp_availability(model, tau)
    print(f"  alpha = {alpha:.2f}  ->  tau = {tau:9.4f} days   (A(tau) = {roundtrip:.9f})")

print("\nA threshold at or below the asymptote is never crossed:")
try:
    exp_threshold_duration(model, 0.90)
except ThresholdUnreachable as exc:
    print(f"  ThresholdUnreachable: {exc}")

print("\n=== Weibull wear-out availability (constant repair rate) ===")
wear = WeibullModel(gamma=0.0, sigma=100.0, beta=2.0, mu=0.5)
grid = np.linspace(0.0, 120.0, 7)
values = weibull_availability_grid(wear, grid)
for t, a in zip(grid, values):
    print(f"  A(t = {t:6.1f}) = {a:.6f}")

tau1 = weibull_threshold_duration(wear, 0.95)
tau2 = weibull_threshold_duration(wear, 0.90)
print(f"\n  alpha1 = 0.95 -> tau1 = {tau1:.4f} days (check A = {weibull_availability(wear, tau1):.9f})")
print(f"  alpha2 = 0.90 -> tau2 = {tau2:.4f} days (check A = {weibull_availability(wear, tau2):.9f})")
print(f"  lower threshold crossed later: tau1 < tau2 is {tau1 < tau2}")

print("\nShape exactly 1 reduces to the constant-rate law with lam = 1/sigma:")
w1 = WeibullModel(gamma=0.0, sigma=50.0, beta=1.0, mu=0.2)
e1 = ExponentialModel(lam=1.0 / 50.0, mu=0.2)
for t in (10.0, 30.0, 90.0):
    print(
        f"  t = {t:5.1f}: weibull {weibull_availability(w1, t):.9f}"
        f"  vs constant-rate {exp_availability(e1, t):.9f}"
    )
