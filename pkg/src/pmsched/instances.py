"""Instance files: the JSON schema tying machines, tasks, and run parameters.

Schema (all durations in days)::

    {
      "horizon_days": 365.0,
      "processors": 2,
      "machines": [
        {"id": 1, "site": 1,
         "model": {"type": "exp", "lambda": 0.004, "mu": 0.5},
         "alpha1": 0.9921,
         "tau2_rule": {"epsilon": 0.3}},
        {"id": 2, "site": 1,
         "model": {"type": "weibull", "gamma": 0.0, "sigma": 120.0,
                   "beta": 2.0, "mu": 0.5},
         "alpha1": 0.95,
         "tau2_rule": {"epsilon": 0.4}}
      ],
      "tasks": [
        {"r": 0.0, "p": 2.0, "d": 5.0}
      ]
    }

"machines" drives horizon simulation; "tasks" gives an explicit static
instance for the offline scheduler and the lower bound. Files may carry
either or both; when a static instance is requested from a machines-only
file, the first-generation tasks (release tau1, due date tau2, processing
time mtp, one per machine) are derived. Machine durations are recomputed
from the model on load: tau1 inverts alpha1, mtp = 1/mu, and
tau2 = tau1 + mtp + epsilon * mtp.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .reliability import (
    ExponentialModel,
    NonMonotone,
    Thresholds,
    ThresholdUnreachable,
    WeibullModel,
    availability,
    threshold_duration,
)
from .tasks import Machine, MaintTask


class InstanceError(ValueError):
    """Malformed or inconsistent instance data."""


@dataclass(frozen=True)
class Instance:
    horizon: float
    processors: int
    machines: tuple = field(default_factory=tuple)
    tasks: tuple = field(default_factory=tuple)

    def static_tasks(self) -> tuple:
        """Explicit tasks if present, else first-generation machine tasks."""
        if self.tasks:
            return self.tasks
        return first_generation_tasks(self.machines)


def _model_from_dict(data: dict):
    try:
        kind = data["type"]
    except (TypeError, KeyError):
        raise InstanceError("model must be an object with a 'type' field")
    try:
        if kind == "exp":
            return ExponentialModel(lam=float(data["lambda"]), mu=float(data["mu"]))
        if kind == "weibull":
            return WeibullModel(
                gamma=float(data["gamma"]),
                sigma=float(data["sigma"]),
                beta=float(data["beta"]),
                mu=float(data["mu"]),
            )
    except KeyError as exc:
        raise InstanceError(f"model type {kind!r} is missing field {exc}") from exc
    except ValueError as exc:
        raise InstanceError(f"invalid model parameters: {exc}") from exc
    raise InstanceError(f"unknown model type {kind!r} (expected 'exp' or 'weibull')")


def _model_to_dict(model) -> dict:
    if isinstance(model, ExponentialModel):
        return {"type": "exp", "lambda": model.lam, "mu": model.mu}
    if isinstance(model, WeibullModel):
        return {
            "type": "weibull",
            "gamma": model.gamma,
            "sigma": model.sigma,
            "beta": model.beta,
            "mu": model.mu,
        }
    raise TypeError(f"unsupported model type {type(model).__name__}")


def machine_from_dict(data: dict) -> Machine:
    """Build a machine from its schema object, deriving tau1, mtp, and tau2."""
    try:
        machine_id = int(data["id"])
        site = int(data.get("site", 1))
        model = _model_from_dict(data["model"])
        alpha1 = float(data["alpha1"])
        epsilon = float(data["tau2_rule"]["epsilon"])
    except (TypeError, KeyError) as exc:
        raise InstanceError(f"machine entry is missing field {exc}") from exc
    if not (0.0 < alpha1 < 1.0):
        raise InstanceError(f"alpha1 must be in (0, 1), got {alpha1}")
    if epsilon <= 0.0:
        raise InstanceError(f"tau2_rule.epsilon must be > 0, got {epsilon}")
    try:
        tau1 = threshold_duration(model, alpha1)
    except (ThresholdUnreachable, NonMonotone) as exc:
        raise InstanceError(f"machine {machine_id}: {exc}") from exc
    mtp = 1.0 / model.mu
    tau2 = tau1 + mtp + epsilon * mtp
    origin = model.gamma if isinstance(model, WeibullModel) else 0.0
    alpha2 = availability(model, origin + tau2)
    thresholds = Thresholds(alpha1=alpha1, alpha2=alpha2) if alpha2 < alpha1 else None
    return Machine(
        id=machine_id,
        reliability=model,
        tau1=tau1,
        tau2=tau2,
        mtp=mtp,
        site=site,
        thresholds=thresholds,
    )


def machine_to_dict(machine: Machine) -> dict:
    """Schema object for a machine; epsilon is recovered from the durations."""
    if machine.thresholds is None:
        raise ValueError(f"machine {machine.id} has no thresholds to serialize")
    epsilon = (machine.tau2 - machine.tau1 - machine.mtp) / machine.mtp
    return {
        "id": machine.id,
        "site": machine.site,
        "model": _model_to_dict(machine.reliability),
        "alpha1": machine.thresholds.alpha1,
        "tau2_rule": {"epsilon": epsilon},
    }


def instance_to_dict(machines, horizon: float, processors: int) -> dict:
    """Serialize a machine population as an instance-schema object."""
    return {
        "horizon_days": horizon,
        "processors": processors,
        "machines": [machine_to_dict(m) for m in machines],
    }


def first_generation_tasks(machines) -> tuple:
    """The first task of each machine: r = tau1, d = tau2, p = mtp."""
    tasks = []
    for idx, machine in enumerate(machines):
        tasks.append(
            MaintTask(
                index=idx,
                r=machine.tau1,
                p=machine.mtp,
                d=machine.tau2,
                machine_id=machine.id,
                m=1,
            )
        )
    return tuple(tasks)


def _task_from_dict(data: dict, index: int) -> MaintTask:
    try:
        r = float(data["r"])
        p = float(data["p"])
        d = float(data["d"])
    except (TypeError, KeyError) as exc:
        raise InstanceError(f"task entry {index} is missing field {exc}") from exc
    try:
        return MaintTask(
            index=int(data.get("id", index)),
            r=r,
            p=p,
            d=d,
            machine_id=data.get("machine_id"),
            m=int(data.get("m", 1)),
        )
    except ValueError as exc:
        raise InstanceError(f"task entry {index}: {exc}") from exc


def instance_from_dict(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    machines = tuple(machine_from_dict(m) for m in data.get("machines", []))
    if len({m.id for m in machines}) != len(machines):
        raise InstanceError("machine ids must be unique")
    tasks = tuple(_task_from_dict(t, i) for i, t in enumerate(data.get("tasks", [])))
    if len({t.index for t in tasks}) != len(tasks):
        raise InstanceError("task ids must be unique")
    horizon = float(data.get("horizon_days", 365.0))
    processors = int(data.get("processors", 1))
    if horizon <= 0.0:
        raise InstanceError(f"horizon_days must be > 0, got {horizon}")
    if processors < 1:
        raise InstanceError(f"processors must be >= 1, got {processors}")
    return Instance(horizon=horizon, processors=processors, machines=machines, tasks=tasks)


def load_instance(path) -> Instance:
    """Load and validate an instance file; raises InstanceError on bad input."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON: {exc}") from exc
    return instance_from_dict(data)
