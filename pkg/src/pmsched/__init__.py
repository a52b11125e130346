"""Preventive-maintenance scheduling toolkit.

Availability models turn reliability parameters into inter-maintenance
durations; machines spawn chains of preventive tasks; a pairwise
flow-time/tardiness priority rule drives both an offline scheduler and an
event-driven real-time dispatcher on parallel processors; generators and a
simulation harness reproduce the processor-count sweep experiments.
"""

__version__ = "0.1.0"

from .generate import GenConfig, generate_machine, generate_machines, generate_system, machine_rng
from .instances import (
    Instance,
    InstanceError,
    first_generation_tasks,
    instance_from_dict,
    instance_to_dict,
    load_instance,
)
from .offline import (
    GapReport,
    OfflineInstance,
    TooLarge,
    Unsupported,
    brute_force_optimal,
    gap_report,
    lower_bound,
    schedule_ftr,
)
from .priority import (
    DominanceState,
    build_dominance,
    dominates,
    ftr,
    pairwise_cost_delta,
    prtf,
    prtt,
    q1,
    q2,
    select_task,
)
from .realtime import (
    HorizonExhausted,
    SimReport,
    SystemState,
    dispatch_step,
    new_state,
    run_horizon,
    urgency_set,
)
from .reliability import (
    ExponentialModel,
    NonMonotone,
    Thresholds,
    ThresholdUnreachable,
    WeibullModel,
    exp_availability,
    exp_threshold_duration,
    threshold_duration,
    weibull_availability,
    weibull_availability_grid,
    weibull_availability_limit,
    weibull_threshold_duration,
)
from .tasks import (
    CostWeights,
    Machine,
    MaintTask,
    ScheduleEntry,
    UNIT_WEIGHTS,
    Violation,
    next_task,
    total_cost,
    validate_schedule,
)

__all__ = [
    "CostWeights",
    "DominanceState",
    "ExponentialModel",
    "GapReport",
    "GenConfig",
    "HorizonExhausted",
    "Instance",
    "InstanceError",
    "Machine",
    "MaintTask",
    "NonMonotone",
    "OfflineInstance",
    "ScheduleEntry",
    "SimReport",
    "SystemState",
    "Thresholds",
    "ThresholdUnreachable",
    "TooLarge",
    "UNIT_WEIGHTS",
    "Unsupported",
    "Violation",
    "WeibullModel",
    "brute_force_optimal",
    "build_dominance",
    "dispatch_step",
    "dominates",
    "exp_availability",
    "exp_threshold_duration",
    "first_generation_tasks",
    "ftr",
    "gap_report",
    "generate_machine",
    "generate_machines",
    "generate_system",
    "instance_from_dict",
    "instance_to_dict",
    "load_instance",
    "lower_bound",
    "machine_rng",
    "new_state",
    "next_task",
    "pairwise_cost_delta",
    "prtf",
    "prtt",
    "q1",
    "q2",
    "run_horizon",
    "schedule_ftr",
    "select_task",
    "threshold_duration",
    "total_cost",
    "urgency_set",
    "validate_schedule",
    "weibull_availability",
    "weibull_availability_grid",
    "weibull_availability_limit",
    "weibull_threshold_duration",
]
