"""Command-line front end.

Subcommands:

* ``solve``       schedule a static instance with the priority rule
* ``lowerbound``  preemptive single-processor bound for a static instance
* ``simulate``    horizon simulation sweep over processor counts, CSV output
* ``bench``       empirical runtime scaling of the offline scheduler
* ``validate``    check an instance file against the schema and invariants

Exit codes: 0 success, 2 bad input (malformed file, violated precondition).
Durations are printed in days with six decimal places. Sweep rows are sorted
by (fraction, urgency flag) and formatted identically across runs, so output
for a fixed seed is byte-stable.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .generate import GenConfig, generate_machines, sweep_q_values
from .instances import Instance, InstanceError, instance_from_dict, load_instance
from .offline import OfflineInstance, TooLarge, Unsupported, lower_bound, schedule_ftr
from .realtime import new_state, run_horizon
from .tasks import CostWeights, MaintTask, total_cost, validate_schedule

CSV_HEADER = [
    "fraction",
    "q",
    "MC",
    "MRC",
    "mean_busy_time",
    "processed",
    "needed",
    "urgency_flag",
    "seed",
]


class CliError(Exception):
    """User-input problem; printed to stderr, exit code 2."""


@dataclass
class RunReport:
    """Traceability envelope written next to command output on request."""

    command: list[str]
    config_sha256: str
    results: list = field(default_factory=list)
    wall_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "config_sha256": self.config_sha256,
            "results": self.results,
            "wall_seconds": self.wall_seconds,
        }


def _sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _parse_weights(text: str) -> CostWeights:
    try:
        wf, wt = (float(x) for x in text.split(","))
        return CostWeights(wf, wt)
    except ValueError as exc:
        raise CliError(f"--weights expects 'wf,wt' with wf, wt >= 0: {exc}") from exc


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _write_out(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_static(path: str) -> Instance:
    try:
        return load_instance(path)
    except FileNotFoundError as exc:
        raise CliError(f"{path}: {exc}") from exc
    except InstanceError as exc:
        raise CliError(str(exc)) from exc


# -- solve --------------------------------------------------------------------


def cmd_solve(args) -> int:
    instance = _load_static(args.instance)
    weights = _parse_weights(args.weights)
    q = args.q if args.q is not None else instance.processors
    tasks = instance.static_tasks()
    offline = OfflineInstance(tasks=tasks, q=q, weights=weights)
    entries = schedule_ftr(offline)
    violation = validate_schedule(entries, tasks, q)
    if violation is not None:  # defensive; the scheduler only emits valid schedules
        raise CliError(f"internal: schedule failed validation: {violation}")
    payload = {
        "processors": q,
        "weights": {"flow": weights.flow, "tardy": weights.tardy},
        "total_cost": round(total_cost(entries, weights), 6),
        "schedule": [
            {
                "task": e.task.index,
                "processor": e.processor,
                "start": round(e.start, 6),
                "completion": round(e.completion, 6),
            }
            for e in entries
        ],
    }
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


# -- lowerbound ---------------------------------------------------------------


def cmd_lowerbound(args) -> int:
    instance = _load_static(args.instance)
    if instance.processors != 1:
        raise CliError(f"lower bound requires a single-processor instance, got q={instance.processors}")
    tasks = instance.static_tasks()
    try:
        value = lower_bound(OfflineInstance(tasks=tasks, q=1))
    except Unsupported as exc:
        raise CliError(str(exc)) from exc
    _write_out(_fmt(value) + "\n", args.out)
    return 0


# -- simulate -----------------------------------------------------------------


def _load_toml(path: Path) -> dict:
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _load_config_or_instance(path_text: str):
    """A simulate input is a generator config or an instance with machines."""
    path = Path(path_text)
    if not path.exists():
        raise CliError(f"{path_text}: no such file")
    if path.suffix.lower() == ".toml":
        data = _load_toml(path)
    else:
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise CliError(f"{path_text}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CliError(f"{path_text}: expected an object at top level")
    if "machines" in data or "tasks" in data:
        try:
            instance = instance_from_dict(data)
        except InstanceError as exc:
            raise CliError(str(exc)) from exc
        if not instance.machines:
            raise CliError(f"{path_text}: simulation needs machines")
        return instance
    try:
        known = {f for f in GenConfig.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise CliError(f"{path_text}: unknown config fields {sorted(unknown)}")
        for key in ("lambda_law", "mu_law", "epsilon_range", "alpha1_band", "processor_fractions"):
            if key in data:
                data[key] = tuple(data[key])
        return GenConfig(**data)
    except (TypeError, ValueError) as exc:
        raise CliError(f"{path_text}: invalid generator config: {exc}") from exc


def _simulate_rows(config_or_instance, urgency_modes, weights, seed_override, horizon_override,
                   fractions_override):
    if isinstance(config_or_instance, GenConfig):
        overrides = _config_dict(config_or_instance)
        if seed_override is not None:
            overrides["seed"] = seed_override
        if horizon_override is not None:
            overrides["horizon"] = horizon_override
        if fractions_override is not None:
            overrides["processor_fractions"] = fractions_override
        config = GenConfig(**overrides)
        machines = generate_machines(config)
        qs = sweep_q_values(config)
        fractions = config.processor_fractions
        horizon = config.horizon
        seed = config.seed
    else:
        instance = config_or_instance
        machines = list(instance.machines)
        horizon = horizon_override if horizon_override is not None else instance.horizon
        seed = seed_override if seed_override is not None else 0
        if fractions_override is not None:
            fractions = fractions_override
            qs = [max(1, int(np.floor(f * len(machines) + 0.5))) for f in fractions]
        else:
            fractions = (instance.processors / len(machines),)
            qs = [instance.processors]

    runs = []
    for fraction, q in zip(fractions, qs):
        for mode in urgency_modes:
            report = run_horizon(new_state(machines, q, horizon), use_urgency=mode, weights=weights)
            runs.append((fraction, mode, q, report))
    runs.sort(key=lambda item: (item[0], item[1]))
    return [
        {
            "fraction": _fmt(fraction),
            "q": q,
            "MC": _fmt(report.mean_cost_processed),
            "MRC": _fmt(report.mean_cost_needed),
            "mean_busy_time": _fmt(report.mean_busy_time),
            "processed": report.processed,
            "needed": report.needed,
            "urgency_flag": "on" if mode else "off",
            "seed": seed,
        }
        for fraction, mode, q, report in runs
    ]


def _config_dict(config: GenConfig) -> dict:
    return {name: getattr(config, name) for name in GenConfig.__dataclass_fields__}


def cmd_simulate(args) -> int:
    started = time.perf_counter()
    source = _load_config_or_instance(args.input)
    weights = _parse_weights(args.weights)
    if args.urgency == "both":
        modes = (False, True)
    elif args.urgency == "on":
        modes = (True,)
    else:
        modes = (False,)
    fractions = None
    if args.sweep is not None:
        try:
            fractions = tuple(float(x) for x in args.sweep.split(","))
        except ValueError as exc:
            raise CliError(f"--sweep expects comma-separated fractions: {exc}") from exc
    rows = _simulate_rows(source, modes, weights, args.seed, args.horizon, fractions)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write_out(buffer.getvalue(), args.out)

    if args.report is not None:
        report = RunReport(
            command=sys.argv[1:],
            config_sha256=_sha256_file(args.input),
            results=rows,
            wall_seconds=time.perf_counter() - started,
        )
        Path(args.report).write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    return 0


# -- bench --------------------------------------------------------------------


def _bench_instance(n: int, seed: int) -> OfflineInstance:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, n))))
    tasks = []
    for i in range(n):
        r = rng.uniform(0.0, n / 4.0)
        p = rng.uniform(0.5, 4.0)
        d = r + p * rng.uniform(1.0, 3.0)
        tasks.append(MaintTask(index=i, r=r, p=p, d=d))
    return OfflineInstance(tasks=tasks, q=1)


def fit_growth_exponent(sizes, seconds) -> float:
    """Slope of log(time) against log(n)."""
    return float(np.polyfit(np.log(np.asarray(sizes, float)), np.log(np.asarray(seconds, float)), 1)[0])


def run_bench(sizes, seed: int = 0, repeats: int = 3):
    """Median-of-repeats runtimes of the offline scheduler; n < 10 excluded from the fit."""
    timings = []
    for n in sizes:
        instance = _bench_instance(n, seed)
        best = min(
            _timed(lambda: schedule_ftr(instance)) for _ in range(repeats)
        )
        timings.append((n, best))
    fit_points = [(n, s) for n, s in timings if n >= 10]
    exponent = fit_growth_exponent(*zip(*fit_points)) if len(fit_points) >= 2 else float("nan")
    return timings, exponent


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def cmd_bench(args) -> int:
    try:
        sizes = [int(x) for x in args.sizes.split(",")]
    except ValueError as exc:
        raise CliError(f"--sizes expects comma-separated integers: {exc}") from exc
    timings, exponent = run_bench(sizes, seed=args.seed or 0)
    lines = ["n,seconds"]
    lines += [f"{n},{seconds:.6f}" for n, seconds in timings]
    lines.append(f"growth_exponent,{exponent:.3f}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


# -- validate -----------------------------------------------------------------


def cmd_validate(args) -> int:
    instance = _load_static(args.instance)
    problems = []
    for machine in instance.machines:
        if not machine.tau2 > machine.tau1:
            problems.append(f"machine {machine.id}: tau2 <= tau1")
    for task in instance.tasks:
        if not task.d > task.r:
            problems.append(f"task {task.index}: d <= r")
    if problems:
        raise CliError("; ".join(problems))
    summary = {
        "horizon_days": instance.horizon,
        "processors": instance.processors,
        "machines": len(instance.machines),
        "tasks": len(instance.tasks),
        "ok": True,
    }
    _write_out(json.dumps(summary, indent=2) + "\n", args.out)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmsched", description="Preventive-maintenance scheduling toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="schedule a static instance with the priority rule")
    solve.add_argument("instance", help="instance JSON file")
    solve.add_argument("--q", type=int, default=None, help="processor count override")
    solve.add_argument("--weights", default="1,1", help="flow,tardy weights (default 1,1)")
    solve.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    solve.set_defaults(func=cmd_solve)

    lb = sub.add_parser("lowerbound", help="preemptive lower bound (q = 1 instances)")
    lb.add_argument("instance", help="instance JSON file")
    lb.add_argument("--out", default=None)
    lb.set_defaults(func=cmd_lowerbound)

    sim = sub.add_parser("simulate", help="horizon simulation sweep, CSV output")
    sim.add_argument("input", help="generator config (JSON/TOML) or instance JSON with machines")
    sim.add_argument("--urgency", choices=("on", "off", "both"), default="both")
    sim.add_argument("--weights", default="1,1")
    sim.add_argument("--seed", type=int, default=None, help="seed override")
    sim.add_argument("--horizon", type=float, default=None, help="horizon override (days)")
    sim.add_argument("--sweep", default=None, help="comma-separated processor fractions")
    sim.add_argument("--out", default=None, help="write CSV to FILE instead of stdout")
    sim.add_argument("--report", default=None, help="also write a JSON run report to FILE")
    sim.set_defaults(func=cmd_simulate)

    bench = sub.add_parser("bench", help="runtime scaling of the offline scheduler")
    bench.add_argument("--sizes", default="100,200,400", help="comma-separated task counts")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out", default=None)
    bench.set_defaults(func=cmd_bench)

    val = sub.add_parser("validate", help="check an instance file")
    val.add_argument("instance", help="instance JSON file")
    val.add_argument("--out", default=None)
    val.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"pmsched: error: {exc}", file=sys.stderr)
        return 2
    except (TooLarge, Unsupported, InstanceError) as exc:
        print(f"pmsched: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
