"""Command-line interface: subcommands, exit codes, deterministic output."""

import json
import subprocess
import sys

from pmsched.cli import main

TWO_TASKS = {
    "processors": 1,
    "tasks": [{"r": 0, "p": 2, "d": 5}, {"r": 1, "p": 3, "d": 4}],
}
LB_TASKS = {
    "processors": 1,
    "tasks": [{"r": 0, "p": 3, "d": 4}, {"r": 1, "p": 1, "d": 3}],
}


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


class TestSolve:
    def test_two_task_cost(self, tmp_path, capsys):
        assert main(["solve", write(tmp_path, "i.json", TWO_TASKS)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["total_cost"] == 7.0
        assert [e["task"] for e in payload["schedule"]] == [0, 1]

    def test_empty_tasks(self, tmp_path, capsys):
        assert main(["solve", write(tmp_path, "i.json", {"processors": 1, "tasks": []})]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["total_cost"] == 0.0 and payload["schedule"] == []

    def test_malformed_json_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{broken")
        assert main(["solve", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_weights_flag(self, tmp_path, capsys):
        assert main(["solve", write(tmp_path, "i.json", TWO_TASKS), "--weights", "2,0"]) == 0
        payload = json.loads(capsys.readouterr().out)
        # flow-only doubled: 2*(2 + 4) = 12
        assert payload["total_cost"] == 12.0


class TestLowerBound:
    def test_worked_value(self, tmp_path, capsys):
        assert main(["lowerbound", write(tmp_path, "i.json", LB_TASKS)]) == 0
        assert capsys.readouterr().out.strip() == "5.000000"

    def test_single_task_flow_only(self, tmp_path, capsys):
        payload = {"processors": 1, "tasks": [{"r": 0, "p": 2, "d": 5}]}
        assert main(["lowerbound", write(tmp_path, "i.json", payload)]) == 0
        assert capsys.readouterr().out.strip() == "2.000000"

    def test_multiprocessor_rejected(self, tmp_path, capsys):
        payload = dict(LB_TASKS, processors=2)
        assert main(["lowerbound", write(tmp_path, "i.json", payload)]) == 2
        assert "single-processor" in capsys.readouterr().err


class TestSimulate:
    CONFIG = {
        "machine_count": 12,
        "horizon": 120.0,
        "processor_fractions": [0.1, 0.2],
        "seed": 7,
    }

    def test_header_and_rows(self, tmp_path, capsys):
        assert main(["simulate", write(tmp_path, "cfg.json", self.CONFIG)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "fraction,q,MC,MRC,mean_busy_time,processed,needed,urgency_flag,seed"
        assert len(lines) == 1 + 2 * 2  # two fractions, both urgency flags

    def test_single_fraction_sweep_flag(self, tmp_path, capsys):
        assert (
            main(["simulate", write(tmp_path, "cfg.json", self.CONFIG), "--sweep", "0.1"]) == 0
        )
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 1 + 2

    def test_urgency_flag_filters_rows(self, tmp_path, capsys):
        assert (
            main(["simulate", write(tmp_path, "cfg.json", self.CONFIG), "--urgency", "on"]) == 0
        )
        lines = capsys.readouterr().out.strip().splitlines()[1:]
        assert all(line.split(",")[7] == "on" for line in lines)

    def test_byte_identical_repeats(self, tmp_path):
        cfg = write(tmp_path, "cfg.json", self.CONFIG)
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        assert main(["simulate", cfg, "--out", str(out1)]) == 0
        assert main(["simulate", cfg, "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_machine_instance_input(self, tmp_path, capsys):
        payload = {
            "horizon_days": 60.0,
            "processors": 1,
            "machines": [
                {
                    "id": 1,
                    "model": {"type": "exp", "lambda": 0.01, "mu": 0.5},
                    "alpha1": 0.985,
                    "tau2_rule": {"epsilon": 0.3},
                }
            ],
        }
        assert main(["simulate", write(tmp_path, "inst.json", payload)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3  # header + both urgency flags at the file's q

    def test_invalid_config_exit_2(self, tmp_path, capsys):
        assert main(["simulate", write(tmp_path, "cfg.json", {"machine_count": 0})]) == 2
        assert "error" in capsys.readouterr().err

    def test_toml_config(self, tmp_path, capsys):
        path = tmp_path / "cfg.toml"
        path.write_text(
            "machine_count = 8\nhorizon = 90.0\nprocessor_fractions = [0.25]\nseed = 3\n"
        )
        assert main(["simulate", str(path)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 3


class TestBench:
    def test_small_sizes_produce_exponent(self, tmp_path, capsys):
        assert main(["bench", "--sizes", "20,40,80"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,seconds"
        assert lines[-1].startswith("growth_exponent,")


class TestValidate:
    def test_ok_instance(self, tmp_path, capsys):
        assert main(["validate", write(tmp_path, "i.json", TWO_TASKS)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True and payload["tasks"] == 2

    def test_broken_instance_exit_2(self, tmp_path, capsys):
        payload = {"tasks": [{"r": 5, "p": 1, "d": 4}]}
        assert main(["validate", write(tmp_path, "i.json", payload)]) == 2

    def test_unreachable_threshold_exit_2_not_traceback(self, tmp_path, capsys):
        payload = {
            "machines": [
                {
                    "id": 3,
                    "model": {"type": "exp", "lambda": 0.01, "mu": 0.4},
                    "alpha1": 0.97,
                    "tau2_rule": {"epsilon": 0.3},
                }
            ]
        }
        assert main(["validate", write(tmp_path, "i.json", payload)]) == 2
        err = capsys.readouterr().err
        assert "machine 3" in err and "error" in err


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        path = tmp_path / "i.json"
        path.write_text(json.dumps(TWO_TASKS))
        proc = subprocess.run(
            [sys.executable, "-m", "pmsched", "solve", str(path)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["total_cost"] == 7.0
