"""CLI tests: command payloads, exit codes, golden output bytes."""

import json
import pathlib

import pytest

from spinchain.cli import main

DATA = pathlib.Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestGen:
    def test_chain_operator(self, capsys):
        payload = run_json(capsys, "gen", "e", "--n", "2", "--k", "3")
        assert payload == {"kind": "e", "n": 2, "k": 3, "pauli": "ZY"}

    def test_bilinear(self, capsys):
        payload = run_json(capsys, "gen", "d", "--n", "3", "--k", "2")
        assert payload["pauli"] == "IZI"

    def test_bus(self, capsys):
        payload = run_json(capsys, "gen", "bus", "--n", "2", "--id", "II")
        assert payload["members"] == ["XI", "XX"]
        assert payload["refs"] == ["e0", "d1"]

    def test_third_gate_needs_two_qubits(self, capsys):
        code, _, err = run_cli(capsys, "gen", "third", "--n", "1")
        assert code == 2
        assert "error" in err

    def test_missing_index(self, capsys):
        code, _, err = run_cli(capsys, "gen", "e", "--n", "2")
        assert code == 2

    def test_table_output(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "e", "--n", "2", "--k", "3", "--output", "table")
        assert code == 0
        assert out.strip() == "ZY"

    def test_bad_kind_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "w", "--n", "2"])
        assert exc.value.code == 2


class TestCar:
    def test_clean_chain_exits_zero(self, capsys):
        payload = run_json(capsys, "car", "--n", "4")
        assert payload["max_deviation"] == 0.0
        assert payload["failures"] == []

    def test_single_qubit(self, capsys):
        code, out, _ = run_cli(capsys, "car", "--n", "1")
        assert code == 0

    def test_injected_fault_exits_one(self, capsys):
        code, out, _ = run_cli(capsys, "car", "--n", "2", "--inject-fault")
        assert code == 1
        payload = json.loads(out)
        assert payload["max_deviation"] > 0
        assert payload["failures"]


class TestClosure:
    def test_buses(self, capsys):
        payload = run_json(capsys, "closure", "--n", "3", "--bus", "I,II")
        assert payload["dimension"] == 21
        assert payload["label"] == "so(2n+1)"

    def test_universal_buses(self, capsys):
        payload = run_json(capsys, "closure", "--n", "3", "--bus", "I,II,III")
        assert payload["dimension"] == 63
        assert payload["label"] == "su(2^n)"

    def test_explicit_generators(self, capsys):
        payload = run_json(capsys, "closure", "--n", "2", "--gen", "ZI")
        assert payload["dimension"] == 1
        assert payload["basis"] == ["ZI"]

    def test_named_refs_mix_with_literals(self, capsys):
        payload = run_json(capsys, "closure", "--n", "2", "--gen", "e0,d0,XX,IZ")
        assert payload["dimension"] == 10

    def test_no_generators_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "closure", "--n", "2")
        assert code == 2

    def test_unparsable_generator(self, capsys):
        code, _, err = run_cli(capsys, "closure", "--n", "2", "--gen", "q9")
        assert code == 2


class TestSchedule:
    def test_empty_schedule_is_identity(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"n": 2, "pulses": []}))
        payload = run_json(capsys, "schedule", str(path))
        assert payload["member"] is True
        assert payload["unitarity_residual"] == 0.0
        entries = payload["rotation"]["entries"]
        assert entries == [[1.0 if i == j else 0.0 for j in range(5)] for i in range(5)]

    def test_half_turn_single_pulse(self, capsys, tmp_path):
        # exp(i pi e0) = -I: still the identity rotation
        path = tmp_path / "half.json"
        path.write_text(json.dumps({"n": 1, "pulses": [{"gen": "e0", "theta": 3.141592653589793}]}))
        payload = run_json(capsys, "schedule", str(path))
        assert payload["member"] is True
        assert payload["rotation"]["entries"] == [
            [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]
        ]

    def test_third_gate_pulse_reports_non_membership(self, capsys, tmp_path):
        path = tmp_path / "third.json"
        path.write_text(json.dumps({"n": 2, "pulses": [{"gen": "third", "theta": 0.7}]}))
        payload = run_json(capsys, "schedule", str(path))
        assert payload["member"] is False
        assert payload["rotation"] is None
        assert payload["membership_residual"] > 0.05

    def test_malformed_file_exits_two(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "schedule", str(path))
        assert code == 2
        path.write_text(json.dumps({"n": 2}))
        code, _, err = run_cli(capsys, "schedule", str(path))
        assert code == 2

    def test_missing_file_exits_two(self, capsys):
        code, _, _ = run_cli(capsys, "schedule", "/nonexistent/schedule.json")
        assert code == 2

    def test_random_requires_seed(self, capsys):
        code, _, err = run_cli(capsys, "schedule", "--random", "5", "--bus", "I", "--n", "2")
        assert code == 2

    def test_random_schedule_golden_bytes(self, capsys):
        code, out, _ = run_cli(
            capsys, "schedule", "--random", "20", "--bus", "I,II", "--n", "2", "--seed", "7"
        )
        assert code == 0
        golden = (DATA / "golden_schedule_n2.json").read_text()
        assert out == golden

    def test_deterministic_across_runs(self, capsys):
        args = ("schedule", "--random", "8", "--bus", "I,II", "--n", "3", "--seed", "11")
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_table_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "schedule", "--random", "4", "--bus", "I", "--n", "2",
            "--seed", "2", "--output", "table",
        )
        assert code == 0
        assert "member=True" in out


def test_json_keys_are_sorted(capsys):
    _, out, _ = run_cli(capsys, "gen", "e", "--n", "2", "--k", "0")
    keys = [line.split('"')[1] for line in out.splitlines() if '":' in line]
    assert keys == sorted(keys)
