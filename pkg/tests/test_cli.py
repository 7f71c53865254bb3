import json
import subprocess
import sys

import pytest

from coverhom.cli import (
    RunConfig,
    cmd_catalog,
    cmd_example2,
    cmd_kodaira_thurston,
    cmd_kollar_check,
    cmd_snf,
    cmd_tower7,
    main,
)
from coverhom.intlinalg import IntMatrix
from coverhom.reportio import matrix_from_json, matrix_to_json


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_example2_minimal(self, capsys):
        code, out, _ = run_main(
            capsys, "example2", "--g1", "1", "--g2", "1", "--m1", "1", "--m2", "1", "-d", "2"
        )
        assert code == 0
        assert "result: PASS" in out

    def test_example2_degree_one_usage_error(self, capsys):
        code, _, err = run_main(capsys, "example2", "-d", "1")
        assert code == 2
        assert "error:" in err

    def test_tower_degree_one_usage_error(self, capsys):
        code, _, _ = run_main(capsys, "tower7", "-d", "1")
        assert code == 2

    def test_unknown_command(self, capsys):
        assert run_main(capsys, "nonsense")[0] == 2

    def test_no_command(self, capsys):
        assert run_main(capsys)[0] == 2

    def test_bad_area(self, capsys):
        code, _, err = run_main(capsys, "example2", "--area1", "abc")
        assert code == 2

    def test_help_exits_zero(self, capsys):
        assert run_main(capsys, "--help")[0] == 0


class TestExample2Json:
    def test_bound_formula_case(self, capsys):
        code, out, _ = run_main(
            capsys,
            "example2", "--m1", "2", "--m2", "2", "-d", "3", "--g1", "1", "--g2", "1",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["family"] == "example2"
        assert doc["invariants"]["pi_lower_bound"] == 72
        assert doc["findings"]["omega_on_spherical_classes"] == "zero"
        assert doc["findings"]["c1_on_spherical_classes"] == "zero"
        assert all(v["pass"] for v in doc["verdicts"])
        assert all(p["omega"] == "0/1" and p["c1"] == 0 for p in doc["pairings"])

    def test_deterministic_bytes(self, capsys):
        args = ("example2", "--m1", "2", "--m2", "1", "-d", "2", "--format", "json")
        _, first, _ = run_main(capsys, *args)
        _, second, _ = run_main(capsys, *args)
        assert first == second

    def test_schema_keys(self, capsys):
        _, out, _ = run_main(capsys, "example2", "--format", "json")
        doc = json.loads(out)
        for key in ("family", "parameters", "invariants", "pairings", "verdicts", "assumptions"):
            assert key in doc
        assert set(doc["invariants"]) == {"euler_characteristic", "b1", "pi_lower_bound"}
        for v in doc["verdicts"]:
            assert set(v) == {"name", "pass", "evidence"}
        assert doc["parameters"]["area1"] == "1/1"

    def test_spherical_lattice_serialized(self, capsys):
        _, out, _ = run_main(capsys, "example2", "-d", "3", "--format", "json")
        doc = json.loads(out)
        lattice = doc["spherical_lattice"]
        # 9 chains of 2 spheres each, edges inside every chain.
        assert len(lattice["vertices"]) == 18
        assert len(lattice["edges"]) == 9
        assert all(v["euler_number"] == -2 and v["genus"] == 0 for v in lattice["vertices"])
        assert all(isinstance(e, list) and len(e) == 2 for e in lattice["edges"])

    def test_traceability(self, capsys):
        _, out, _ = run_main(capsys, "example2", "--format", "json")
        doc = json.loads(out)
        trace = doc["trace"]
        for claim in (
            "invariants.euler_characteristic",
            "invariants.b1",
            "invariants.pi_lower_bound",
            "pairings[].omega",
            "pairings[].c1",
            "findings.omega_on_spherical_classes",
            "findings.c1_on_spherical_classes",
        ):
            assert claim in trace

    def test_table_and_json_same_numbers(self, capsys):
        _, table, _ = run_main(capsys, "example2", "--m1", "2", "-d", "3")
        _, js, _ = run_main(capsys, "example2", "--m1", "2", "-d", "3", "--format", "json")
        doc = json.loads(js)
        inv = doc["invariants"]
        assert f"euler_characteristic   {inv['euler_characteristic']}" in table
        assert f"pi_lower_bound         {inv['pi_lower_bound']}" in table
        for p in doc["pairings"]:
            assert p["generator"] in table
        for v in doc["verdicts"]:
            assert v["name"] in table

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run_main(capsys, "example2", "--format", "json", "--out", str(path))
        assert code == 0
        assert out == ""
        doc = json.loads(path.read_text())
        assert doc["family"] == "example2"

    def test_kaehler_flag_recorded(self, capsys):
        _, out, _ = run_main(capsys, "example2", "--kaehler", "--format", "json")
        doc = json.loads(out)
        assert doc["kaehler"] is True
        assert doc["parameters"]["kaehler"] is True


class TestKodairaThurston:
    def test_betti_and_verdicts(self, capsys):
        code, out, _ = run_main(capsys, "kodaira-thurston", "--m1", "1", "--m2", "1", "-d", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["invariants"]["b1"] == 3
        names = [v["name"] for v in doc["verdicts"]]
        assert "odd b1 rules out Kaehler homotopy type" in names
        assert doc["kaehler"] is False

    def test_parameter_independent(self, capsys):
        code, out, _ = run_main(capsys, "kodaira-thurston", "--m1", "3", "--m2", "2", "-d", "5", "--format", "json")
        assert code == 0
        assert json.loads(out)["invariants"]["b1"] == 3

    def test_mutated_relator_hook_fails(self):
        cfg = RunConfig(command="kodaira-thurston")
        report, code = cmd_kodaira_thurston(cfg, _relator_override=((0, 0, 1, 0),))
        assert code == 1
        assert not report.passed


class TestTowerCli:
    def test_pairings(self, capsys):
        for d, expected in ((2, -2), (4, -6)):
            code, out, _ = run_main(capsys, "tower7", "-d", str(d), "--format", "json")
            assert code == 0
            doc = json.loads(out)
            assert doc["family"] == "tower7"
            stage2 = doc["stages"][1]
            assert stage2["pairings"][0]["c1"] == expected
            assert stage2["findings"]["c1_on_spherical_classes"] == "nonzero"
            assert stage2["findings"]["omega_on_spherical_classes"] == "zero"

    def test_table_output(self, capsys):
        code, out, _ = run_main(capsys, "tower7", "-d", "2")
        assert code == 0
        assert "== stage 1 ==" in out and "== stage 2 ==" in out
        assert "overall: PASS" in out


class TestCatalogCli:
    def test_four_entries(self, capsys):
        code, out, _ = run_main(capsys, "catalog", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["entries"]) == 4
        signatures = {(e["omega_on_pi"], e["c1_on_pi"]) for e in doc["entries"]}
        assert signatures == {
            ("zero", "zero"),
            ("zero", "nonzero"),
            ("nonzero", "zero"),
            ("nonzero", "nonzero"),
        }
        sources = [e["source"] for e in doc["entries"]]
        assert sources.count("computed") == 2
        assert sources.count("catalog") == 2

    def test_configured_degree_pairing(self, capsys):
        code, out, _ = run_main(capsys, "catalog", "-d", "3", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        tower_entry = [e for e in doc["entries"] if e["source"] == "computed"][1]
        assert "-4" in tower_entry["witness"]


class TestKollarCli:
    def test_both_hypotheses(self, capsys):
        code, out, _ = run_main(
            capsys, "kollar", "--omega-pullback", "--target-pi2-trivial", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["concluded"] is True
        assert doc["conclusion"] == "omega vanishes on all spherical classes"

    def test_failed_hypothesis(self, capsys):
        for flags in (
            ("--omega-pullback", "--no-target-pi2-trivial"),
            ("--no-omega-pullback", "--target-pi2-trivial"),
        ):
            code, out, _ = run_main(capsys, "kollar", *flags, "--format", "json")
            assert code == 0
            doc = json.loads(out)
            assert doc["concluded"] is False
            assert doc["conclusion"] == "no conclusion"
            assert len(doc["failed_hypotheses"]) == 1

    def test_library_level(self):
        assert cmd_kollar_check(True, True).concluded
        assert not cmd_kollar_check(True, False).concluded
        assert not cmd_kollar_check(False, True).concluded

    def test_missing_flag_is_usage_error(self, capsys):
        assert run_main(capsys, "kollar", "--omega-pullback")[0] == 2


class TestSnfCli:
    def test_roundtrip(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        big = 2**64 + 3
        matrix = IntMatrix.from_rows([(2, 4), (6, 8), (big, 0)])
        path.write_text(json.dumps(matrix_to_json(matrix)))
        code, out, _ = run_main(capsys, "snf", str(path), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        # Big entries travel as decimal strings.
        assert any(isinstance(e, str) for e in doc["input"]["entries"])
        u = matrix_from_json(doc["u"])
        d = matrix_from_json(doc["d"])
        v = matrix_from_json(doc["v"])
        assert u.mul(matrix).mul(v).entries == d.entries
        assert all(check["pass"] for check in doc["verdicts"])

    def test_table_format(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps(matrix_to_json(IntMatrix.from_rows([(2, 4), (6, 8)]))))
        code, out, _ = run_main(capsys, "snf", str(path))
        assert code == 0
        assert "divisors: [2, 4]" in out

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{\"rows\": 2, \"cols\": 2, \"entries\": [1, 2, 3]}")
        assert run_main(capsys, "snf", str(path))[0] == 2
        path.write_text("not json")
        assert run_main(capsys, "snf", str(path))[0] == 2
        assert run_main(capsys, "snf", str(tmp_path / "missing.json"))[0] == 2

    def test_float_entry_rejected(self, capsys, tmp_path):
        path = tmp_path / "f.json"
        path.write_text("{\"rows\": 1, \"cols\": 1, \"entries\": [1.5]}")
        assert run_main(capsys, "snf", str(path))[0] == 2


class TestBatch:
    def test_two_runs_in_order(self, capsys, tmp_path):
        out_file = tmp_path / "kt.json"
        batch = [
            {"command": "example2", "m1": 1, "m2": 1, "d": 2, "format": "json"},
            {"command": "kodaira-thurston", "d": 2, "format": "json", "out": str(out_file)},
        ]
        path = tmp_path / "batch.json"
        path.write_text(json.dumps(batch))
        code, out, _ = run_main(capsys, "--batch", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["family"] == "example2"
        kt = json.loads(out_file.read_text())
        assert kt["invariants"]["b1"] == 3

    def test_bad_entry_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "batch.json"
        path.write_text(json.dumps([{"command": "example2", "bogus": 1}]))
        assert run_main(capsys, "--batch", str(path))[0] == 2
        path.write_text(json.dumps({"command": "example2"}))
        assert run_main(capsys, "--batch", str(path))[0] == 2

    def test_float_area_rejected(self, capsys, tmp_path):
        path = tmp_path / "batch.json"
        path.write_text(json.dumps([{"command": "example2", "area1": 0.5}]))
        assert run_main(capsys, "--batch", str(path))[0] == 2


class TestLibraryCommands:
    def test_cmd_example2(self):
        report, code = cmd_example2(RunConfig(command="example2", m1=2, m2=2, d=3))
        assert code == 0
        assert report.pi_lower_bound == 72

    def test_cmd_tower7(self):
        (s1, s2), code = cmd_tower7(RunConfig(command="tower7", d=3))
        assert code == 0
        assert s2.chern_pairings[0][1] == -4

    def test_cmd_catalog(self):
        (entries, verdicts), code = cmd_catalog(RunConfig(command="catalog", d=2))
        assert code == 0
        assert len(entries) == 4
        assert all(v.passed for v in verdicts)

    def test_cmd_snf_missing_path(self):
        from coverhom.errors import DomainError

        with pytest.raises(DomainError):
            cmd_snf(RunConfig(command="snf"))


def test_module_invocation_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "coverhom", "example2", "-d", "2", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["invariants"]["pi_lower_bound"] == 4
