import csv
import io
import json
import math

import pytest

from shellcasimir.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSphereEnergy:
    def test_default_reproduces_headline(self, capsys):
        code, out, _ = run_cli(capsys, "sphere-energy")
        assert code == 0
        payload = json.loads(out)
        assert payload["units"] == "hbar*c/R"
        assert abs(payload["total"] - 0.04668) <= 5e-5
        assert payload["total"] == pytest.approx(
            payload["diameter_sum"] + payload["generic_sum"], rel=1e-8)

    def test_byte_identical_reruns(self, capsys):
        _, out1, _ = run_cli(capsys, "sphere-energy")
        _, out2, _ = run_cli(capsys, "sphere-energy")
        assert out1 == out2

    def test_breakdown_csv(self, capsys):
        code, out, _ = run_cli(capsys, "sphere-energy", "--breakdown", "--terms", "10")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        kinds = {r["kind"] for r in rows}
        assert kinds == {"diameter", "generic"}
        assert len([r for r in rows if r["kind"] == "diameter"]) == 10
        assert len([r for r in rows if r["kind"] == "generic"]) == 9

    def test_bad_plan_is_computation_error(self, capsys):
        code, _, err = run_cli(capsys, "sphere-energy", "--terms", "3")
        assert code == 1
        assert "error" in err

    def test_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "sphere-energy", "--format", "text")
        assert code == 0
        assert out.startswith("diameter_sum = ")
        assert "units = hbar*c/R" in out


class TestCylinderEnergy:
    def test_default_quadratic(self, capsys):
        code, out, _ = run_cli(capsys, "cylinder-energy")
        assert code == 0
        payload = json.loads(out)
        assert payload["units"] == "hbar*c*L/R^2"
        assert payload["variant"] == "semiclassical-quadratic"
        assert payload["total"] == pytest.approx(-0.0135944, abs=1e-6)

    def test_unbounded_vanishes(self, capsys):
        code, out, _ = run_cli(capsys, "cylinder-energy", "--variant", "unbounded")
        assert code == 0
        assert json.loads(out)["total"] == 0.0

    def test_expfit(self, capsys):
        _, out, _ = run_cli(capsys, "cylinder-energy", "--variant", "expfit")
        assert json.loads(out)["total"] == pytest.approx(-0.013533, abs=1e-5)

    def test_breakdown_rows(self, capsys):
        _, out, _ = run_cli(capsys, "cylinder-energy", "--breakdown", "--terms", "6")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 6
        assert float(rows[0]["term"]) == pytest.approx(-0.5, abs=1e-9)


class TestTables:
    def test_orbit_table_columns_and_diameter_row(self, capsys):
        code, out, _ = run_cli(capsys, "orbit-table", "--n-max", "4")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0].keys()) == [
            "n", "w", "z_bar", "length_over_R", "maslov_D", "maslov_N", "em_contributes"]
        first = rows[0]
        assert (first["n"], first["w"]) == ("2", "1")
        assert float(first["z_bar"]) == 0.0
        assert float(first["length_over_R"]) == 4.0

    def test_orbit_table_em_only(self, capsys):
        _, out, _ = run_cli(capsys, "orbit-table", "--n-max", "5", "--em-only")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert all(int(r["n"]) % 2 == 0 for r in rows)

    def test_wkb_zeros_contains_anomaly(self, capsys):
        _, out, _ = run_cli(capsys, "wkb-zeros", "--ell-max", "0", "--n-max", "0")
        rows = list(csv.DictReader(io.StringIO(out)))
        flagged = [r for r in rows if r["flag"] == "anomaly"]
        assert len(flagged) == 1
        assert flagged[0]["bc"] == "neumann"
        assert float(flagged[0]["x_wkb"]) == pytest.approx(math.pi / 4.0, rel=1e-8)
        assert flagged[0]["x_exact"] == "0"

    def test_alpha_integral_grid(self, capsys):
        _, out, _ = run_cli(capsys, "alpha-integral", "--x-values", "0,1,4")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 3
        assert float(rows[0]["exact"]) == 1.0
        assert float(rows[2]["exp_fit"]) == pytest.approx(math.exp(-math.pi), rel=1e-8)

    def test_convergence_table(self, capsys):
        _, out, _ = run_cli(capsys, "convergence", "--series", "cylinder", "--terms", "12")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 12
        assert rows[-1]["limit"] != ""
        assert float(rows[-1]["limit"]) == pytest.approx(-0.390473, abs=1e-5)


class TestVerifyAndErrors:
    def test_verify_exit_matches_pass_fail_lines(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        lines = [l for l in out.splitlines() if l.startswith("[")]
        assert len(lines) == 10
        n_fail = sum(1 for l in lines if l.startswith("[FAIL]"))
        assert code == (0 if n_fail == 0 else 1)
        assert sum(1 for l in lines if l.startswith("[PASS]")) >= 9

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = run_cli(capsys, "sphere-energy", "--out", str(target))
        assert code == 0
        assert out == ""
        assert abs(json.loads(target.read_text())["total"] - 0.04668) <= 5e-5

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2
