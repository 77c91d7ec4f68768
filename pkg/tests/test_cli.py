"""
Tests for the command-line surface: outputs, formats and exit codes
"""

import shlex
from pathlib import Path

import numpy as np
import pytest
import yaml
from scipy.integrate import trapezoid

from dynamics import critical


class TestDynamics:
    def test_kstar(self, run_cli):
        result = run_cli("dynamics", "kstar", "--nu", "2")
        assert result.code == 0
        payload = result.json()
        assert payload["schema"] == 1
        assert payload["kstar"] == pytest.approx(0.65, abs=0.01)
        assert payload["omega_star"] == pytest.approx(payload["kappa"] / 2)

    def test_orbit_table(self, run_cli):
        result = run_cli("dynamics", "orbit-table", "--nu", "2", "--k", "0.5", "1.0", "2.0")
        header, rows = result.rows()
        assert header == ["k", "b1", "b2", "T", "I", "v"]
        assert len(rows) == 3
        assert float(rows[0][2]) == pytest.approx(3.0 ** 0.5)
        assert rows[1][3] == ""

    def test_orbit_table_as_json(self, run_cli):
        result = run_cli("--format", "json", "dynamics", "orbit-table", "--nu", "3", "--parity", "odd", "--n", "5")
        payload = result.json()
        assert payload["command"] == "dynamics orbit-table"
        assert [row["k"] for row in payload["rows"]] == pytest.approx([-0.9, -0.45, 0.0, 0.45, 0.9])

    def test_trajectory_closes_at_kstar(self, run_cli):
        result = run_cli("dynamics", "trajectory", "--nu", "2", "--k", "kstar", "--periods", "3", "--stride", "100")
        assert result.code == 0
        header, rows = result.rows()
        assert header == ["t", "x1", "x2", "xi1", "xi2", "energy"]
        data = np.array(rows, dtype=float)
        assert abs(data[-1, 2] - data[0, 2]) <= 1e-6
        assert abs(data[-1, 1] - data[0, 1]) <= 1e-5
        assert np.ptp(data[:, 5]) <= 1e-8

    def test_trajectory_svg(self, run_cli, tmp_path):
        target = tmp_path / "orbit.svg"
        result = run_cli("--format", "svg", "-o", str(target), "dynamics", "trajectory", "--nu", "2",
                         "--k", "0.3", "--steps-per-period", "400")
        assert result.code == 0 and result.out == ""
        assert target.read_text().startswith("<?xml")
        assert "<polyline" in target.read_text()

    def test_odd_orbit_table_is_antisymmetric(self, run_cli):
        result = run_cli("dynamics", "orbit-table", "--nu", "3", "--parity", "odd", "--k-min", "-0.9",
                         "--k-max", "0.9", "--n", "19")
        assert result.code == 0
        header, rows = result.rows()
        v = np.array([float(row[header.index("v")]) for row in rows])
        assert len(v) == 19
        np.testing.assert_allclose(v, -v[::-1], atol=1e-8)

    def test_orbit_table_needs_two_points(self, run_cli):
        result = run_cli("dynamics", "orbit-table", "--nu", "2", "--n", "0")
        assert result.code == 2
        assert result.error_json()["error"] == "usage_error"

    def test_trajectory_svg_alongside_csv(self, run_cli, tmp_path):
        target = tmp_path / "orbit.svg"
        result = run_cli("dynamics", "trajectory", "--nu", "2", "--k", "0.3", "--steps-per-period", "400",
                         "--stride", "100", "--svg", str(target))
        assert result.code == 0
        assert result.rows()[0] == ["t", "x1", "x2", "xi1", "xi2", "energy"]
        assert "<polyline" in target.read_text()


class TestSpectrum:
    def test_eigs_pairs_methods(self, run_cli):
        result = run_cli("spectrum", "eigs", "--nu", "2", "--xi2", "0.65", "--hbar", "0.05")
        assert result.code == 0
        header, rows = result.rows()
        assert header == ["n", "lambda_fd", "lambda_bs", "delta"]
        deltas = [abs(float(row[3])) for row in rows if row[3]]
        assert deltas and max(deltas) <= 0.01

    def test_eigs_window_across_touching_level(self, run_cli):
        result = run_cli("spectrum", "eigs", "--nu", "2", "--xi2", "0.9", "--hbar", "0.05")
        assert result.code == 3
        assert result.error_json()["error"] == "window_invalid"

    def test_n0(self, run_cli):
        payload = run_cli("spectrum", "n0", "--nu", "2", "--xi2", "0.65", "--hbar", "0.1").json()
        assert isinstance(payload["n0"], int)
        assert abs(payload["n0"] - payload["n0_weyl"]) <= 2

    def test_n0_below_the_band(self, run_cli):
        payload = run_cli("spectrum", "n0", "--nu", "2", "--xi2", "-2", "--hbar", "0.3").json()
        assert payload["n0"] == 0

    @pytest.mark.slow
    def test_gaps_bottom_exponent(self, run_cli):
        result = run_cli("spectrum", "gaps", "--nu", "2", "--xi2", "0", "--hbar-list", "0.2,0.1,0.05,0.025")
        assert result.code == 0
        assert result.json()["exponent"] == pytest.approx(4.0 / 3.0, abs=0.15)

    def test_curves_long_format(self, run_cli):
        result = run_cli("spectrum", "curves", "--nu", "2", "--hbar", "0.2", "--xi2-min", "0.4",
                         "--xi2-max", "0.9", "--n-points", "5", "--levels", "2")
        header, rows = result.rows()
        assert header == ["xi2", "n", "parity", "lambda", "d1", "d2"]
        assert len(rows) == 10
        assert rows[0][4] == "" and rows[1][4] != ""

    def test_kstar_hbar(self, run_cli):
        payload = run_cli("spectrum", "kstar-hbar", "--nu", "2", "--hbar", "0.2").json()
        assert abs(payload["shift"]) < 0.4
        assert payload["kstar_hbar"] == pytest.approx(payload["kstar"] + payload["shift"])

    def test_resource_limit_from_settings_file(self, run_cli, tmp_path):
        settings = tmp_path / "tight.yaml"
        settings.write_text(yaml.safe_dump({"grid": {"max_points": 100}}))
        result = run_cli("--settings", str(settings), "spectrum", "n0", "--nu", "2", "--xi2", "0.65",
                         "--hbar", "0.05")
        assert result.code == 3
        assert result.error_json()["error"] == "resource_limit"


class TestAsympt:
    def test_gfun(self, run_cli):
        header, rows = run_cli("asympt", "gfun", "--n", "101").rows()
        assert header == ["t", "G", "G1"]
        data = np.array(rows, dtype=float)
        assert len(data) == 101
        assert data[0, 1] == pytest.approx(data[-1, 1], abs=1e-8)
        assert abs(trapezoid(data[:, 1], data[:, 0])) <= 5e-3

    def test_correction(self, run_cli):
        payload = run_cli("asympt", "correction", "--nu", "2", "--gamma-bar", "0.1", "--hbar", "0.3",
                          "--no-extrapolate").json()
        assert payload["corr_exact"] == pytest.approx(payload["n0_integral"] - payload["emw0_integral"])
        assert payload["mu"] == pytest.approx(100.0)

    @pytest.mark.slow
    def test_scaling_residual_decreases(self, run_cli):
        result = run_cli("asympt", "scaling", "--nu", "2", "--hbar-list", "0.1,0.05,0.025", "--gamma-bar", "0.1")
        assert result.code == 0
        header, rows = result.rows()
        assert [float(row[header.index("hbar")]) for row in rows] == [0.1, 0.05, 0.025]
        scaled = [float(row[header.index("h")]) * abs(float(row[header.index("residual")])) for row in rows]
        assert scaled[0] > scaled[1] > scaled[2]

    def test_counting_support_needs_two_values(self, run_cli):
        result = run_cli("asympt", "counting", "--nu", "2", "--gamma-bar", "0.1", "--hbar", "0.3",
                         "--support", "1,2,3")
        assert result.code == 2
        assert result.error_json()["error"] == "usage_error"


class TestUsage:
    def test_missing_command(self, run_cli):
        assert run_cli().code == 2

    def test_non_integer_nu_for_the_operator(self, run_cli):
        result = run_cli("spectrum", "n0", "--nu", "2.5", "--xi2", "0.0", "--hbar", "0.1")
        assert result.code == 2

    def test_unknown_flag_reports_json(self, run_cli):
        result = run_cli("dynamics", "kstar", "--bogus")
        assert result.code == 2
        error = result.error_json()
        assert error["error"] == "usage_error"
        assert error["code"] == 2
        assert "--bogus" in error["message"]

    def test_missing_required_flag_reports_json(self, run_cli):
        result = run_cli("spectrum", "n0", "--xi2", "0.0", "--hbar", "0.1")
        assert result.code == 2
        assert result.error_json()["error"] == "usage_error"

    def test_invalid_model(self, run_cli):
        result = run_cli("dynamics", "kstar", "--nu", "1")
        assert result.code == 2
        assert result.error_json()["error"] == "invalid_parameters"

    def test_output_file(self, run_cli, tmp_path):
        target = tmp_path / "out" / "kstar.json"
        result = run_cli("-o", str(target), "dynamics", "kstar", "--nu", "3", "--parity", "odd")
        assert result.code == 0 and result.out == ""
        assert '"kstar": 0.0' in target.read_text()


class TestVerify:
    @staticmethod
    def _catalogue(path, tolerance):
        path.write_text(yaml.safe_dump({"criteria": [{
            "id": "c04_large_k", "title": "Large k", "target": "ratios near 1", "quick": True,
            "params": {"nu": 2, "k": 200.0, "tolerance": tolerance},
        }]}))
        return str(path)

    def test_passing_catalogue(self, run_cli, tmp_path):
        result = run_cli("verify", "--catalogue", self._catalogue(tmp_path / "ok.yaml", 0.05))
        assert result.code == 0
        payload = result.json()
        assert payload["passed"] is True
        assert payload["results"][0]["pass"] is True

    def test_failing_catalogue(self, run_cli, tmp_path):
        result = run_cli("verify", "--catalogue", self._catalogue(tmp_path / "strict.yaml", 1e-12))
        assert result.code == 1
        assert result.json()["results"][0]["measured"]["T_ratio"] > 0

    @pytest.mark.slow
    def test_quick_suite(self, run_cli):
        result = run_cli("verify", "--quick")
        payload = result.json()
        assert [r["criterion"] for r in payload["results"] if not r["pass"]] == []
        assert result.code == 0

    def test_kstar_runtime_is_gated(self, run_cli, tmp_path):
        catalogue = tmp_path / "instant.yaml"
        catalogue.write_text(yaml.safe_dump({"criteria": [{
            "id": "c01_kstar", "title": "Critical momentum", "target": "0.65 +- 0.01", "quick": True,
            "params": {"nu": 2, "parity": "even", "expected": 0.65, "tolerance": 0.01, "max_seconds": 0.0},
        }]}))
        result = run_cli("verify", "--catalogue", str(catalogue))
        assert result.code == 1
        measured = result.json()["results"][0]["measured"]
        assert measured["error"] <= 0.01
        assert measured["within_time"] is False

    def test_tampered_drift_fails_kstar(self, run_cli, tmp_path, monkeypatch):
        drift = critical.drift_integral
        monkeypatch.setattr(critical, "drift_integral", lambda sym, k: drift(sym, k - 0.1))
        catalogue = tmp_path / "kstar.yaml"
        catalogue.write_text(yaml.safe_dump({"criteria": [{
            "id": "c01_kstar", "title": "Critical momentum", "target": "0.65 +- 0.01", "quick": True,
            "params": {"nu": 2, "parity": "even", "expected": 0.65, "tolerance": 0.01, "max_seconds": 1.0},
        }]}))
        result = run_cli("verify", "--catalogue", str(catalogue))
        assert result.code == 1
        outcome = result.json()["results"][0]
        assert outcome["criterion"] == "c01_kstar"
        assert outcome["pass"] is False
        assert outcome["measured"]["error"] > 0.05


def _readme_commands():
    text = (Path(__file__).resolve().parents[1] / "README.md").read_text()
    return [line for line in text.splitlines() if line.startswith("magnetic-weyl ") and "[" not in line]


@pytest.mark.slow
@pytest.mark.parametrize("command", _readme_commands())
def test_readme_examples_run(run_cli, tmp_path, monkeypatch, command):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "my_criteria.yaml").write_text(yaml.safe_dump({"criteria": [{
        "id": "c04_large_k", "title": "Large k", "target": "ratios near 1", "quick": True,
        "params": {"nu": 2, "k": 200.0, "tolerance": 0.05},
    }]}))
    result = run_cli(*shlex.split(command)[1:])
    assert result.code == 0, result.err
