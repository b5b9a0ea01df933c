import math

import pytest

from nsbell.cli_main import run
from nsbell.sim.features.spacetime import spacetime_command_registry  # noqa: F401  register the feature before its tools
from nsbell.sim.features.spacetime.tools.biref_tool import BIREF_COLUMNS
from nsbell.sim.features.spacetime.tools.tetrad_check_tool import TETRAD_COLUMNS


class TestBirefCommand:
    def test_default_sweep(self, tmp_path, read_result):
        """Radial emission has no phase; the encoded singlet ignores the phase everywhere"""
        out = tmp_path / "biref.csv"
        assert run(["biref", "--out", str(out)]) == 0

        _, header, rows = read_result(out)
        assert header == BIREF_COLUMNS
        assert [float(row["mu"]) for row in rows] == [0.1, 0.25, 0.5, 0.75, 1.0]
        assert float(rows[-1]["delta_phi"]) == 0.0
        assert float(rows[-1]["s_physical_after"]) == pytest.approx(2.5, abs=1e-12)
        for row in rows:
            assert float(row["s_logical_after"]) == pytest.approx(2.5, abs=1e-10)
        for row in rows[:-1]:
            assert float(row["delta_phi"]) < 0.0

    def test_parameters_echoed_per_row(self, tmp_path, read_result):
        out = tmp_path / "biref.csv"
        args = ["--k2", "2", "--m-tilde", "0.5", "--wavelength", "3", "--radius", "1.5", "--mu", "0.5"]
        assert run(["biref", "--out", str(out)] + args) == 0

        _, _, rows = read_result(out)
        row = rows[0]
        assert (float(row["k2"]), float(row["m_tilde"]), float(row["wavelength"]), float(row["radius"])) == (
            2.0, 0.5, 3.0, 1.5,
        )
        expected = math.sqrt(2 / 3) * 2 * math.pi * 2 * 0.5 / (3 * 1.5**2) * 2.5 * (-0.5) / 1.5
        assert float(row["delta_phi"]) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("extra", [["--mu", "1.5"], ["--mu", "0"], ["--mu", "a"], ["--k2", "-1"]])
    def test_usage_errors(self, tmp_path, extra):
        assert run(["biref", "--out", str(tmp_path / "b.csv")] + extra) == 1


class TestTetradCheckCommand:
    def test_default_radii_pass(self, tmp_path, read_result):
        """Identity control plus the static tetrad at 3M, 4M, 10M and 100M"""
        out = tmp_path / "tetrad.csv"
        assert run(["tetrad-check", "--out", str(out)]) == 0

        _, header, rows = read_result(out)
        assert header == TETRAD_COLUMNS
        assert rows[0]["tetrad"] == "identity"
        assert float(rows[0]["frame_residual"]) == 0.0
        assert [float(row["r"]) for row in rows[1:]] == [3.0, 4.0, 10.0, 100.0]
        for row in rows:
            assert row["passed"] == "true"
            assert float(row["frame_residual"]) <= 1e-12

    def test_radii_scale_with_mass(self, tmp_path, read_result):
        out = tmp_path / "tetrad.csv"
        assert run(["tetrad-check", "--out", str(out), "--mass", "2", "--radii", "4"]) == 0

        _, _, rows = read_result(out)
        assert float(rows[-1]["r"]) == 8.0

    def test_radius_inside_horizon_is_usage_error(self, tmp_path):
        assert run(["tetrad-check", "--out", str(tmp_path / "t.csv"), "--radii", "1.5"]) == 1
