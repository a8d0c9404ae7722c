"""Command-line interface: records, determinism, exit codes."""

import json
import math

import pytest

from conevol.cli import RunRecord, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(out: str):
    lines = out.strip().split("\n")
    assert lines[0] == ("problem,k,alpha_rad,method,volume,error_estimate,"
                        "evaluations,seed,n_terms")
    return [RunRecord.from_csv_row(line) for line in lines[1:]]


class TestVolume:
    def test_centered_cone_cylinder(self, capsys):
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-cylinder",
                               "--k", "0", "--alpha-deg", "45",
                               "--method", "closed")
        assert code == 0
        (record,) = parse_csv(out)
        assert record.problem == "cone_cylinder"
        assert record.method == "closed"
        assert record.volume == pytest.approx(2 * math.pi / 3, abs=1e-12)
        assert record.seed is None
        assert record.n_terms is None

    def test_centered_cone_sphere_series(self, capsys):
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0", "--alpha-deg", "60",
                               "--method", "series")
        assert code == 0
        (record,) = parse_csv(out)
        assert record.volume == pytest.approx(math.pi / 3, abs=1e-12)
        assert record.n_terms == 1

    def test_semi_analytic_json_matches_quad_2d(self, capsys):
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0.4", "--alpha-deg", "60",
                               "--method", "semi-analytic", "--json")
        assert code == 0
        semi = RunRecord.from_json_line(out.strip())
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0.4", "--alpha-deg", "60",
                               "--method", "quad-2d", "--json")
        assert code == 0
        quad = RunRecord.from_json_line(out.strip())
        assert abs(semi.volume - quad.volume) <= 1e-7

    def test_angle_unit_equivalence(self, capsys):
        _, out_deg, _ = run_cli(capsys, "volume", "--problem", "cone-cylinder",
                                "--k", "0.3", "--alpha-deg", "30",
                                "--method", "closed")
        alpha_rad = 30.0 * math.pi / 180.0
        _, out_rad, _ = run_cli(capsys, "volume", "--problem", "cone-cylinder",
                                "--k", "0.3", "--alpha-rad", repr(alpha_rad),
                                "--method", "closed")
        (deg,) = parse_csv(out_deg)
        (rad,) = parse_csv(out_rad)
        assert abs(deg.volume - rad.volume) <= 1e-15

    def test_monte_carlo_record_carries_seed(self, capsys):
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0", "--alpha-deg", "90",
                               "--method", "mc", "--samples", "200000",
                               "--seed", "7")
        assert code == 0
        (record,) = parse_csv(out)
        assert record.seed == 7
        assert record.evaluations == 200000
        assert abs(record.volume - 2 * math.pi / 3) <= 3 * record.error_estimate

    def test_zeroth_method(self, capsys):
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0.2", "--alpha-deg", "45",
                               "--method", "zeroth")
        assert code == 0
        (record,) = parse_csv(out)
        assert record.evaluations == 0


class TestSweep:
    def test_grid_shape_and_order(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--problem", "cone-cylinder",
                               "--method", "closed", "--k-grid", "0:1:3",
                               "--alpha-grid", "30:90:3")
        assert code == 0
        records = parse_csv(out)
        assert len(records) == 9
        assert [r.k for r in records] == [0.0, 0.0, 0.0, 0.5, 0.5, 0.5,
                                          1.0, 1.0, 1.0]
        alphas = [r.alpha_rad for r in records[:3]]
        assert alphas == sorted(alphas)
        # flat-cone rows are numerically zero
        for record in records[2::3]:
            assert abs(record.volume) < 1e-15

    def test_centered_sphere_sweep_is_exact_sector(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--problem", "cone-sphere",
                               "--method", "series", "--k-grid", "0:0:1",
                               "--alpha-grid", "15:90:6")
        assert code == 0
        records = parse_csv(out)
        assert len(records) == 6
        for record in records:
            want = 2 * math.pi / 3 * (1 - math.cos(record.alpha_rad))
            assert record.volume == pytest.approx(want, abs=1e-12)

    def test_byte_identical_reruns(self, capsys):
        argv = ["sweep", "--problem", "cone-sphere", "--method", "mc",
                "--k-grid", "0:0.8:2", "--alpha-grid", "30:90:2",
                "--samples", "50000", "--seed", "7"]
        _, first, _ = run_cli(capsys, *argv)
        _, second, _ = run_cli(capsys, *argv)
        assert first == second

    def test_radian_grid_flag(self, capsys):
        _, out_deg, _ = run_cli(capsys, "sweep", "--problem", "cone-cylinder",
                                "--method", "closed", "--k-grid", "0.5:0.5:1",
                                "--alpha-grid", "90:90:1")
        _, out_rad, _ = run_cli(capsys, "sweep", "--problem", "cone-cylinder",
                                "--method", "closed", "--k-grid", "0.5:0.5:1",
                                "--alpha-grid", "1.5707963267948966:1.5707963267948966:1",
                                "--radians")
        (deg,) = parse_csv(out_deg)
        (rad,) = parse_csv(out_rad)
        assert deg.alpha_rad == pytest.approx(rad.alpha_rad, abs=1e-15)


class TestRoundTrip:
    def test_csv_round_trip_is_byte_identical(self, capsys):
        _, out, _ = run_cli(capsys, "sweep", "--problem", "cone-cylinder",
                            "--method", "quad-r3", "--k-grid", "0:1:4",
                            "--alpha-grid", "20:80:3")
        lines = out.strip().split("\n")
        for line in lines[1:]:
            assert RunRecord.from_csv_row(line).to_csv_row() == line

    def test_json_round_trip_is_byte_identical(self, capsys):
        _, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                            "--k", "0.37", "--alpha-deg", "55",
                            "--method", "semi-analytic", "--json")
        line = out.strip()
        assert RunRecord.from_json_line(line).to_json_line() == line
        # and the emitted text is valid JSON with the exact field set
        parsed = json.loads(line)
        assert list(parsed) == ["problem", "k", "alpha_rad", "method", "volume",
                                "error_estimate", "evaluations", "seed", "n_terms"]


class TestExitCodes:
    def test_invalid_method_for_problem(self, capsys):
        code, _, _ = run_cli(capsys, "volume", "--problem", "cone-cylinder",
                             "--k", "0.5", "--alpha-deg", "45",
                             "--method", "series")
        assert code == 2

    def test_out_of_domain_offset(self, capsys):
        code, _, err = run_cli(capsys, "volume", "--problem", "cone-cylinder",
                               "--k", "1.5", "--alpha-deg", "45",
                               "--method", "closed")
        assert code == 2
        assert "k" in err

    def test_missing_angle(self, capsys):
        code, _, _ = run_cli(capsys, "volume", "--problem", "cone-cylinder",
                             "--k", "0.5", "--method", "closed")
        assert code == 2

    def test_bad_grid_string(self, capsys):
        code, _, _ = run_cli(capsys, "sweep", "--problem", "cone-cylinder",
                             "--method", "closed", "--k-grid", "0-1-3",
                             "--alpha-grid", "30:90:3")
        assert code == 2

    def test_strict_truncation_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0.97", "--alpha-deg", "90",
                               "--method", "series", "--terms", "8",
                               "--tol", "1e-14", "--strict")
        assert code == 3
        assert "numerical error" in err

    def test_truncation_without_strict_succeeds(self, capsys, recwarn):
        code, out, _ = run_cli(capsys, "volume", "--problem", "cone-sphere",
                               "--k", "0.97", "--alpha-deg", "90",
                               "--method", "series", "--terms", "8",
                               "--tol", "1e-14")
        assert code == 0
        (record,) = parse_csv(out)
        assert record.n_terms == 8

    def test_verify_fast_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--fast")
        assert code == 0
        assert "checks passed" in out
        assert "FAIL" not in out
