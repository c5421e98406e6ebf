"""Command-line interface: parsing, CSV contracts, exit codes."""

import json
import math

import pytest

from grazebeam.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestRayTrace:
    def test_range_produces_rows_and_null_hamiltonian(self, capsys):
        code, out = run_cli(capsys, "ray", "trace", "--y=-2:2:0.5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "y,x,t,xi,eta,tau,hamiltonian"
        assert len(lines) == 1 + 9
        for row in lines[1:]:
            assert abs(float(row.split(",")[-1])) <= 1e-12
        last = lines[-1].split(",")
        assert float(last[0]) == 2.0 and float(last[1]) == 1.0

    def test_malformed_range_is_usage_error(self, capsys):
        code, _ = run_cli(capsys, "ray", "trace", "--y", "nope:1")
        assert code == 1


class TestBeamCommands:
    def test_on_ray_rows(self, capsys):
        code, out = run_cli(capsys, "beam", "on-ray", "--x", "0,1")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "x,re_v,im_v,abs_v"
        assert float(rows[1].split(",")[3]) == pytest.approx(1.0)
        assert float(rows[2].split(",")[3]) == pytest.approx(29.0**-0.25)

    def test_field_grid(self, capsys):
        code, out = run_cli(capsys, "beam", "field", "--x", "0",
                            "--y", "0", "--t", "0", "--k", "10")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "x,y,t,k,re_v,im_v,abs_v"
        assert float(rows[1].split(",")[4]) == pytest.approx(1.0)


class TestGrazeW:
    def test_closed_method_row(self, capsys):
        code, out = run_cli(capsys, "graze", "w", "--x", "1",
                            "--method", "closed")
        assert code == 0
        rows = out.strip().splitlines()
        hdr = ("x,k,method,re_w,im_w,abs_w,re_closed,im_closed,rel_err,"
               "quad_err,status")
        assert rows[0] == hdr
        cells = rows[1].split(",")
        assert cells[1] == ""                  # closed rows leave k empty
        assert float(cells[5]) == pytest.approx(0.5/math.sqrt(2.0), abs=1e-12)
        assert float(cells[8]) == 0.0
        assert cells[-1] == "ok"

    def test_u_integral_ladder_decreasing(self, capsys):
        code, out = run_cli(capsys, "graze", "w", "--x", "0.5",
                            "--k", "1000,10000,100000",
                            "--method", "u-integral")
        assert code == 0
        rows = out.strip().splitlines()[1:]
        rel = [float(r.split(",")[8]) for r in rows]
        assert rel[0] > rel[1] > rel[2]

    def test_spectral_k_cap_refused(self, capsys):
        code, _ = run_cli(capsys, "graze", "w", "--x", "0.5",
                          "--k", "100000", "--method", "spectral")
        assert code == 1

    def test_byte_stable_output(self, capsys):
        args = ("graze", "w", "--x", "0.5,1", "--k", "1000",
                "--method", "u-integral")
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        assert out1 == out2

    def test_threads_do_not_change_output(self, capsys):
        args = ["graze", "w", "--x", "0.5,1", "--k", "1000,10000",
                "--method", "u-integral"]
        _, serial = run_cli(capsys, *args)
        _, pooled = run_cli(capsys, *(args + ["--threads", "4"]))
        assert serial == pooled

    def test_thread_env_override(self, capsys, monkeypatch):
        args = ["graze", "w", "--x", "0.5", "--k", "1000",
                "--method", "u-integral"]
        _, serial = run_cli(capsys, *args)
        monkeypatch.setenv("GRAZEBEAM_THREADS", "3")
        _, pooled = run_cli(capsys, *args)
        assert serial == pooled
        monkeypatch.setenv("GRAZEBEAM_THREADS", "zebra")
        code, _ = run_cli(capsys, *args)
        assert code == 1

    def test_nonpositive_tol_usage_error(self, capsys):
        code, _ = run_cli(capsys, "graze", "w", "--x", "1", "--k", "1000",
                          "--method", "u-integral", "--tol", "-1")
        assert code == 1


class TestGrazeReflected:
    def test_curve_contract(self, capsys):
        code, out = run_cli(capsys, "graze", "reflected",
                            "--x", "0.0001,1,2")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "x,abs_v,abs_w,abs_v_minus_w,ratio"
        first = rows[1].split(",")
        assert float(first[4]) == pytest.approx(0.5, abs=0.05)
        for row in rows[1:]:
            c = row.split(",")
            assert float(c[2]) == pytest.approx(
                0.5/math.sqrt(1.0 + float(c[0])), abs=1e-12)

    def test_empty_x_usage_error(self, capsys):
        code, _ = run_cli(capsys, "graze", "reflected", "--x", "")
        assert code == 1


class TestVerify:
    def test_appendix2_check_names(self, capsys):
        code, out = run_cli(capsys, "verify", "appendix2")
        assert code == 0
        rep = json.loads(out)
        names = " ".join(c["name"] for c in rep["checks"])
        for token in ("r_z[", "r_zz[", "r_zzz[", "r_zzzz[", "phi_zzz[",
                      "phi_zzzz[", "quartic_coeff["):
            assert token in names
        assert rep["overall"] is True

    def test_closedform_passes(self, capsys):
        code, out = run_cli(capsys, "verify", "closedform")
        assert code == 0
        assert json.loads(out)["overall"] is True

    def test_appendix1_reports_known_transport_failure(self, capsys):
        code, out = run_cli(capsys, "verify", "appendix1")
        rep = json.loads(out)
        assert code == 2
        assert rep["overall"] is False
        failing = [c["name"] for c in rep["checks"] if not c["passed"]]
        assert failing == ["transport_residual"]

    def test_unknown_suite_usage_error(self, capsys):
        code, _ = run_cli(capsys, "verify", "nonsense")
        assert code == 1


class TestOutput:
    def test_out_file(self, tmp_path, capsys):
        target = tmp_path/"trace.csv"
        code, _ = run_cli(capsys, "ray", "trace", "--y", "0:1:0.5",
                          "--out", str(target))
        assert code == 0
        assert target.read_text().startswith("y,x,t,xi,eta,tau")

    def test_unwritable_out_is_io_error(self, capsys):
        code, _ = run_cli(capsys, "ray", "trace", "--y", "0:1:0.5",
                          "--out", "/nonexistent-dir/trace.csv")
        assert code == 3
