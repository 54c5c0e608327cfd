import io
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from relkmeans import ConvergenceError, format_input
from relkmeans.cli import EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main
from relkmeans.oracle import triangle_violator

DATA = Path(__file__).parent / "data"


def run(args, capsys):
    status = main([str(a) for a in args])
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_single_cluster_golden(capsys):
    status, out, err = run(["--clusters", 1, "--input", DATA / "two_points.txt"], capsys)
    assert status == EXIT_OK
    assert out == (DATA / "two_points_k1.out").read_text()
    assert "21 attempts" in err


def test_three_points_golden(capsys):
    status, out, _ = run(["-N", 2, "--input", DATA / "three_points_1d.txt", "--threads", 2], capsys)
    assert status == EXIT_OK
    assert out == (DATA / "three_points_1d_k2.out").read_text()


def test_output_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    status, out, _ = run(["-N", 1, "--input", DATA / "two_points.txt", "--output", target], capsys)
    assert status == EXIT_OK
    assert out == ""
    assert target.read_bytes() == (DATA / "two_points_k1.out").read_bytes()


def test_stdin(monkeypatch, capsys):
    data = (DATA / "two_points.txt").read_bytes()
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(data)))
    status, out, _ = run(["-N", 1], capsys)
    assert status == EXIT_OK
    assert out.startswith("# value=0.5;")


@pytest.mark.parametrize(
    "args",
    [
        ["--clusters", 0],
        ["--clusters", "two"],
        [],
        ["-N", 2, "--max-failed", 0],
        ["-N", 2, "--threads", -1],
        ["-N", 2, "--seed", -5],
        ["-N", 2, "--bogus"],
    ],
)
def test_usage_errors(args, capsys):
    status, out, err = run(args + ["--input", DATA / "two_points.txt"], capsys)
    assert status == EXIT_USAGE
    assert out == ""
    assert err


def test_more_clusters_than_objects(capsys):
    status, _, err = run(["-N", 3, "--input", DATA / "two_points.txt"], capsys)
    assert status == EXIT_USAGE
    assert "--clusters 3" in err


def test_malformed_input(capsys):
    status, out, err = run(["-N", 1, "--input", DATA / "malformed" / "asymmetric.txt"], capsys)
    assert status == EXIT_INPUT
    assert out == ""
    assert "line 4" in err


def test_missing_input(tmp_path, capsys):
    status, _, err = run(["-N", 1, "--input", tmp_path / "nope.txt"], capsys)
    assert status == EXIT_INPUT
    assert "--input" in err


def test_spread_reports_beta(tmp_path, capsys):
    A = triangle_violator(np.random.default_rng(3), 8)
    path = tmp_path / "violator.txt"
    path.write_text(format_input([f"o{i}" for i in range(8)], np.sqrt(A)))
    status, out, err = run(["-N", 2, "--spread", "--input", path, "--threads", 1], capsys)
    assert status == EXIT_OK
    assert "beta = " in err
    assert float(out.split("=")[1].split(";")[0]) >= 0


def test_convergence_failure(monkeypatch, capsys):
    def fail(A):
        raise ConvergenceError("no luck", 1.0)

    monkeypatch.setattr("relkmeans.search.beta_spread", fail)
    status, _, err = run(["-N", 1, "--spread", "--input", DATA / "two_points.txt"], capsys)
    assert status == EXIT_NUMERIC
    assert "beta-spread" in err


def test_semicolon_name_warning(tmp_path, capsys):
    path = tmp_path / "names.txt"
    path.write_text("a;b\nc\n//\n0;1\n1;0\n")
    status, out, err = run(["-N", 1, "--input", path], capsys)
    assert status == EXIT_OK
    assert "warning" in err
    assert "a;b;0\n" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "relkmeans", "-N", "1", "--input", str(DATA / "two_points.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (DATA / "two_points_k1.out").read_text()
