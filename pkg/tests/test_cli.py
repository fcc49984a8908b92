import json
import subprocess
import sys

import pytest

from upadic.cli import main


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "upadic.cli", *args],
                          capture_output=True, text=True)


def test_ipoly_json(tmp_path):
    out = tmp_path / "ip.json"
    assert main(["ipoly", "--prime", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    terms = {(t["i"], t["j"]): t["coeff"] for t in doc["terms"]}
    assert terms[(2, 1)] == "-4096"
    assert terms[(1, 2)] == "-1"


def test_u_matrix_cross_method(tmp_path):
    out = tmp_path / "m.json"
    rc = main(["u-matrix", "--prime", "3", "--size", "6", "--method", "both",
               "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["entries"][0][0] == "90"
    assert doc["sign_convention"] == "negated-log-derivative"


def test_u_matrix_scaled_quadint(tmp_path):
    out = tmp_path / "m.json"
    rc = main(["u-matrix", "--prime", "3", "--size", "4", "--method", "genfun",
               "--scaled", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["basis"] == "scaled-3^(3m/2)"
    assert set(doc["entries"][0][0]) == {"a", "b"}


def test_u_matrix_csv(tmp_path):
    out = tmp_path / "m.csv"
    rc = main(["u-matrix", "--prime", "2", "--size", "4", "--method", "genfun",
               "--format", "csv", "--out", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "i,j,valuation,entry_bound"
    assert lines[1].startswith("1,1,3,3")      # v_2(24) = 3 = bound


def test_unsupported_prime_usage_error():
    proc = run_cli("u-matrix", "--prime", "11", "--size", "4")
    assert proc.returncode == 2


def test_charpoly_and_newton(tmp_path):
    out = tmp_path / "q.json"
    rc = main(["charpoly", "--prime", "3", "--terms", "4", "--size", "16",
               "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["coefficients"][0] == "1"
    certs = {c["m"]: c for c in doc["certified"]}
    assert certs[1]["valuation"] == "2"
    assert certs[4]["valuation"] == "26"

    nout = tmp_path / "np.json"
    ncsv = tmp_path / "np.csv"
    rc = main(["newton", "--prime", "3", "--terms", "4", "--size", "16",
               "--csv", str(ncsv), "--out", str(nout)])
    assert rc == 0
    doc = json.loads(nout.read_text())
    assert [1, "2"] in doc["vertices"]
    assert [4, "26"] in doc["vertices"]
    header = ncsv.read_text().splitlines()[0]
    assert header == "m,valuation,parabola,secant,certified"


def test_twist_command(tmp_path):
    out = tmp_path / "t.json"
    rc = main(["twist", "--weight", "18", "--size", "8", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["subdiagonal_coefficients"][0] == "1"
    assert doc["n_parameter"] == 1


def test_verify_suite_exit_code(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["verify", "--suite", "mod3", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["pass"] is True
    assert all(c["pass"] for s in doc["suites"] for c in s["claims"])
    # every claim carries a stable id and a statement
    for s in doc["suites"]:
        for c in s["claims"]:
            assert c["id"] and c["statement"]


def test_verify_reports_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    env_runs = []
    for path in (a, b):
        proc = run_cli("verify", "--suite", "mod3", "--out", str(path))
        env_runs.append(proc.returncode)
    assert env_runs == [0, 0]
    assert a.read_bytes() == b.read_bytes()


def test_cli_entrypoint_help():
    proc = run_cli("--help")
    assert proc.returncode == 0
    for sub in ("u-matrix", "ipoly", "charpoly", "newton", "twist", "verify"):
        assert sub in proc.stdout


def test_newton_trivial_and_p2(tmp_path):
    out = tmp_path / "n0.json"
    assert main(["newton", "--prime", "3", "--terms", "0", "--size", "12",
                 "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["vertices"] == [[0, "0"]] and doc["sides"] == []
    out2 = tmp_path / "n2.json"
    assert main(["newton", "--prime", "2", "--terms", "6", "--size", "16",
                 "--out", str(out2)]) == 0


def test_threads_env_parallel_suites(tmp_path, monkeypatch):
    # UPADIC_THREADS caps worker processes; the assembled report must be
    # identical to the sequential one
    import os
    from upadic.verify import run_suites
    seq, ok1 = run_suites(["mod3"], parallel=1)
    monkeypatch.setenv("UPADIC_THREADS", "2")
    par, ok2 = run_suites(["mod3", "mod3"], parallel=2)
    assert ok1 and ok2
    assert par["suites"][0]["claims"] == par["suites"][1]["claims"]
    assert par["suites"][0]["claims"] == seq["suites"][0]["claims"]
