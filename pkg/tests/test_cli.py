import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from epiihs.cli import main
from epiihs.quadrature import McEstimate
from epiihs.report import Check, RunReport, format_rational, load_schema, summary, tagged

from oracle_values import PI_OVER_2, ZETA

GOLDEN = Path(__file__).parent / "golden"
SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    report = json.loads(out) if out.strip() else None
    if report is not None:
        jsonschema.validate(report, SCHEMA)
    return code, report, err


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["sum", "-a", "2", "-k", "2", "-N", "2", "--method", "brute"], "sum_a2_k2_N2_brute.json"),
        (["sum", "-a", "1", "-k", "0", "-N", "5"], "sum_a1_k0_N5.json"),
        (["sum", "-a", "2", "-k", "1", "-N", "inf"], "sum_a2_k1_inf.json"),
        (["genfunc", "-m", "2", "-t", "0.5"], "genfunc_m2_t05_gamma.json"),
    ],
)
def test_golden_reports(capsys, argv, golden):
    code, report, _ = run(capsys, *argv)
    assert code == 0
    report["elapsed_ms"] = 0
    assert report == json.loads((GOLDEN / golden).read_text())


@pytest.mark.parametrize("method", ["brute", "recurrence", "partition", "series"])
def test_sum_methods_agree(capsys, method):
    code, report, _ = run(capsys, "sum", "-a", "1", "-k", "2", "-N", "3", "--method", method)
    assert code == 0
    assert report["result"] == {"type": "rational", "value": "85/36"}


def test_sum_infinite(capsys):
    code, report, _ = run(capsys, "sum", "-a", "3", "-k", "1", "-N", "inf", "--method", "series")
    assert code == 0
    assert report["result"]["value"] == pytest.approx(ZETA[3], abs=1e-15)


@pytest.mark.parametrize(
    "argv",
    [
        ["sum", "-a", "2", "-k", "1", "-N", "inf", "--method", "brute"],
        ["sum", "-a", "1", "-k", "1", "-N", "inf"],
        ["sum", "-a", "0", "-k", "1", "-N", "3"],
        ["genfunc", "-m", "2", "-t", "1.0"],
        ["genfunc", "-m", "2", "-t", "-1.5"],
        ["integrate", "-m", "3", "-k", "1", "--engine", "quad"],
        ["integrate", "-m", "2", "-k", "0", "--engine", "mc"],
        ["integrate", "-m", "2", "-k", "6", "--engine", "quad", "--U", "20"],
    ],
)
def test_invalid_input_exit_code(capsys, argv):
    code, report, err = run(capsys, *argv)
    assert code == 2
    assert report is None
    assert "error" in err


@pytest.mark.parametrize("argv", [["sum", "-a", "2", "-k", "1", "-N", "infinity"], ["sum", "-a", "2"], ["nope"]])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_enumeration_guard_exit_code(capsys):
    code, report, _ = run(capsys, "sum", "-a", "1", "-k", "8", "-N", "40", "--method", "brute")
    assert code == 3
    assert report is None


def test_genfunc_trivial(capsys):
    code, report, _ = run(capsys, "genfunc", "-m", "2", "-t", "0")
    assert code == 0
    assert report["result"] == {"type": "complex", "re": 1.0, "im": 0.0}


def test_genfunc_routes(capsys):
    code, report, _ = run(capsys, "genfunc", "-m", "3", "-t", "0.5", "--route", "gamma,series")
    assert code == 0
    [check] = report["checks"]
    assert check["name"] == "gamma vs series" and check["status"] == "pass"
    assert check["measured"] <= check["tolerance"]
    assert set(report["details"]["routes"]) == {"gamma", "series"}


def test_genfunc_all_routes_negative_t(capsys):
    code, report, _ = run(capsys, "genfunc", "-m", "3", "-t", "-0.7", "--route", "product-finite,gamma,series", "-N", "500")
    assert code == 0
    assert len(report["checks"]) == 3
    assert all(c["status"] == "pass" for c in report["checks"])


def test_genfunc_value(capsys):
    _, report, _ = run(capsys, "genfunc", "-m", "2", "-t", "0.5", "--route", "gamma")
    assert report["result"]["re"] == pytest.approx(PI_OVER_2, rel=1e-13)


def test_integrate_quad(capsys):
    code, report, _ = run(capsys, "integrate", "-m", "2", "-k", "1", "--engine", "quad")
    assert code == 0
    assert abs(report["result"]["value"] - ZETA[2]) <= 1e-10
    code, report, _ = run(capsys, "integrate", "-m", "2", "-k", "0", "--engine", "quad")
    assert report["result"]["value"] == pytest.approx(1.0, abs=1e-12)


def test_integrate_mc_reports_seed(capsys):
    code, report, _ = run(capsys, "integrate", "-m", "3", "-k", "1", "--engine", "mc", "-n", "200000")
    assert code == 0
    assert report["seed"] == 42
    res = report["result"]
    assert res["type"] == "estimate" and res["seed"] == 42 and res["n_samples"] == 200_000
    assert abs(res["re"] - ZETA[3]) <= 4 * res["stderr"]


def test_verify_exact_suite(capsys):
    code, report, _ = run(capsys, "verify", "--suite", "exact")
    assert code == 0
    assert report["result"]["failed"] == 0
    assert all(c["tolerance"] == "0/1" for c in report["checks"] if "equality" in c["name"])


def test_verify_gamma_suite(capsys):
    code, report, _ = run(capsys, "verify", "--suite", "gamma", "--seed", "7")
    assert code == 0
    assert report["seed"] == 7
    [refl] = [c for c in report["checks"] if c["name"].startswith("reflection")]
    assert refl["measured"] <= 1e-12


def test_verify_failure_exit_code(capsys, monkeypatch):
    import epiihs.cli as cli

    monkeypatch.setattr(cli, "run_suite", lambda suite, seed: [Check("forced", False, 1.0, 0.0)])
    code, report, err = run(capsys, "verify", "--suite", "exact")
    assert code == 1
    assert report["result"] == {"type": "summary", "passed": 0, "failed": 1}
    assert "FAIL" in err


def test_rational_formatting():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(5)) == "5/1"
    assert tagged(Fraction(21, 16)) == {"type": "rational", "value": "21/16"}
    assert tagged(1.5) == {"type": "float", "value": 1.5}
    assert tagged(1 - 2j) == {"type": "complex", "re": 1.0, "im": -2.0}
    with pytest.raises(TypeError):
        tagged("text")


def test_schema_accepts_every_result_kind():
    est = McEstimate(1.2 - 0.001j, 0.01, 0.02, 1000, 42)
    checks = [Check("exact", True, Fraction(0), Fraction(0)), Check("float", False, 2e-3, 1e-3)]
    for result in (tagged(Fraction(1, 3)), tagged(0.5), tagged(1j), tagged(est), summary(checks)):
        doc = RunReport("verify", {}, result, checks, seed=3, elapsed_ms=5).to_dict()
        jsonschema.validate(doc, SCHEMA)


def test_schema_rejects_float_rationals():
    doc = RunReport("sum", {}, {"type": "rational", "value": "0.5"}).to_dict()
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, SCHEMA)
    doc = RunReport("sum", {}, {"type": "rational", "value": "1 / 2"}).to_dict()
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, SCHEMA)


def test_module_entry_point_and_threads_env():
    env = dict(os.environ)
    outs = []
    for threads in ("1", "4"):
        env["EPIIHS_THREADS"] = threads
        proc = subprocess.run(
            [sys.executable, "-m", "epiihs", "integrate", "-m", "2", "-k", "1", "--engine", "mc", "-n", "300000"],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        outs.append(json.loads(proc.stdout)["result"])
    assert outs[0] == outs[1]


def test_verify_all_is_green(capsys):
    code, report, _ = run(capsys, "verify", "--suite", "all", "--seed", "42")
    assert code == 0, [c for c in report["checks"] if c["status"] == "fail"]
    assert report["result"]["failed"] == 0
    names = {c["name"].split(" ")[0] for c in report["checks"]}
    assert {"three-way", "generating-function", "reflection", "quad_m2", "MC"} <= names
