import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from onesided.algebra import eta
from onesided.cli import EXIT_CODE_CASES, golden_check, golden_transcript, run_captured
from onesided.parser import parse_element

from strategies import element2


def run(*argv):
    return run_captured(list(argv))


@pytest.mark.parametrize("argv, out", [
    (["index", "y1^4"], "4"),
    (["ind", "2", "theta"], "1"),
    (["nf", "y1*x1"], "1"),
    (["nf", "--", "-x1*y1"], "-x1*y1"),
])
def test_basic_commands(argv, out):
    code, stdout, stderr = run(*argv)
    assert code == 0 and not stderr
    assert stdout.strip() == out


def test_golden_transcript():
    ok, detail = golden_check()
    assert ok, detail


def test_golden_transcript_is_deterministic():
    assert golden_transcript() == golden_transcript()


def test_golden_script_length():
    from onesided.cli import _data_path

    lines = [l for l in _data_path("golden_script.txt").read_text().splitlines()
             if l.strip() and not l.startswith("#")]
    assert len(lines) >= 30


@pytest.mark.parametrize("label, argv, want", EXIT_CODE_CASES, ids=[c[0] for c in EXIT_CODE_CASES])
def test_exit_codes(label, argv, want):
    assert run(*argv)[0] == want


def test_parse_error_reports_position():
    code, out, err = run("--format", "json", "nf", "x1 + ")
    assert code == 2
    payload = json.loads(out)
    assert payload == {"error": "ParseError", "message": payload["message"], "position": 5}
    assert err.startswith("parse error:")


def test_domain_error_names_the_error():
    code, out, err = run("--format", "json", "factor", "E1(0,0)*x2 + 1 - E1(0,0)")
    assert code == 3
    assert json.loads(out)["error"] == "NotUnit"
    assert "NotUnit" in err


def test_verify_json():
    code, out, _ = run("--format", "json", "verify", "theta")
    assert code == 0
    (suite,) = json.loads(out)
    assert suite["suite"] == "theta" and suite["passed"]


def test_prime_field():
    code, out, _ = run("--field", "fp:5", "nf", "3*x1 + 2*x1")
    assert (code, out.strip()) == (0, "0")


def test_window_cap_flag():
    # the symbolic rule never consults the oracle, so a tiny cap is harmless
    assert run("--window-cap", "4", "index", "x1^3")[0] == 0


def test_auto_check_on_file(tmp_path):
    p = tmp_path / "w.txt"
    p.write_text("# swap then torus\nS\nT 2 1\n")
    assert run("auto", "check", str(p))[0] == 0
    code, out, _ = run("auto", "apply", str(p), "x1")
    assert out.strip() == "2*x2"
    assert run("auto", "check", str(tmp_path / "missing.txt"))[0] == 2


@settings(max_examples=30)
@given(element2())
def test_json_elements_round_trip(a):
    # "--" keeps a leading minus sign from being read as an option
    for cmd, want in (("nf", a), ("eta", eta(a))):
        code, out, _ = run("--format", "json", cmd, "--", str(a))
        assert code == 0
        assert parse_element(json.loads(out)["element"]) == want


def test_json_invert_round_trip():
    code, out, _ = run("--format", "json", "invert", "theta")
    inv = parse_element(json.loads(out)["element"])
    assert inv * parse_element("theta") == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "onesided", "index", "x1^3 + y1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "-3"
