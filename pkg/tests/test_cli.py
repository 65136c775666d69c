import io
import subprocess
import sys

import pytest

from smctensor.cli import EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main
from smctensor.corpus import z2
from smctensor.presentation import emit_presentation

from cli_golden import GOLDEN, render


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_golden_output_is_stable():
    assert render() == GOLDEN.read_text(encoding="utf-8")


def test_exit_codes():
    assert run("tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--budget", "4")[0] == EXIT_OK
    assert run("tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--budget", "0")[0] == EXIT_UNKNOWN
    assert run("tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--budget", "-1")[0] == EXIT_USAGE
    assert run("tensor-eq", "z2", "z3", "beta(", "alpha(*)")[0] == EXIT_USAGE
    assert run("tensor-eq", "z2", "z3", "beta(0)", "alpha(*)", "--extensions", "all")[0] == EXIT_USAGE
    assert run("check", "no-such-file.smc")[0] == EXIT_USAGE


def test_check_reports_violations(tmp_path):
    text = emit_presentation(z2()).replace("[tensor_obj]\n0 0 0\n0 1 1", "[tensor_obj]\n0 0 0\n0 1 0") \
        .replace("[tensor_arr]\n0 0 0\n0 1 1", "[tensor_arr]\n0 0 0\n0 1 0")
    path = tmp_path / "bad.smc"
    path.write_text(text)
    code, out = run("check", str(path))
    assert code == EXIT_FAIL
    assert "violation: smcaxiom3" in out


def test_parse_error_is_line_numbered(tmp_path):
    path = tmp_path / "broken.smc"
    path.write_text(emit_presentation(z2()).replace("[comp]\n0 0 0", "[comp]\n0 0 7"))
    code, out = run("check", str(path))
    assert code == EXIT_USAGE
    assert f"{path}:13:" in out


def test_emit_round_trips_through_check(tmp_path):
    code, text = run("emit", "sline")
    assert code == EXIT_OK
    path = tmp_path / "s.smc"
    path.write_text(text)
    code, out = run("check", str(path))
    assert code == EXIT_OK and "all SMC axioms hold" in out
    assert run("emit", "nope")[0] == EXIT_USAGE


def test_suite_selector():
    code, out = run("suite", "enumeration")
    assert code == EXIT_OK
    assert out.rstrip().endswith("OK")
    assert run("suite", "nonsense")[0] == EXIT_USAGE


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "smctensor.cli", "check", "terminal"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "all SMC axioms hold" in proc.stdout


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as err:
        main(["tensor-eq", "z2"])
    assert err.value.code == 2
