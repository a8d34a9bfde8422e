import io
import json
import os
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

from smsquiver.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_classify_valid_line():
    code, out = run_cli("classify", "A:5/f=1/t=2")
    assert code == 0
    assert "valid" in out and "family (b)" in out
    assert "simples=5" in out and "r=5" in out


def test_classify_invalid_exits_nonzero():
    code, out = run_cli("classify", "E:7/f=1/t=2")
    assert code == 1
    assert out.startswith("invalid")


def test_classify_json_schema():
    code, out = run_cli("classify", "D:6/f=1/3/t=1", "--format", "json")
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["type"]["frequency"] == "1/3"
    assert payload["nonstandard_counterpart"] is True
    assert payload["simples"] == 2


def test_orbits_headline():
    code, out = run_cli("orbits", "--type", "D:4/f=1/t=1")
    assert code == 0
    assert out.splitlines()[0] == "2 orbits"


def test_mutate_worked_example():
    code, out = run_cli(
        "mutate",
        "--algebra",
        "nakayama:4:5",
        "--sms",
        "simples",
        "--at",
        "2,3",
        "--allow-composite",
    )
    assert code == 0
    assert out.strip().split("\t")[1] == "1/2/3 2/3/4/1 3/4/1/2 4"


def test_mutate_requires_composite_flag_for_non_orbits():
    code, out = run_cli(
        "mutate", "--algebra", "nakayama:4:5", "--sms", "simples", "--at", "2,3"
    )
    assert code == 1


def test_hom_golden():
    code, out = run_cli("hom", "--type", "A:2/f=1/t=1")
    assert code == 0
    assert out == (GOLDEN / "hom_a2_f1_t1.tsv").read_text()


def test_enumerate_golden():
    code, out = run_cli("enumerate", "--type", "A:3/f=1/t=2")
    assert code == 0
    assert out == (GOLDEN / "enumerate_a3_f1_t2.tsv").read_text()


def test_enumerate_json_exact_strings():
    code, out = run_cli("enumerate", "--type", "A:2/f=1/2/t=1", "--format", "json")
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["type"] == "A:2/f=1/2/t=1"
    assert payload["configurations"]


def test_brauer_count():
    code, out = run_cli("brauer", "--edges", "4", "--multiplicity", "1")
    assert (code, out.strip()) == (0, "3")
    code, out = run_cli("brauer", "--edges", "2", "--marked-extremal")
    assert (code, out.strip()) == (0, "1")


def test_sms_listing():
    code, out = run_cli("sms", "--algebra", "nakayama:2:3", "--list")
    lines = out.splitlines()
    assert lines[0] == "2 systems"
    assert len(lines) == 3


def test_quiver_dot_and_json():
    code, dot = run_cli("quiver", "--algebra", "nakayama:2:3", "--dir", "both")
    assert code == 0 and dot.startswith("digraph")
    code, js = run_cli(
        "quiver", "--algebra", "nakayama:2:3", "--dir", "both", "--out", "json"
    )
    assert json.loads(js)["schema"] == 1


def test_determinism_byte_identical():
    for argv in (
        ("enumerate", "--type", "A:5/f=1/t=2"),
        ("orbits", "--type", "A:5/f=1/t=2", "--format", "json"),
        ("quiver", "--algebra", "nakayama:3:4", "--dir", "left"),
    ):
        assert run_cli(*argv) == run_cli(*argv)


def test_bound_exceeded_is_a_one_line_error():
    proc = subprocess.run(
        [sys.executable, "-m", "smsquiver.cli", "sms", "--algebra", "nakayama:6:6"],
        capture_output=True,
        text=True,
        env={**os.environ, "PYTHONPATH": str(Path(__file__).parent.parent / "src")},
    )
    assert proc.returncode == 1
    assert proc.stderr.startswith("error: BoundExceededError:")
    assert len(proc.stderr.strip().splitlines()) == 1


def test_invalid_arguments_exit_two():
    proc = subprocess.run(
        [sys.executable, "-m", "smsquiver.cli", "enumerate", "--type"],
        capture_output=True,
        text=True,
        env={**os.environ, "PYTHONPATH": str(Path(__file__).parent.parent / "src")},
    )
    assert proc.returncode == 2


def test_threads_validation():
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "smsquiver.cli",
            "--threads",
            "0",
            "classify",
            "A:1/f=1/t=1",
        ],
        capture_output=True,
        text=True,
        env={**os.environ, "PYTHONPATH": str(Path(__file__).parent.parent / "src")},
    )
    assert proc.returncode == 2


def test_check_subset():
    code, out = run_cli("check", "--only", "1,2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert all("[pass]" in line for line in lines)
