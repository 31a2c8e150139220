import io
import json
import subprocess
import sys

import pytest

from rootlat import certifier, cli
from rootlat.errors import InvariantViolation
from rootlat.exact import parse_vector_literal


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_disc_d6_text():
    code, out, _ = run("disc", "D6")
    assert code == 0
    assert out.strip() == "Z/2 x Z/2; d1^: -1; d6^: -3/2"


def test_disc_composite_json():
    code, out, _ = run("disc", "A2+E8", "--format", "json")
    data = json.loads(out)
    assert code == 0 and [c["lattice"] for c in data["components"]] == ["A2", "E8"]
    assert data["components"][1]["invariant_factors"] == []


def test_gram_text():
    code, out, _ = run("gram", "A2")
    assert code == 0 and out.split("\n")[:3] == ["A2", "-2  1", " 1 -2"]


def test_reduce_example():
    code, out, _ = run("reduce", "A3", "--vector", "-1/2,0,-1/2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert [s["j"] for s in data["steps"]] == [2]
    assert data["end"] == ["-1/2", "-1", "-1/2"] and data["end_vertex"] == "a2"


def test_reduce_text_mentions_endpoint():
    code, out, _ = run("reduce", "A3", "--vector", "-1/2,0,-1/2")
    assert code == 0 and "a2^" in out and "(1 step)" in out


def test_certify_json_counts():
    code, out, _ = run("certify", "3*A2", "--target", "-2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["n_candidates"] == data["n_certified"] == 216 and data["failures"] == []


def test_shortvec_and_orbit():
    code, out, _ = run("shortvec", "D8", "--k", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["value"] == "-2"
    assert [(o["generator"], o["size"]) for o in data["orbits"]] == \
        [("d7^", 128), ("d8^", 128), ("root", 112)]
    code, out, _ = run("orbit", "A2", "--vector", "-2/3,-1/3", "--format", "json")
    assert code == 0 and json.loads(out)["size"] == 3


def test_json_vectors_round_trip():
    code, out, _ = run("orbit", "A2+A1", "--vector", "-2/3,-1/3;-1/2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["size"] == 6
    for e in data["elements"]:
        literal = f"{e[0]},{e[1]};{e[2]}"
        code2, out2, _ = run("orbit", "A2+A1", "--vector", literal, "--format", "json")
        assert code2 == 0 and json.loads(out2)["elements"] == data["elements"]
    [parsed] = parse_vector_literal(",".join(data["representative"]))
    assert [str(x) for x in parsed] == data["representative"]


@pytest.mark.parametrize("argv", [
    ("gram", "B3"), ("frobnicate", "A2"), ("reduce", "A3", "--vector", "1/2,x,0"),
    ("certify", "A2", "--target", "-3"),
])
def test_parse_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2 and err


@pytest.mark.parametrize("argv", [
    ("gram", "D3"),
    ("reduce", "A3", "--vector", "1,0,0"),
    ("reduce", "A3", "--vector", "1/2,0,0"),
    ("reduce", "A3", "--vector", "-3/2,-1,-1/2"),
    ("shortvec", "A11"),
    ("orbit", "E8", "--vector", "1,0,0,0,0,0,0,0", "--cap", "10"),
])
def test_domain_errors_exit_1(argv):
    code, _, err = run(*argv)
    assert code == 1 and err.startswith("error:")


def test_certification_failure_exits_3(monkeypatch):
    monkeypatch.setattr(certifier, "_check_certificate", lambda C, w: "forced failure")
    code, _, err = run("certify", "3*A2")
    assert code == 3
    dump = json.loads(err[err.index("{"):])
    assert dump["counterexample"]["reason"] == "forced failure"


def test_invariant_violation_exits_3(monkeypatch):
    def boom(L, w):
        raise InvariantViolation("reduction overran")

    monkeypatch.setattr(cli, "reduce_component", boom)
    code, _, err = run("reduce", "A3", "--vector", "-1/2,0,-1/2")
    assert code == 3 and json.loads(err[err.index("{"):])["error"] == "InvariantViolation"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rootlat.cli", "disc", "E7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "Z/2; e7^: -3/2"
