import json
import os
import subprocess
import sys

from segchar import Multisegment
from segchar.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_dominant_golden(capsys):
    code, out = invoke(capsys, "dominant", "[1,1]+2*[2,2]+[3,3]")
    assert code == 0
    lines = out.strip().splitlines()
    row = {}
    for line in lines:
        count, target = line.split(" * ", 1)
        row[target] = int(count)
    assert row["[1,1]+2*[2,2]+[3,3]"] == 1
    assert row["[1,2]+[2,2]+[3,3]"] == 1
    assert row["[1,1]+[2,2]+[2,3]"] == 2
    assert row["[1,2]+[2,3]"] == 2


def test_dominant_json_roundtrip(capsys):
    code, out = invoke(capsys, "dominant", "[0,0]+[1,1]", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert Multisegment.from_json_obj(obj["source"]) == Multisegment.parse("[0,0]+[1,1]")
    entries = {
        str(Multisegment.from_json_obj(e["target"])): e["mult"] for e in obj["entries"]
    }
    assert entries == {"[0,0]+[1,1]": 1, "[0,1]": 1}


def test_qchar_dominant_golden(capsys):
    code, out = invoke(capsys, "qchar", "[1,1]+[2,2]+[2,3]", "--n", "1", "--dominant")
    assert code == 0
    assert out.strip() == "1  +  1 * Y(1,2)*Y(1,4)"


def test_qchar_full(capsys):
    code, out = invoke(capsys, "qchar", "[0,0]", "--n", "1")
    assert code == 0
    assert out.strip() == "1 * Y(1,0)  +  1 * Y(1,2)^-1"


def test_qchar_json(capsys):
    code, out = invoke(capsys, "qchar", "[1,1]", "--n", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert {"coeff": 1, "monomial": [{"l": 1, "p": 2, "exp": 1}]} in obj["terms"]


def test_restrict(capsys):
    code, out = invoke(capsys, "restrict", "[0,1]", "--s", "2")
    assert code == 0
    assert sorted(out.strip().splitlines()) == [
        "1 * 0 | [0,1]",
        "1 * [0,1] | 0",
        "1 * [1,1] | [0,0]",
    ]


def test_amatrix_routes(capsys):
    code, out = invoke(
        capsys,
        "amatrix",
        "[0,0]+[1,1]",
        "--routes",
        "mackey,j-dominant,shuffle",
        "--format",
        "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["routes_agree"] is True
    for entry in obj["entries"]:
        counts = set(entry["counts"].values())
        assert len(counts) == 1


def test_verify_ok(capsys):
    code, out = invoke(capsys, "verify", "[0,0]+[1,1]", "--n", "1")
    assert code == 0
    assert out.startswith("ok:")


def test_sweep_exit_and_summary(capsys):
    code, out = invoke(
        capsys, "sweep", "--max-height", "2", "--window", "0:1", "--n", "1"
    )
    assert code == 0
    assert "0 discrepancies" in out


def test_sweep_jsonl(capsys):
    code, out = invoke(
        capsys,
        "sweep",
        "--max-height",
        "2",
        "--window",
        "0:1",
        "--n",
        "1",
        "--format",
        "json",
    )
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["summary"]["discrepancies"] == 0
    record = json.loads(lines[0])
    assert {"m", "route_a", "route_b", "equal"} <= set(record)


def test_parse_error_exit_code(capsys):
    code, _ = invoke(capsys, "dominant", "[1,1")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert run(["qchar", "[0,0]"]) == 2  # missing --n


def test_cap_exceeded_exit_code(capsys):
    code, _ = invoke(capsys, "amatrix", "9*[0,0]", "--routes", "shuffle")
    assert code == 3


def test_bigint_env_switch():
    script = (
        "from segchar import SegLaurentPoly\n"
        "f = SegLaurentPoly.constant(2**63 - 1) + SegLaurentPoly.constant(1)\n"
        "print(len(f))\n"
    )
    env = dict(os.environ, QCHAR_COEFF="bigint")
    ok = subprocess.run(
        [sys.executable, "-c", script], env=env, capture_output=True, text=True
    )
    assert ok.returncode == 0 and ok.stdout.strip() == "1"
    env.pop("QCHAR_COEFF")
    bad = subprocess.run(
        [sys.executable, "-c", script], env=env, capture_output=True, text=True
    )
    assert bad.returncode != 0 and "Overflow" in bad.stderr
