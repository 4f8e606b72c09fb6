import json
import subprocess
import sys

import pytest

from hopfgk.cli import UsageError, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("2..4") == [2, 3, 4]
    assert parse_range("3") == [3]
    with pytest.raises(UsageError):
        parse_range("4..2")
    with pytest.raises(UsageError):
        parse_range("a..b")


def test_families_list(capsys):
    code, out, _ = run(capsys, "families", "list")
    assert code == 0
    for fam in ("poly", "laurent", "dihedral", "taft", "liu", "D"):
        assert fam in out
    code, out, _ = run(capsys, "families", "list", "--format", "structured")
    assert [f["id"] for f in json.loads(out)["families"]][-1] == "D"


def test_check_axioms_exit_zero(capsys):
    code, out, _ = run(capsys, "check", "axioms", "--family", "D", "--m", "3", "--d", "1", "--seed", "42",
                       "--samples", "50")
    assert code == 0
    assert "FAIL" not in out
    assert "antipode convolution" in out


def test_taft_axioms(capsys):
    assert run(capsys, "check", "axioms", "--family", "taft", "--n", "4", "--t", "1")[0] == 0


def test_bad_parameters_exit_two(capsys):
    code, out, err = run(capsys, "check", "axioms", "--family", "D", "--m", "2", "--d", "1")
    assert code == 2 and not out
    assert "(1+m)d must be even" in err
    assert run(capsys, "check", "axioms")[0] == 2
    assert run(capsys, "check", "axioms", "--family", "taft", "--n", "4")[0] == 2
    assert run(capsys, "check", "identities", "--m", "5..2")[0] == 2


def test_structured_schema(capsys):
    code, out, _ = run(capsys, "check", "structure", "--family", "liu", "--n", "3", "--omega", "1",
                       "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"family", "params", "fieldOrder", "checks", "status"}
    assert doc["status"] == "pass" and doc["fieldOrder"] == 3
    assert all(set(c) <= {"name", "status", "detail"} for c in doc["checks"])
    assert {"io/im", "grading laws"} <= {c["name"] for c in doc["checks"]}


def test_timings_only_on_request(capsys):
    argv = ["check", "structure", "--family", "taft", "--n", "4", "--t", "2", "--format", "structured"]
    _, plain, _ = run(capsys, *argv)
    _, timed, _ = run(capsys, *argv, "--timings")
    assert "seconds" not in plain
    assert all("seconds" in c for c in json.loads(timed)["checks"])


def test_identities_small_range(capsys):
    code, out, _ = run(capsys, "check", "identities", "--m", "2..4", "--d", "1..2")
    assert code == 0
    for name in ("ce1", "ce2", "ce3-iff", "ce5", "ce6", "ce7", "kassel"):
        assert f"PASS  {name}" in out


def test_structure_classical(capsys):
    code, out, _ = run(capsys, "check", "structure", "--family", "dihedral")
    assert code == 0
    assert "cocommutativity witness" in out


def test_export_deterministic_and_complete(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "export", "tables", "--family", "D", "--m", "3", "--d", "1",
                   "--format", "structured", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["generators"] == ["x", "X", "y", "g", "u0", "u1", "u2"]
    # Delta(u_i) is a sum of m = 3 tensors
    assert all(len(doc["coproducts"][f"u{i}"]) == 3 for i in range(3))
    assert doc["counits"]["u0"] == ["1", "0"] and doc["counits"]["u1"] == ["0", "0"]
    assert doc["bigrading"]["N"] == 6


def test_export_taft_text(capsys):
    code, out, _ = run(capsys, "export", "tables", "--family", "taft", "--n", "4", "--t", "1")
    assert code == 0
    assert "xg = xi gx: [1,0]*x g  ==  [1,0]*x g" in out
    assert "g * x = [0,-1]*x g" in out
    assert "Delta(x)" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfgk", "families", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "taft" in proc.stdout
