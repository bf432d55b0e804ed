import json
import subprocess
import sys

import pytest

from planar_rook import cli, verify
from planar_rook.diagram import enumerate_diagrams, from_compact


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--n", "2", "--count-only") == (0, "6\n", "")
    assert run(capsys, "enumerate", "--n", "12", "--count-only")[1] == "2704156\n"
    assert run(capsys, "enumerate", "--n", "3", "--rank", "1", "--count-only")[1] == "9\n"


def test_enumerate_lines_and_json(capsys):
    status, out, _ = run(capsys, "enumerate", "--n", "2")
    assert status == 0
    assert [from_compact(line) for line in out.split()] == list(enumerate_diagrams(2))
    status, out, _ = run(capsys, "enumerate", "--n", "1", "--format", "json")
    assert json.loads(out) == [{"n": 1, "top": [], "bottom": []}, {"n": 1, "top": [1], "bottom": [1]}]


def test_enumerate_bounds(capsys):
    status, _, err = run(capsys, "enumerate", "--n", "9")
    assert status == 2 and "--n must be in 0..8" in err
    assert run(capsys, "enumerate", "--n", "13", "--count-only")[0] == 2


def test_compose(capsys):
    assert run(capsys, "compose", "--a", "2:2->1", "--b", "2:1->2")[1] == "2:1->1\n"
    status, out, _ = run(capsys, "compose", "--a", "2:1->1", "--b", "2:2->2", "--format", "json")
    assert json.loads(out) == {"n": 2, "top": [], "bottom": []}
    assert run(capsys, "compose", "--a", "2:1->1", "--b", "3:1->1")[0] == 2


def test_apply(capsys):
    d = '{"n": 5, "top": [2, 3, 4], "bottom": [1, 2, 5]}'
    assert run(capsys, "apply", "--diagram", d, "--set", "2,5")[1] == "[3, 4]\n"
    assert run(capsys, "apply", "--diagram", d, "--set", "[1,2,3]")[1] == "null\n"
    assert run(capsys, "apply", "--diagram", d, "--set", "7")[0] == 2


def test_diagram_from_file(capsys, tmp_path):
    p = tmp_path / "d.json"
    p.write_text('{"n": 5, "top": [2, 3, 4], "bottom": [1, 2, 5]}')
    assert run(capsys, "apply", "--diagram", str(p), "--set", "2,5")[1] == "[3, 4]\n"


def test_rep(capsys):
    status, out, _ = run(capsys, "rep", "--n", "2", "--k", "1", "--diagram", "2:2->1")
    assert json.loads(out) == {"n": 2, "k": 1, "rows": [["0", "1"], ["0", "0"]]}
    status, out, _ = run(capsys, "rep", "--n", "2", "--k", "1", "--diagram", "2:2->1", "--x-basis")
    assert json.loads(out)["rows"] == [["0", "1"], ["0", "0"]]
    status, out, _ = run(capsys, "rep", "--n", "2", "--k", "0", "--diagram", "2:2->1", "--x-basis")
    assert json.loads(out)["rows"] == [["0"]]
    assert run(capsys, "rep", "--n", "3", "--k", "1", "--diagram", "2:2->1")[0] == 2
    assert run(capsys, "rep", "--n", "2", "--k", "3", "--diagram", "2:2->1")[0] == 2


def test_char_table(capsys):
    status, out, _ = run(capsys, "char-table", "--n", "2", "--format", "csv")
    assert out.splitlines()[1:] == ["1,1,1", "0,1,2", "0,0,1"]
    status, out, _ = run(capsys, "char-table", "--n", "1", "--format", "json")
    assert json.loads(out) == {"n": 1, "values": [[1, 1], [0, 1]]}


def test_bratteli(capsys):
    status, out, _ = run(capsys, "bratteli", "--rows", "2")
    assert out.startswith("digraph bratteli {") and '"2_1" [label="2"];' in out
    status, out, _ = run(capsys, "bratteli", "--rows", "4", "--format", "json")
    dims = {(v["n"], v["k"]): v["dim"] for v in json.loads(out)["nodes"]}
    assert [dims[4, k] for k in range(5)] == [1, 4, 6, 4, 1]


def test_tensor(capsys):
    assert json.loads(run(capsys, "tensor", "--n", "3", "--i", "1", "--j", "1")[1]) == {"n": 3, "m": [0, 1, 2, 0]}
    assert run(capsys, "tensor", "--n", "3", "--i", "4", "--j", "1")[0] == 2


def test_center(capsys):
    obj = json.loads(run(capsys, "center", "--n", "2")[1])
    assert [c["l"] for c in obj["center"]] == [0, 1, 2]
    assert all(c["central"] for c in obj["center"])
    assert obj["center"][0]["element"]["terms"] == [{"coeff": "1", "diagram": {"n": 2, "top": [], "bottom": []}}]


def test_xbasis(capsys):
    obj = json.loads(run(capsys, "xbasis", "--diagram", "5:1,2,4->2,3,4")[1])
    assert len(obj["terms"]) == 8
    assert sorted(t["coeff"] for t in obj["terms"]) == ["-1"] * 4 + ["1"] * 4


def test_trace(capsys):
    assert json.loads(run(capsys, "trace", "--n", "2", "--diagram", "2:1->1", "--regular")[1])["psi"] == 3
    obj = json.loads(run(capsys, "trace", "--diagram", "5:1,2,3,4->1,2,3,4")[1])
    assert obj == {"n": 5, "l": 4, "chi": [1, 4, 6, 4, 1, 0]}
    assert run(capsys, "trace", "--n", "3", "--diagram", "2:1->1")[0] == 2


def test_parse_errors(capsys):
    status, _, err = run(capsys, "xbasis", "--diagram", "5:1,2->1")
    assert status == 2 and "bad diagram" in err
    with pytest.raises(SystemExit) as e:
        cli.main(["enumerate"])
    assert e.value.code == 2


def test_verify_passes(capsys):
    status, out, _ = run(capsys, "verify", "--n-max", "3", "--suite", "all")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == f"# verify n_max=3 suite=all seed={verify.DEFAULT_SEED}"
    assert all(line.startswith("PASS") for line in lines[1:-1])


def test_verify_single_suite(capsys):
    status, out, _ = run(capsys, "verify", "--n-max", "2", "--suite", "chars")
    assert status == 0
    assert all(".chars." in f".{line.split()[1]}" for line in out.splitlines()[1:-1])


def test_verify_reports_failure(capsys, monkeypatch):
    from planar_rook import characters

    real = characters.chi

    def broken(n, k, d):
        return real(n, k, d) + (1 if d.rank == 1 and k == 1 else 0)

    monkeypatch.setattr(characters, "chi", broken)
    status, out, _ = run(capsys, "verify", "--n-max", "2", "--suite", "chars")
    assert status == 1
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert any("chars.character_values" in line and "k=1 1:1->1" in line for line in fails)


def test_verify_bounds(capsys):
    assert run(capsys, "verify", "--n-max", "7")[0] == 2


def test_determinism(capsys):
    a = run(capsys, "verify", "--n-max", "3", "--seed", "5")
    b = run(capsys, "verify", "--n-max", "3", "--seed", "5")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "planar_rook", "enumerate", "--n", "2", "--count-only"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
