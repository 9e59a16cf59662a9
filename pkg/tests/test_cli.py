import json
import shutil
import subprocess
import sys
from importlib import resources

import pytest

from tiltlab.cli import main
from tiltlab.example_a4 import FIXTURE_FILES

EXAMPLE_Q = {"vertices": [1, 2, 3, 4], "arrows": [[1, 2], [2, 3], [4, 3]]}
EXAMPLE_QP = {"vertices": [1, 2, 3, 4], "arrows": [[1, 2], [2, 3], [3, 4]]}


@pytest.fixture
def qfile(tmp_path):
    def write(data, name="q.json"):
        p = tmp_path / name
        p.write_text(json.dumps(data))
        return str(p)
    return write


def test_enumerate(qfile, capsys):
    assert main(["enumerate", qfile(EXAMPLE_Q), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["indecomposables"]) == 10 and len(out["tilting"]) == 14
    assert main(["enumerate", qfile({"vertices": [1], "arrows": []})]) == 0
    text = capsys.readouterr().out
    assert "indecomposables: 1" in text and "tilting modules: 1" in text


def test_enumerate_errors(qfile, tmp_path, capsys):
    affine = {"vertices": [1, 2, 3, 4], "arrows": [[1, 2], [2, 3], [3, 4], [1, 4]]}
    assert main(["enumerate", qfile(affine)]) == 2
    assert "NotRepFinite" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["enumerate", str(bad)]) == 1
    assert main(["enumerate", qfile({"vertices": [1, 2], "arrows": [[1, 2], [2, 1]]})]) == 1


def test_hasse(qfile, tmp_path):
    out = tmp_path / "q.dot"
    assert main(["hasse", qfile(EXAMPLE_Q), "--dot", str(out), "--mark-simple", "4"]) == 0
    dot = out.read_text()
    assert dot.count("[label=") == 14 and dot.count("style=bold") == 5
    out2 = tmp_path / "qp.dot"
    js = tmp_path / "qp.json"
    assert main(["hasse", qfile(EXAMPLE_QP, "qp.json"), "--dot", str(out2), "--mark-simple", "4", "--json", str(js)]) == 0
    dot2 = out2.read_text()
    assert dot2.count("[label=") == 14 and dot2.count("style=bold") == 5 and dot2.count("->") == 21
    assert len(json.loads(js.read_text())["hasse"]) == 21


def test_hasse_a1(qfile, capsys):
    assert main(["hasse", qfile({"vertices": [1], "arrows": []})]) == 0
    dot = capsys.readouterr().out
    assert dot.count("[label=") == 1 and "->" not in dot


def test_hasse_deterministic(qfile, capsys):
    main(["hasse", qfile(EXAMPLE_Q)])
    first = capsys.readouterr().out
    main(["hasse", qfile(EXAMPLE_Q)])
    assert capsys.readouterr().out == first


def test_verify(qfile, capsys):
    assert main(["verify", qfile(EXAMPLE_Q), "--source", "4"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert all(report["checks"].values())
    assert list(report["sizes"].values()) == [14, 14, 5, 5, 5]
    assert main(["verify", qfile(EXAMPLE_Q), "--source", "3"]) == 2
    assert main(["verify", qfile({"vertices": [1, 2], "arrows": [[1, 2]]}), "--source", "1"]) == 0


def test_example_a4(capsys):
    assert main(["example-a4"]) == 0
    assert "exact match" in capsys.readouterr().out


def test_example_a4_negative_control(tmp_path, capsys):
    for name in FIXTURE_FILES:
        src = resources.files("tiltlab").joinpath("data", name)
        (tmp_path / name).write_text(src.read_text())
    hasse = json.loads((tmp_path / "a4_hasse.json").read_text())
    dropped = hasse["top"]["edges"].pop()
    (tmp_path / "a4_hasse.json").write_text(json.dumps(hasse))
    assert main(["example-a4", "--fixtures", str(tmp_path)]) == 1
    out = capsys.readouterr().out
    assert "MISMATCH" in out and "computed only" in out
    assert dropped["from"] in out


def test_sweep(capsys):
    assert main(["sweep", "--type", "A", "--rank", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    reports = [json.loads(line) for line in lines]
    assert len({json.dumps(r["quiver"]) for r in reports}) == 4
    assert all(all(r["checks"].values()) for r in reports)
    assert main(["sweep", "--type", "A", "--rank", "9"]) == 2


def test_module_entry_point(qfile):
    proc = subprocess.run(
        [sys.executable, "-m", "tiltlab", "enumerate", qfile(EXAMPLE_Q)],
        capture_output=True, text=True, env={"TILTLAB_THREADS": "0", "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0
    assert "tilting modules: 14" in proc.stdout
