import json
import subprocess
import sys

import pytest

from weakham.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gen(tmp_path, capsys):
    def make(name, n=None):
        path = tmp_path / f"{name}{n or ''}.json"
        args = ["gen", name] + ([n] if n is not None else []) + ["-o", path]
        assert run(capsys, *args)[0] == 0
        return path
    return make


def test_validate(gen, capsys):
    code, out, _ = run(capsys, "validate", gen("prism", 4))
    assert code == 0
    doc = json.loads(out)
    assert (doc["vertices"], doc["edges"], doc["faces"], doc["cubic"]) == (8, 12, 6, True)


def test_faces(gen, capsys):
    doc = json.loads(run(capsys, "faces", gen("theta"))[1])
    assert doc["faces"] == [[0, 5], [1, 2], [3, 4]]
    assert len(doc["dual_adjacency"]) == 3


def test_wh_on_k23_is_empty(gen, capsys):
    code, out, _ = run(capsys, "wh", gen("k23"))
    assert code == 0 and json.loads(out) == []


def test_wh_dot(gen, capsys):
    code, out, _ = run(capsys, "wh", gen("tetrahedron"), "--dot")
    assert code == 0 and out.count("graph wh") == 3


def test_mutate_and_color(gen, capsys):
    path = gen("prism", 4)
    whs = json.loads(run(capsys, "wh", path)[1])
    src = next(r["index"] for r in whs if r["cycle_lengths"] == [4, 4])
    code, out, _ = run(capsys, "mutate", path, "--wh", src, "--selection", "0b01")
    doc = json.loads(out)
    assert code == 0 and doc["selection"] == 1 and doc["source"] == src
    assert set(whs[src]["edges"]) | set(doc["edges"]) == set(range(12))
    code, out, _ = run(capsys, "color", path, "--wh", src, "--selection", "1")
    assert code == 0 and sorted(set(json.loads(out)["colors"])) == [1, 2, 3, 4]


def test_mutate_bad_selection(gen, capsys):
    code, _, err = run(capsys, "mutate", gen("tetrahedron"), "--wh", 0, "--selection", 2)
    assert code == 1 and json.loads(err)["error"] == "SelectionLengthMismatch"
    code, _, err = run(capsys, "mutate", gen("tetrahedron"), "--wh", 9, "--selection", 0)
    assert code == 1 and json.loads(err)["error"] == "BadParameter"


def test_moduli_and_chromatic(gen, capsys, tmp_path):
    path = gen("prism", 4)
    doc = json.loads(run(capsys, "moduli", path, "--with-cliques")[1])
    assert len(doc["vertices"]) == 9 and len(doc["edges"]) == 12 and doc["num_cliques"] == 4
    assert len(doc["clique_colorings"]) == 4
    dot_path = tmp_path / "x.dot"
    doc = json.loads(run(capsys, "chromatic", gen("prism", 5), "--dot", dot_path)[1])
    assert len(doc["vertices"]) == 5 and len(doc["edges"]) == 5
    assert dot_path.read_text().startswith("graph chromatic")


def test_moduli_rejects_non_cubic(gen, capsys):
    code, out, err = run(capsys, "moduli", gen("octahedron"))
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "NotCubic"


def test_from_coloring(gen, capsys, tmp_path):
    path = gen("tetrahedron")
    col = tmp_path / "c.json"
    col.write_text("[1, 2, 3, 4]")
    code, out, _ = run(capsys, "from-coloring", path, "--coloring", col, "--partition", 1)
    doc = json.loads(out)
    assert code == 0 and doc["cycle_lengths"] == [4] and doc["partition"] == 1
    oracle_out = tmp_path / "oracle.json"
    oracle_out.write_text(run(capsys, "oracle", path)[1])
    code, out, _ = run(capsys, "from-coloring", path, "--coloring", oracle_out, "--partition", 3, "--index", 5)
    assert code == 0 and json.loads(out)["partition"] == 3
    col.write_text("[1, 1, 3, 4]")
    code, _, err = run(capsys, "from-coloring", path, "--coloring", col, "--partition", 1)
    assert code == 1 and json.loads(err)["error"] == "ImproperColoring"


def test_oracle(gen, capsys):
    doc = json.loads(run(capsys, "oracle", gen("prism", 4))[1])
    assert doc["count"] == 96
    doc = json.loads(run(capsys, "oracle", gen("prism", 4), "--canonical")[1])
    assert doc["count"] == 4
    doc = json.loads(run(capsys, "oracle", gen("tetrahedron"), "--colors", 3)[1])
    assert doc["count"] == 0


def test_resolve(gen, capsys, tmp_path):
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "resolve", gen("octahedron"), "-o", out_path)
    assert code == 0 and len(json.loads(out)["new_faces"]) == 6
    doc = json.loads(run(capsys, "validate", out_path)[1])
    assert doc["cubic"] and doc["vertices"] == 24


def test_check(gen, capsys):
    code, out, _ = run(capsys, "check", gen("prism", 4))
    assert code == 0 and json.loads(out)["passed"] is True
    code, out, _ = run(capsys, "check", gen("wheel", 5))
    assert code == 0


def test_bad_inputs(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"num_darts": 2, "vertex_rotations": [[0], [1]]}')
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and json.loads(err)["error"] == "Bridge"
    code, _, err = run(capsys, "validate", tmp_path / "missing.json")
    assert code == 1 and json.loads(err)["error"] == "FileNotFoundError"
    code, _, err = run(capsys, "gen", "cube")
    assert code == 1 and json.loads(err)["error"] == "UnknownGenerator"


def test_corpus_command(tmp_path, capsys):
    out = tmp_path / "c.pc"
    assert run(capsys, "corpus", "-o", out, "--extra", 0)[0] == 0
    assert out.read_bytes().startswith(b">>planar_code<<")


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "weakham", "gen", "prism", "3"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["num_darts"] == 18
