import json

import pytest

from clustercolor.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_OK, dispatch, read_graph


def run(*argv):
    return dispatch([str(a) for a in argv])


def test_pipeline(tmp_path):
    g, c, v = tmp_path / "g.json", tmp_path / "c.json", tmp_path / "v.json"
    assert run("gen", "--family", "tri-grid", "--k", 3, "-o", g) == EXIT_OK
    assert run("color", g, "-o", c, "--report", tmp_path / "r.json", "--dot", tmp_path / "g.dot") == EXIT_OK
    assert run("verify", g, c, "--delta", 6, "-o", v) == EXIT_OK
    assert json.loads(v.read_text())["passed"] is True
    assert (tmp_path / "g.dot").read_text().startswith("graph G {")


def test_verify_failure_exit(tmp_path):
    g, c = tmp_path / "g.json", tmp_path / "c.json"
    run("gen", "--family", "tri-grid", "--k", 3, "-o", g)
    c.write_text(json.dumps({"colors": [3] * 9}))
    assert run("verify", g, c, "-o", tmp_path / "v.json") == EXIT_FAIL


def test_oracle_gk3(tmp_path, capsys):
    g = tmp_path / "g3.json"
    run("gen", "--family", "gk", "--k", 3, "-o", g)
    assert run("oracle", g, "--colors", 3, "--bound", 2) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["status"] == "Infeasible"


def test_oracle_budget_exit(tmp_path):
    g = tmp_path / "g3.json"
    run("gen", "--family", "gk", "--k", 3, "-o", g)
    assert run("oracle", g, "--colors", 3, "--bound", 2, "--node-limit", 5, "-o", tmp_path / "o.json") == EXIT_BUDGET


def test_oracle_minimise(tmp_path):
    g, o = tmp_path / "g.json", tmp_path / "o.json"
    run("gen", "--family", "tri-grid", "--k", 3, "-o", g)
    assert run("oracle", g, "--colors", 2, "-o", o) == EXIT_OK
    assert json.loads(o.read_text())["min_max_component"] == 3


def test_bounds(capsys):
    assert run("bounds", "--delta", 3) == EXIT_OK
    table = json.loads(capsys.readouterr().out)
    assert table["f1"] == "11"
    assert int(table["final"]) == 45 ** 104


def test_invalid_inputs(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("color", bad) == EXIT_INPUT
    bad.write_text(json.dumps({"n": 3, "rotations": [[1], [2], [0]], "outer": [0, 1]}))
    assert run("color", bad) == EXIT_INPUT
    assert run("color", tmp_path / "missing.json") == EXIT_INPUT
    assert run("gen", "--family", "tri-grid") == EXIT_INPUT
    with pytest.raises(SystemExit) as exc:
        run("frobnicate")
    assert exc.value.code == EXIT_INPUT


def test_same_input_and_output_rejected(tmp_path):
    g = tmp_path / "g.json"
    run("gen", "--family", "tri-grid", "--k", 3, "-o", g)
    assert run("color", g, "-o", g) == EXIT_INPUT


def test_seed_from_environment(tmp_path, monkeypatch):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("gen", "--family", "plane", "--n", 40, "--seed", 11, "-o", a)
    monkeypatch.setenv("CLUSTERCOLOR_SEED", "11")
    run("gen", "--family", "plane", "--n", 40, "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_graph_roundtrip(tmp_path):
    g = tmp_path / "g.json"
    run("gen", "--family", "near-triangulation", "--n", 30, "--seed", 2, "-o", g)
    gf = read_graph(str(g))
    G = gf.single()
    assert json.loads(g.read_text()) == {"n": G.n, "rotations": [list(r) for r in G.rotations],
                                         "outer": list(G.outer_dart)}


def test_coloring_roundtrip(tmp_path):
    g, c, c2 = tmp_path / "g.json", tmp_path / "c.json", tmp_path / "c2.json"
    run("gen", "--family", "eroded", "--n", 40, "--seed", 3, "--rate", 0.1, "-o", g)
    run("color", g, "-o", c)
    c2.write_text(json.dumps(json.loads(c.read_text()), sort_keys=True, indent=1) + "\n")
    assert c.read_bytes() == c2.read_bytes()


def test_disconnected_graph_file(tmp_path):
    g, c = tmp_path / "g.json", tmp_path / "c.json"
    g.write_text(json.dumps({"n": 5, "rotations": [[1, 2], [2, 0], [0, 1], [4], [3]], "outer": [[1, 0]]}))
    assert run("color", g, "-o", c) == EXIT_OK
    assert run("verify", g, c, "-o", tmp_path / "v.json") == EXIT_OK
