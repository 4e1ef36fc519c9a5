import io
import json
import subprocess
import sys

import numpy as np
import pytest

from speclap import cli
from speclap.families import cycle, path
from speclap.serialize import write_graphspec


@pytest.fixture
def c4(tmp_path):
    p = tmp_path / "c4.json"
    doc = write_graphspec(cycle(4))
    doc["classes"] = {"v0": "a", "v1": "b", "v2": "a", "v3": "b"}
    doc["assoc"] = {"v0": ["v1"], "v1": ["v1", "v2"], "v2": ["v2"], "v3": ["v0", "v1"]}
    p.write_text(json.dumps(doc))
    return str(p)


def run(argv, capsys):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_c4(c4, capsys):
    code, out, _ = run(["spectrum", "--input", c4], capsys)
    assert code == 0
    vals = [re for re, im in json.loads(out)["eigenvalues"]]
    assert np.allclose(vals, [0, 1, 1, 2])


def test_missing_input_file_exits_2(capsys):
    code, _, err = run(["spectrum", "--input", "missing.json"], capsys)
    assert code == 2 and "missing.json" in err


def test_usage_errors_exit_2(c4, capsys):
    assert run(["bogus"], capsys)[0] == 2
    assert run(["spectrum"], capsys)[0] == 2
    assert run(["spectrum", "--input", c4, "--tol", "abc"], capsys)[0] == 2


def test_verify_sweep(c4, capsys):
    code, out, _ = run(["verify", "--input", c4, "--subset-sweep"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["overall"]
    names = [c["name"] for c in rep["checks"]]
    assert names == ["range", "cheeger_chain", "diameter_bound"]
    assert rep["checks"][1]["detail"]["subsets"] == 14


def test_corrupted_bound_exits_1(c4, capsys, monkeypatch):
    monkeypatch.setattr(cli, "_BOUND_SCALE", 0.5)
    code, out, _ = run(["verify", "--input", c4, "--subset-sweep"], capsys)
    assert code == 1 and not json.loads(out)["overall"]
    code, _, _ = run(["bounds", "--input", c4, "--subset", "v0,v1"], capsys)
    assert code == 1


def test_verify_non_hermitian_skips_bounds(tmp_path, capsys):
    g = path(2)
    p = tmp_path / "nh.json"
    p.write_text(json.dumps({
        "vertices": [{"id": "a"}, {"id": "b"}],
        "edges": [{"from": "a", "to": "b", "forward": [[[0, 1]]], "backward": [[[0, 1]]]}],
    }))
    code, out, _ = run(["verify", "--input", str(p), "--subset-sweep"], capsys)
    rep = json.loads(out)
    assert code == 0 and [c["name"] for c in rep["checks"]] == ["range", "bounds"]
    assert "skipped" in rep["checks"][1]["detail"]


def test_sweep_limit(c4, capsys):
    code, out, _ = run(["verify", "--input", c4, "--subset-sweep", "--limit", "3"], capsys)
    assert code == 0
    assert "skipped" in json.loads(out)["checks"][1]["detail"]
    assert run(["bounds", "--input", c4, "--subset-sweep", "--limit", "3"], capsys)[0] == 2


def test_output_is_byte_deterministic(c4, tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--input", c4, "--subset-sweep", "--output", str(a)], capsys)[0] == 0
    assert run(["verify", "--input", c4, "--subset-sweep", "--output", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    r1 = run(["random", "--seed", "7", "--kind", "hermitian", "--rank", "2"], capsys)[1]
    r2 = run(["random", "--seed", "7", "--kind", "hermitian", "--rank", "2"], capsys)[1]
    assert r1 == r2


@pytest.mark.parametrize("verb", ["bounds", "collapse", "pushforward", "amalgamate", "dual", "assoc"])
def test_graph_verbs_pass_on_c4(verb, c4, capsys):
    code, out, _ = run([verb, "--input", c4, "--subset-sweep"], capsys)
    assert code == 0, out
    json.loads(out)


def test_random_then_verify(tmp_path, capsys):
    for kind in ("unitary", "hermitian", "general"):
        code, out, _ = run(["random", "--seed", "3", "--kind", kind, "--rank", "2", "--n", "5"], capsys)
        p = tmp_path / f"{kind}.json"
        p.write_text(out)
        code, out, _ = run(["verify", "--input", str(p), "--subset-sweep"], capsys)
        assert code == 0, out


def test_stdin_verbs(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"moduli": [4], "S": [[1], [3]]}'))
    code, out, _ = run(["cayley", "--input", "-"], capsys)
    assert code == 0 and np.allclose([x[0] for x in json.loads(out)["eigenvalues"]], [0, 1, 1, 2])
    monkeypatch.setattr("sys.stdin", io.StringIO('{"probs": [[0, 1], [1, 0]]}'))
    code, out, _ = run(["walk", "--input", "-"], capsys)
    assert code == 0 and np.allclose([x[0] for x in json.loads(out)["eigenvalues"]], [0, 2])


def test_cayley_with_matrices(capsys, monkeypatch):
    doc = {"moduli": [2], "S": [[1]], "F": {"1": [[0, 1], [1, 0]]}}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    code, out, _ = run(["cayley", "--input", "-"], capsys)
    assert code == 0 and np.allclose([x[0] for x in json.loads(out)["eigenvalues"]], [0, 0, 2, 2])
    monkeypatch.setattr("sys.stdin", io.StringIO('{"moduli": [4], "S": [[1]]}'))
    assert run(["cayley", "--input", "-"], capsys)[0] == 2


def test_quantum_verb(tmp_path, capsys):
    doc = write_graphspec(cycle(5))
    for v in doc["vertices"]:
        v["rank"] = 4
    doc["spin"] = 1
    p = tmp_path / "q.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(["quantum", "--input", str(p), "--seed", "2"], capsys)
    assert code == 0 and json.loads(out)["report"]["overall"]
    doc["scattering"] = [np.eye(4).tolist()] * 5
    p.write_text(json.dumps(doc))
    assert run(["quantum", "--input", str(p)], capsys)[0] == 0
    doc["scattering"] = [[[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]] * 5
    p.write_text(json.dumps(doc))
    assert run(["quantum", "--input", str(p)], capsys)[0] == 2


def test_assoc_cohesion_pair(c4, capsys):
    code, out, _ = run(["assoc", "--input", c4, "--subset", "v0,v1", "--other", "v2,v3"], capsys)
    assert code == 0
    assert json.loads(out)["report"]["checks"][-1]["name"] == "cohesion"


def test_console_script_module_entry(c4):
    proc = subprocess.run([sys.executable, "-m", "speclap.cli", "spectrum", "--input", c4],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "eigenvalues" in proc.stdout
