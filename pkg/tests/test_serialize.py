import io
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from _gen import general_instance
from speclap.errors import InputError, ShapeError
from speclap.serialize import (
    decode_matrix,
    dumps,
    encode_matrix,
    read_graphspec,
    read_input,
    write_graphspec,
)
from speclap.transmission import default_weight, laplacian


@given(st.integers(0, 2**32 - 1))
def test_graphspec_round_trip(seed):
    g, ts = general_instance(seed)
    w = default_weight(g)
    doc = json.loads(dumps(write_graphspec(g, ts, w)))
    g2, ts2, w2 = read_graphspec(doc)
    assert g2.vertices == g.vertices
    assert np.array_equal(laplacian(g, ts, w), laplacian(g2, ts2, w2))


def test_matrix_codec():
    M = np.array([[1 + 2j, -0.5], [0, 3j]])
    assert np.array_equal(decode_matrix(encode_matrix(M)), M)
    assert np.array_equal(decode_matrix([[1, [0, 1]]]), [[1, 1j]])
    with pytest.raises(ShapeError):
        decode_matrix([[1, 2], [3]])
    with pytest.raises(ShapeError):
        decode_matrix([])


def test_partial_matrices_rejected():
    doc = {
        "vertices": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
        "edges": [
            {"from": "a", "to": "b", "forward": [[1]], "backward": [[1]]},
            {"from": "b", "to": "c"},
        ],
    }
    with pytest.raises(InputError):
        read_graphspec(doc)


def test_combinatorial_spec_has_no_system():
    g, ts, w = read_graphspec({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [{"from": "a", "to": "b"}]})
    assert ts is None and w is None and len(g.dedges) == 2


def test_dumps_is_deterministic_and_encodes_nonfinite():
    obj = {"b": float("inf"), "a": [np.float64(-np.inf), float("nan"), 1 / 3, np.int64(2)], "c": 1 + 2j}
    text = dumps(obj)
    assert text == dumps(obj)
    back = json.loads(text)
    assert back["b"] == "inf" and back["a"][:2] == ["-inf", "nan"]
    assert back["a"][2] == 1 / 3 and back["c"] == [1.0, 2.0]
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')


def test_read_input(tmp_path, monkeypatch):
    p = tmp_path / "x.json"
    p.write_text('{"k": 1}')
    assert read_input(str(p)) == {"k": 1}
    monkeypatch.setattr("sys.stdin", io.StringIO('{"k": 2}'))
    assert read_input("-") == {"k": 2}
    with pytest.raises(InputError):
        read_input(str(tmp_path / "missing.json"))
    p.write_text("{not json")
    with pytest.raises(InputError):
        read_input(str(p))
    p.write_text("[1, 2]")
    with pytest.raises(InputError):
        read_input(str(p))
