"""JSON documents: GraphSpec with optional matrices and weights, plus a
deterministic encoder for reports.

Matrices are row-major nested lists whose entries are ``[re, im]`` pairs
(plain numbers are accepted on input). The optional top-level ``weights``
object maps vertex ids to per-coordinate positive reals.
"""
from __future__ import annotations

import json
import math
import sys
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .errors import InputError, ShapeError
from .graph import Graph, build_graph, undirected_edges
from .transmission import DiagonalWeight, TransmissionSystem


def decode_matrix(obj) -> np.ndarray:
    try:
        rows = [[complex(x[0], x[1]) if isinstance(x, list) else complex(x) for x in row] for row in obj]
    except (TypeError, IndexError, ValueError) as exc:
        raise ShapeError(f"malformed matrix: {exc}") from exc
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ShapeError("matrix rows must be nonempty and of equal length")
    return np.array(rows, dtype=complex)


def encode_matrix(M: np.ndarray) -> list:
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def read_graphspec(doc: Mapping | str) -> tuple[Graph, TransmissionSystem | None, DiagonalWeight | None]:
    """Graph, system (None when no edge carries matrices) and weights (None when absent).

    Edge ``i`` becomes directed ids ``2i`` (from -> to, ``forward``) and
    ``2i+1`` (``backward``).
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    g = build_graph(doc)
    edges = doc.get("edges", [])
    has = [("forward" in e) or ("backward" in e) for e in edges]
    ts = None
    if any(has):
        if not all("forward" in e and "backward" in e for e in edges):
            raise InputError("either every edge or no edge must carry forward/backward matrices")
        mats = {}
        for i, e in enumerate(edges):
            mats[2 * i] = decode_matrix(e["forward"])
            mats[2 * i + 1] = decode_matrix(e["backward"])
        ts = TransmissionSystem(mats)
        ts.check(g)
    w = None
    if "weights" in doc:
        try:
            w = DiagonalWeight({str(k): np.asarray(v, dtype=float) for k, v in doc["weights"].items()})
        except (TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"malformed weights: {exc}") from exc
        w.to_vector(g)
    return g, ts, w


def write_graphspec(
    g: Graph, ts: TransmissionSystem | None = None, w: DiagonalWeight | None = None
) -> dict:
    """Inverse of :func:`read_graphspec`, op-pairs listed by their smaller id."""
    doc: dict[str, Any] = {"vertices": [{"id": v, "rank": r} for v, r in g.vertices]}
    edges = []
    for lo, hi in undirected_edges(g):
        e = g.edge[lo]
        item: dict[str, Any] = {"from": e.tail, "to": e.head}
        if ts is not None:
            item["forward"] = encode_matrix(ts[lo])
            item["backward"] = encode_matrix(ts[hi])
        edges.append(item)
    doc["edges"] = edges
    if w is not None:
        doc["weights"] = {v: [float(x) for x in w.weights[v]] for v in g.vertex_ids}
    return doc


def encode_eigenvalues(values) -> list:
    return [[float(np.real(z)), float(np.imag(z))] for z in values]


def _plain(obj):
    if isinstance(obj, Mapping):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(x) for x in items]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(obj, (complex, np.complexfloating)):
        return [_plain(obj.real), _plain(obj.imag)]
    return obj


def dumps(obj) -> str:
    """Sorted keys, shortest round-trip floats, non-finite values as strings."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def read_input(path: str) -> dict:
    """Parse a JSON document from a file path or ``-`` for stdin."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path!r}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("top-level JSON value must be an object")
    return doc
