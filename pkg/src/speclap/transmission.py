"""Transmission systems and the block matrices assembled from them.

Block convention: the block at (row = head vertex, column = tail vertex)
collects ``P(e)``, so the assembled matrix acts as

    (A f)(w) = sum over edges e with head w of P(e) f(tail(e)).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DegreeZero, RankMismatch, ShapeError
from .graph import Graph

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class TransmissionSystem:
    """Directed-edge id -> complex matrix of shape rank(head) x rank(tail)."""

    matrices: Mapping[int, np.ndarray]

    def __post_init__(self):
        object.__setattr__(
            self,
            "matrices",
            {int(k): np.atleast_2d(np.asarray(m, dtype=complex)) for k, m in self.matrices.items()},
        )

    def __getitem__(self, edge_id: int) -> np.ndarray:
        return self.matrices[edge_id]

    def check(self, g: Graph) -> None:
        missing = [e.id for e in g.dedges if e.id not in self.matrices]
        if missing:
            raise ShapeError(f"no matrix for directed edges {missing[:5]}")
        for e in g.dedges:
            want = (g.rank[e.head], g.rank[e.tail])
            if self.matrices[e.id].shape != want:
                raise ShapeError(
                    f"edge {e.id} ({e.tail}->{e.head}) has shape "
                    f"{self.matrices[e.id].shape}, expected {want}"
                )


@dataclass(frozen=True)
class Classification:
    hermitian_symmetric: bool
    invertible: bool
    strictly_unitary: bool
    K: float
    asym: float


@dataclass(frozen=True, eq=False)
class Cochain:
    """One complex vector per vertex (a section of the vertex spaces)."""

    blocks: Mapping[str, np.ndarray]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", {v: np.asarray(b, dtype=complex).ravel() for v, b in self.blocks.items()}
        )

    def __getitem__(self, v: str) -> np.ndarray:
        return self.blocks[v]

    def check(self, g: Graph) -> None:
        for v in g.vertex_ids:
            if v not in self.blocks or self.blocks[v].shape != (g.rank[v],):
                raise ShapeError(f"cochain block at {v!r} does not have length {g.rank[v]}")

    def to_vector(self, g: Graph) -> np.ndarray:
        self.check(g)
        if not g.vertex_ids:
            return np.zeros(0, dtype=complex)
        return np.concatenate([self.blocks[v] for v in g.vertex_ids])

    @classmethod
    def from_vector(cls, g: Graph, x: np.ndarray) -> "Cochain":
        x = np.asarray(x)
        if x.shape != (g.dim,):
            raise ShapeError(f"vector of shape {x.shape} does not match dimension {g.dim}")
        return cls({v: x[g.block(v)].copy() for v in g.vertex_ids})

    def norms(self) -> dict[str, float]:
        return {v: float(np.linalg.norm(b)) for v, b in self.blocks.items()}


@dataclass(frozen=True, eq=False)
class DiagonalWeight:
    """Strictly positive per-coordinate weights replacing the degree diagonal T."""

    weights: Mapping[str, np.ndarray]

    def __post_init__(self):
        w = {v: np.asarray(x, dtype=float).ravel() for v, x in self.weights.items()}
        for v, x in w.items():
            if np.any(~(x > 0)):
                raise DegreeZero(f"non-positive weight at vertex {v!r}")
        object.__setattr__(self, "weights", w)

    def to_vector(self, g: Graph) -> np.ndarray:
        for v in g.vertex_ids:
            if v not in self.weights or self.weights[v].shape != (g.rank[v],):
                raise ShapeError(f"weight block at {v!r} does not have length {g.rank[v]}")
        if not g.vertex_ids:
            return np.zeros(0)
        return np.concatenate([self.weights[v] for v in g.vertex_ids])


def default_weight(g: Graph) -> DiagonalWeight:
    """Degree d_v on every coordinate of v."""
    zero = [v for v in g.vertex_ids if g.degree[v] == 0]
    if zero:
        raise DegreeZero(f"isolated vertices {zero} need an explicit weight")
    return DiagonalWeight({v: np.full(g.rank[v], float(g.degree[v])) for v in g.vertex_ids})


def identity_system(g: Graph) -> TransmissionSystem:
    mats = {}
    for e in g.dedges:
        if g.rank[e.tail] != g.rank[e.head]:
            raise RankMismatch(f"edge {e.id} joins ranks {g.rank[e.tail]} and {g.rank[e.head]}")
        mats[e.id] = np.eye(g.rank[e.head], dtype=complex)
    return TransmissionSystem(mats)


def classify(g: Graph, ts: TransmissionSystem, tol: float = DEFAULT_TOL) -> Classification:
    ts.check(g)
    K = asym = 0.0
    invertible = True
    for e in g.dedges:
        P, Q = ts[e.id], ts[e.op]
        K = max(K, float(np.linalg.norm(P, 2)))
        asym = max(asym, float(np.linalg.norm(P.conj().T - Q, 2)))
        if invertible:
            if P.shape[0] != P.shape[1]:
                invertible = False
            elif np.linalg.norm(P @ Q - np.eye(P.shape[0]), 2) > tol:
                invertible = False
    herm = asym <= tol
    return Classification(herm, invertible, herm and invertible, K, asym)


def block_adjacency(g: Graph, ts: TransmissionSystem) -> np.ndarray:
    ts.check(g)
    A = np.zeros((g.dim, g.dim), dtype=complex)
    for e in g.dedges:
        A[g.block(e.head), g.block(e.tail)] += ts[e.id]
    return A


def _weight_vector(g: Graph, w: DiagonalWeight | None) -> np.ndarray:
    return (default_weight(g) if w is None else w).to_vector(g)


def normalized_adjacency(
    g: Graph, ts: TransmissionSystem, w: DiagonalWeight | None = None
) -> np.ndarray:
    """T^{-1/2} A^P T^{-1/2}, T = diag(w) or the degree diagonal."""
    s = 1.0 / np.sqrt(_weight_vector(g, w))
    return s[:, None] * block_adjacency(g, ts) * s[None, :]


def laplacian(g: Graph, ts: TransmissionSystem, w: DiagonalWeight | None = None) -> np.ndarray:
    return np.eye(g.dim, dtype=complex) - normalized_adjacency(g, ts, w)


def apply_laplacian(
    g: Graph, ts: TransmissionSystem, f: Cochain, w: DiagonalWeight | None = None
) -> Cochain:
    """Matrix-free Laplacian action, edge by edge."""
    ts.check(g)
    f.check(g)
    wt = default_weight(g) if w is None else w
    wt.to_vector(g)
    s = {v: 1.0 / np.sqrt(wt.weights[v]) for v in g.vertex_ids}
    out = {v: f[v].copy() for v in g.vertex_ids}
    for e in g.dedges:
        out[e.head] -= s[e.head] * (ts[e.id] @ (s[e.tail] * f[e.tail]))
    return Cochain(out)
