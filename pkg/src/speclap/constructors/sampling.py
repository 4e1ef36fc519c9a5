"""Seeded random transmission systems.

Seeds go through ``numpy.random.default_rng`` (PCG64), so an integer seed
or an existing Generator both work and no global state is touched.
"""
from __future__ import annotations

import numpy as np

from ..errors import RankMismatch
from ..graph import Graph, undirected_edges
from ..transmission import TransmissionSystem


def _gauss(rng: np.random.Generator, r: int, c: int) -> np.ndarray:
    return (rng.standard_normal((r, c)) + 1j * rng.standard_normal((r, c))) / np.sqrt(2)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(_gauss(rng, n, n))
    d = np.diag(R)
    return Q * (d / np.abs(d))[None, :]


def random_unitary_system(g: Graph, seed=None) -> TransmissionSystem:
    """Haar U forward, U^* backward on every op-pair (strictly unitary)."""
    rng = np.random.default_rng(seed)
    mats = {}
    for lo, hi in undirected_edges(g):
        e = g.edge[lo]
        if g.rank[e.tail] != g.rank[e.head]:
            raise RankMismatch(f"edge {lo} joins ranks {g.rank[e.tail]} and {g.rank[e.head]}")
        U = haar_unitary(rng, g.rank[e.head])
        mats[lo], mats[hi] = U, U.conj().T
    return TransmissionSystem(mats)


def random_hermitian_system(g: Graph, seed=None, scale: float = 1.0) -> TransmissionSystem:
    """Gaussian P forward and P^* backward; ranks may differ across an edge."""
    rng = np.random.default_rng(seed)
    mats = {}
    for lo, hi in undirected_edges(g):
        e = g.edge[lo]
        P = scale * _gauss(rng, g.rank[e.head], g.rank[e.tail])
        mats[lo], mats[hi] = P, P.conj().T
    return TransmissionSystem(mats)


def random_system(g: Graph, seed=None, scale: float = 1.0) -> TransmissionSystem:
    """Independent Gaussian matrices in both directions (generally non-Hermitian)."""
    rng = np.random.default_rng(seed)
    mats = {}
    for lo, hi in undirected_edges(g):
        e = g.edge[lo]
        mats[lo] = scale * _gauss(rng, g.rank[e.head], g.rank[e.tail])
        mats[hi] = scale * _gauss(rng, g.rank[e.tail], g.rank[e.head])
    return TransmissionSystem(mats)
