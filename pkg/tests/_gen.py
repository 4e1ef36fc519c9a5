"""Seeded instance generators shared by the test modules."""
from __future__ import annotations

import numpy as np

from speclap.constructors import random_hermitian_system, random_system, random_unitary_system
from speclap.families import random_multigraph
from speclap.graph import Graph, from_pairs


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def simple_graph(r: np.random.Generator, n: int, extra: int | None = None) -> Graph:
    """Connected simple loopless graph on v0..v{n-1}."""
    vs = [f"v{i}" for i in range(n)]
    pairs = {(int(r.integers(i)), i) for i in range(1, n)}
    extra = int(r.integers(0, n + 1)) if extra is None else extra
    for _ in range(extra):
        if n < 2:
            break
        i, j = sorted(int(x) for x in r.choice(n, 2, replace=False))
        pairs.add((i, j))
    return from_pairs(vs, [(vs[i], vs[j]) for i, j in sorted(pairs)])


def multigraph(r: np.random.Generator, nmax: int = 8, rank_max: int = 2) -> Graph:
    n = int(r.integers(2, nmax + 1))
    return random_multigraph(
        r, n, extra_edges=int(r.integers(0, n)), loops=int(r.integers(0, 2)), rank=(1, rank_max)
    )


def hermitian_instance(seed: int, nmax: int = 8, rank_max: int = 2):
    r = rng(seed)
    g = multigraph(r, nmax, rank_max)
    return g, random_hermitian_system(g, r)


def general_instance(seed: int, nmax: int = 8, rank_max: int = 3):
    r = rng(seed)
    g = multigraph(r, nmax, rank_max)
    return g, random_system(g, r)


def unitary_instance(seed: int, nmax: int = 8, rank_max: int = 3):
    r = rng(seed)
    n = int(r.integers(2, nmax + 1))
    rank = int(r.integers(1, rank_max + 1))
    g = random_multigraph(r, n, extra_edges=int(r.integers(0, n)), loops=int(r.integers(0, 2)), rank=rank)
    return g, random_unitary_system(g, r)


def association(r: np.random.Generator, g: Graph, p: float = 0.5) -> dict:
    while True:
        assoc = {v: [w for w in g.vertex_ids if r.random() < p] for v in g.vertex_ids}
        if any(assoc.values()):
            return assoc
