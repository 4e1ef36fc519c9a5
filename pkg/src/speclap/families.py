"""Small named graphs and a seeded random multigraph generator."""
from __future__ import annotations

import numpy as np

from .graph import Graph, from_pairs, is_connected


def _names(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{i}" for i in range(n)]


def cycle(n: int, rank: int = 1) -> Graph:
    vs = _names(n)
    return from_pairs(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)], rank)


def path(n: int, rank: int = 1) -> Graph:
    vs = _names(n)
    return from_pairs(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)], rank)


def complete(n: int, rank: int = 1) -> Graph:
    vs = _names(n)
    return from_pairs(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)], rank)


def prism(n: int, rank: int = 1) -> Graph:
    """C_n x K_2; 3-regular with diameter floor(n/2) + 1."""
    vs = _names(2 * n)
    pairs = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    pairs += [(vs[n + i], vs[n + (i + 1) % n]) for i in range(n)]
    pairs += [(vs[i], vs[n + i]) for i in range(n)]
    return from_pairs(vs, pairs, rank)


def petersen(rank: int = 1) -> Graph:
    vs = _names(10)
    outer = [(vs[i], vs[(i + 1) % 5]) for i in range(5)]
    spokes = [(vs[i], vs[i + 5]) for i in range(5)]
    inner = [(vs[5 + i], vs[5 + (i + 2) % 5]) for i in range(5)]
    return from_pairs(vs, outer + spokes + inner, rank)


def random_multigraph(
    rng: np.random.Generator,
    n: int,
    extra_edges: int = 0,
    loops: int = 0,
    rank: int | tuple[int, int] = 1,
    connected: bool = True,
) -> Graph:
    """Random spanning tree (when ``connected``) plus ``extra_edges`` random
    pairs (repeats allowed) plus ``loops`` random loops.

    ``rank`` may be a ``(lo, hi)`` range for independent per-vertex ranks.
    """
    vs = _names(n)
    pairs: list[tuple[str, str]] = []
    if connected:
        for i in range(1, n):
            pairs.append((vs[int(rng.integers(i))], vs[i]))
    for _ in range(extra_edges):
        if n < 2:
            break
        i, j = rng.choice(n, size=2, replace=False)
        pairs.append((vs[int(i)], vs[int(j)]))
    for _ in range(loops):
        v = vs[int(rng.integers(n))]
        pairs.append((v, v))
    if isinstance(rank, tuple):
        verts = [(v, int(rng.integers(rank[0], rank[1] + 1))) for v in vs]
    else:
        verts = [(v, rank) for v in vs]
    g = from_pairs(verts, pairs)
    assert not connected or is_connected(g)
    return g
