"""Finite multigraphs stored as op-paired directed edges.

Every undirected edge (loops included) is two directed edges that are each
other's ``op``. Vertex order and edge ids are fixed at construction so every
matrix assembled from a graph is reproducible.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    BadOpPairing,
    BadRank,
    InputError,
    NotSimple,
    UnknownVertex,
    Unreachable,
)


@dataclass(frozen=True)
class DirectedEdge:
    id: int
    tail: str
    head: str
    op: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True, eq=False)
class Graph:
    """Multigraph with loops and a bit-rank ``n(v) >= 1`` per vertex.

    ``vertices`` is an ordered tuple of ``(vertex_id, rank)``; ``dedges`` is an
    ordered tuple of :class:`DirectedEdge`.
    """

    vertices: tuple[tuple[str, int], ...]
    dedges: tuple[DirectedEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((str(v), int(r)) for v, r in self.vertices))
        object.__setattr__(self, "dedges", tuple(self.dedges))
        seen = set()
        for v, r in self.vertices:
            if v in seen:
                raise InputError(f"duplicate vertex id {v!r}")
            seen.add(v)
            if r < 1:
                raise BadRank(f"vertex {v!r} has rank {r} < 1")
        by_id = {}
        for e in self.dedges:
            if e.id in by_id:
                raise BadOpPairing(f"duplicate directed edge id {e.id}")
            by_id[e.id] = e
            for end in (e.tail, e.head):
                if end not in seen:
                    raise UnknownVertex(f"edge {e.id} references unknown vertex {end!r}")
        for e in self.dedges:
            if e.op == e.id:
                raise BadOpPairing(f"edge {e.id} is its own op")
            o = by_id.get(e.op)
            if o is None:
                raise BadOpPairing(f"edge {e.id} has missing op {e.op}")
            if o.op != e.id:
                raise BadOpPairing(f"op is not an involution at edge {e.id}")
            if o.tail != e.head or o.head != e.tail:
                raise BadOpPairing(f"edge {e.op} does not reverse edge {e.id}")

    # -- lookups ---------------------------------------------------------
    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}

    @cached_property
    def rank(self) -> dict[str, int]:
        return dict(self.vertices)

    @cached_property
    def edge(self) -> dict[int, DirectedEdge]:
        return {e.id: e for e in self.dedges}

    @cached_property
    def offsets(self) -> dict[str, int]:
        """Start of each vertex block in the stacked coordinate vector."""
        out, pos = {}, 0
        for v, r in self.vertices:
            out[v] = pos
            pos += r
        return out

    @cached_property
    def dim(self) -> int:
        return sum(r for _, r in self.vertices)

    @cached_property
    def degree(self) -> dict[str, int]:
        d = {v: 0 for v in self.vertex_ids}
        for e in self.dedges:
            d[e.head] += 1
        return d

    @cached_property
    def neighbors(self) -> dict[str, frozenset[str]]:
        nb: dict[str, set[str]] = {v: set() for v in self.vertex_ids}
        for e in self.dedges:
            nb[e.tail].add(e.head)
            nb[e.head].add(e.tail)
        return {v: frozenset(s) for v, s in nb.items()}

    def block(self, v: str) -> slice:
        o = self.offsets[v]
        return slice(o, o + self.rank[v])

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E+|={len(self.dedges)}, dim={self.dim})"


def from_pairs(
    vertices: Iterable[str | tuple[str, int]],
    pairs: Iterable[tuple[str, str]],
    rank: int = 1,
) -> Graph:
    """Graph from undirected ``(u, v)`` pairs; pair ``i`` becomes ids ``2i`` (u->v) and ``2i+1``."""
    verts = [(v, rank) if isinstance(v, str) else (v[0], v[1]) for v in vertices]
    dedges = []
    for i, (u, v) in enumerate(pairs):
        dedges.append(DirectedEdge(2 * i, u, v, 2 * i + 1))
        dedges.append(DirectedEdge(2 * i + 1, v, u, 2 * i))
    return Graph(tuple(verts), tuple(dedges))


def with_ranks(g: Graph, ranks: Mapping[str, int] | int) -> Graph:
    if isinstance(ranks, int):
        ranks = {v: ranks for v in g.vertex_ids}
    return Graph(tuple((v, ranks.get(v, r)) for v, r in g.vertices), g.dedges)


def build_graph(spec: Mapping | str) -> Graph:
    """Parse the combinatorial part of a GraphSpec document.

    Matrices in ``forward``/``backward`` are ignored here; see
    :func:`speclap.serialize.read_graphspec` for the full document.
    """
    if isinstance(spec, str):
        spec = json.loads(spec)
    try:
        verts = [(str(v["id"]), int(v.get("rank", 1))) for v in spec["vertices"]]
        pairs = [(str(e["from"]), str(e["to"])) for e in spec.get("edges", [])]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed GraphSpec: {exc}") from exc
    return from_pairs(verts, pairs)


def undirected_edges(g: Graph) -> list[tuple[int, int]]:
    """Op-pairs as ``(min_id, max_id)``, ordered by the smaller id."""
    return sorted({(min(e.id, e.op), max(e.id, e.op)) for e in g.dedges})


def is_simple(g: Graph) -> bool:
    seen = set()
    for lo, _ in undirected_edges(g):
        e = g.edge[lo]
        if e.is_loop:
            return False
        key = frozenset((e.tail, e.head))
        if key in seen:
            return False
        seen.add(key)
    return True


def degree_profile(g: Graph) -> dict[str, tuple[int, int]]:
    """``v -> (d_v, d_hat_v)``; d_hat counts distinct non-self neighbours."""
    return {v: (g.degree[v], len(g.neighbors[v] - {v})) for v in g.vertex_ids}


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Classical integer adjacency: entry (w, v) counts directed edges v -> w."""
    n = len(g)
    A = np.zeros((n, n), dtype=np.int64)
    for e in g.dedges:
        A[g.index[e.head], g.index[e.tail]] += 1
    return A


def _bfs(g: Graph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _check_vertices(g: Graph, vs: Iterable[str]) -> None:
    for v in vs:
        if v not in g.index:
            raise UnknownVertex(f"unknown vertex {v!r}")


def distance(g: Graph, u: str, v: str) -> int:
    _check_vertices(g, (u, v))
    d = _bfs(g, u).get(v)
    if d is None:
        raise Unreachable(f"{v!r} is not reachable from {u!r}")
    return d


def distances_from(g: Graph, u: str) -> dict[str, int]:
    _check_vertices(g, (u,))
    return _bfs(g, u)


def diameter(g: Graph) -> float:
    """Max pairwise distance; ``math.inf`` when disconnected."""
    best = 0
    for v in g.vertex_ids:
        dist = _bfs(g, v)
        if len(dist) < len(g):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def is_connected(g: Graph) -> bool:
    return len(g) == 0 or len(_bfs(g, g.vertex_ids[0])) == len(g)


def boundary(g: Graph, A: Iterable[str]) -> list[DirectedEdge]:
    """Directed edges leaving ``A`` (tail in A, head outside), by edge id."""
    members = set(A)
    _check_vertices(g, members)
    return sorted(
        (e for e in g.dedges if e.tail in members and e.head not in members),
        key=lambda e: e.id,
    )


def incidence(g: Graph) -> np.ndarray:
    """0/1 vertex-by-edge incidence matrix of a simple loopless graph."""
    if not is_simple(g):
        raise NotSimple("incidence matrix needs a simple loopless graph")
    und = undirected_edges(g)
    M = np.zeros((len(g), len(und)), dtype=np.int64)
    for j, (lo, _) in enumerate(und):
        e = g.edge[lo]
        M[g.index[e.tail], j] = 1
        M[g.index[e.head], j] = 1
    return M


def dual(g: Graph) -> Graph:
    """Edge graph: one rank-1 vertex ``e<j>`` per undirected edge, joined per shared endpoint."""
    if not is_simple(g):
        raise NotSimple("dual graph needs a simple loopless graph")
    und = undirected_edges(g)
    ends = [frozenset((g.edge[lo].tail, g.edge[lo].head)) for lo, _ in und]
    names = [f"e{j}" for j in range(len(und))]
    pairs = []
    for i in range(len(und)):
        for j in range(i + 1, len(und)):
            for _ in sorted(ends[i] & ends[j], key=g.index.__getitem__):
                pairs.append((names[i], names[j]))
    return from_pairs(names, pairs)


def vertex_subset(g: Graph, members: Sequence[str] | str) -> frozenset[str]:
    """Validated subset; accepts a comma-separated string as well."""
    if isinstance(members, str):
        members = [m for m in (s.strip() for s in members.split(",")) if m]
    out = frozenset(members)
    _check_vertices(g, out)
    return out
