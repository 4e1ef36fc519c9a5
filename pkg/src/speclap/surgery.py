"""Collapse, push-forward collapse and amalgamation of transmission graphs.

Collapse keeps every directed edge and uses collapsed degrees, which gives
interlacing. Push-forward and amalgamation return the ORIGINAL degrees as a
:class:`DiagonalWeight`; under that weight the Laplacian is unchanged up to
a coordinate permutation (push-forward) or exactly (amalgamation).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import InputError, RankClash, UnknownVertex
from .graph import DirectedEdge, Graph, undirected_edges
from .transmission import DiagonalWeight, TransmissionSystem, default_weight


@dataclass(frozen=True, eq=False)
class VertexPartition:
    """The surjection vertex -> class id."""

    classes: Mapping[str, str]

    def order(self, g: Graph) -> list[str]:
        """Class ids by first appearance in vertex order."""
        self.check(g)
        seen: dict[str, None] = {}
        for v in g.vertex_ids:
            seen.setdefault(self.classes[v], None)
        return list(seen)

    def members(self, g: Graph) -> dict[str, list[str]]:
        out = {c: [] for c in self.order(g)}
        for v in g.vertex_ids:
            out[self.classes[v]].append(v)
        return out

    def check(self, g: Graph) -> None:
        missing = [v for v in g.vertex_ids if v not in self.classes]
        if missing:
            raise InputError(f"partition does not map vertices {missing}")
        extra = set(self.classes) - set(g.vertex_ids)
        if extra:
            raise UnknownVertex(f"partition names unknown vertices {sorted(extra)}")

    @classmethod
    def singletons(cls, g: Graph) -> "VertexPartition":
        return cls({v: v for v in g.vertex_ids})

    def then(self, other: "VertexPartition") -> "VertexPartition":
        """Composite: first this partition, then ``other`` on its classes."""
        return VertexPartition({v: other.classes[c] for v, c in self.classes.items()})


def collapse(
    g: Graph, ts: TransmissionSystem, part: VertexPartition
) -> tuple[Graph, TransmissionSystem]:
    ts.check(g)
    members = part.members(g)
    ranks = {}
    for c, vs in members.items():
        rs = {g.rank[v] for v in vs}
        if len(rs) != 1:
            raise RankClash(f"class {c!r} mixes ranks {sorted(rs)}")
        ranks[c] = rs.pop()
    cls = part.classes
    dedges = tuple(DirectedEdge(e.id, cls[e.tail], cls[e.head], e.op) for e in g.dedges)
    h = Graph(tuple((c, ranks[c]) for c in members), dedges)
    return h, TransmissionSystem({e.id: ts[e.id] for e in g.dedges})


def pushforward_collapse(
    g: Graph, ts: TransmissionSystem, part: VertexPartition
) -> tuple[Graph, TransmissionSystem, DiagonalWeight]:
    """Class ``p`` carries the direct sum of its members' spaces, in vertex order."""
    ts.check(g)
    members = part.members(g)
    cls = part.classes
    offset, ranks = {}, {}
    for c, vs in members.items():
        k = 0
        for v in vs:
            offset[v] = k
            k += g.rank[v]
        ranks[c] = k
    mats, dedges = {}, []
    for e in g.dedges:
        ch, ct = cls[e.head], cls[e.tail]
        P = np.zeros((ranks[ch], ranks[ct]), dtype=complex)
        oh, ot = offset[e.head], offset[e.tail]
        P[oh : oh + g.rank[e.head], ot : ot + g.rank[e.tail]] = ts[e.id]
        mats[e.id] = P
        dedges.append(DirectedEdge(e.id, ct, ch, e.op))
    h = Graph(tuple((c, ranks[c]) for c in members), tuple(dedges))
    d = default_weight(g)
    weight = DiagonalWeight(
        {c: np.concatenate([d.weights[v] for v in vs]) for c, vs in members.items()}
    )
    return h, TransmissionSystem(mats), weight


def amalgamate(
    g: Graph, ts: TransmissionSystem
) -> tuple[Graph, TransmissionSystem, DiagonalWeight]:
    """Merge parallel edges by summing and all loops at a vertex into one.

    Merged edges are numbered by the first op-pair (smallest id) of each
    group and keep that pair's orientation, so simple graphs come back with
    the same ids. A merged loop carries half the sum over all loop
    directions at its vertex in each direction.
    """
    ts.check(g)
    groups: dict[frozenset, list[int]] = {}
    for lo, _ in undirected_edges(g):
        e = g.edge[lo]
        groups.setdefault(frozenset((e.tail, e.head)), []).append(lo)
    dedges, mats = [], {}
    for i, los in enumerate(groups.values()):
        first = g.edge[los[0]]
        u, w = first.tail, first.head
        fwd = np.zeros((g.rank[w], g.rank[u]), dtype=complex)
        bwd = np.zeros((g.rank[u], g.rank[w]), dtype=complex)
        if u == w:
            for lo in los:
                fwd += ts[lo] + ts[g.edge[lo].op]
            fwd = 0.5 * fwd
            bwd = fwd.copy()
        else:
            for lo in los:
                e = g.edge[lo]
                a, b = (lo, e.op) if e.tail == u else (e.op, lo)
                fwd += ts[a]
                bwd += ts[b]
        dedges += [DirectedEdge(2 * i, u, w, 2 * i + 1), DirectedEdge(2 * i + 1, w, u, 2 * i)]
        mats[2 * i], mats[2 * i + 1] = fwd, bwd
    h = Graph(g.vertices, tuple(dedges))
    return h, TransmissionSystem(mats), default_weight(g)
