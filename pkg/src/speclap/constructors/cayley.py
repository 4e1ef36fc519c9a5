"""Cayley graphs of finite abelian groups and their character-sum spectra."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..errors import BadParam, IdentityInS, NotCompatible, NotSymmetric
from ..graph import DirectedEdge, Graph
from ..spectra import Spectrum
from ..transmission import TransmissionSystem

Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{m1} x ... x Z_{mr}, elements as integer tuples."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise BadParam(f"bad moduli {self.moduli}")

    @property
    def order(self) -> int:
        return int(np.prod(self.moduli))

    def elements(self) -> list[Element]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def normalize(self, s: Sequence[int] | int) -> Element:
        s = (s,) if isinstance(s, (int, np.integer)) else tuple(s)
        if len(s) != len(self.moduli):
            raise BadParam(f"element {s} does not match moduli {self.moduli}")
        return tuple(int(x) % m for x, m in zip(s, self.moduli))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    @property
    def identity(self) -> Element:
        return tuple(0 for _ in self.moduli)

    def label(self, x: Element) -> str:
        return ",".join(map(str, x))

    def character(self, a: Element, x: Element) -> complex:
        phase = sum(ai * xi / m for ai, xi, m in zip(a, x, self.moduli))
        return complex(np.exp(2j * np.pi * phase))


def _check_generators(G: AbelianGroup, S) -> list[Element]:
    S = [G.normalize(s) for s in S]
    counts = Counter(S)
    if G.identity in counts:
        raise IdentityInS("the identity cannot be a generator")
    for s, c in counts.items():
        if counts.get(G.neg(s), 0) != c:
            raise NotSymmetric(f"{s} and its inverse occur with different multiplicity")
    return S


def _cayley_edges(G: AbelianGroup, S) -> list[tuple[Element, Element, Element]]:
    """One (x, x+s, s) per undirected edge, in deterministic order.

    For s != -s the edge is listed under the lexicographically smaller of
    the pair; for involutions under the endpoint x < x+s. Each generator
    occurrence contributes its own parallel edge.
    """
    S = _check_generators(G, S)
    counts = Counter(S)
    out = []
    for s in sorted(counts):
        inv = G.neg(s)
        if inv < s:
            continue
        for _ in range(counts[s]):
            for x in G.elements():
                y = G.add(x, s)
                if inv == s and y < x:
                    continue
                out.append((x, y, s))
    return out


def cayley_graph(G: AbelianGroup, S) -> Graph:
    """Vertex per group element, directed edge (x, x+s) per x and s in S.

    Forward edge ids are ``2i`` (labelled s) and backward ``2i+1`` (labelled -s).
    """
    edges = _cayley_edges(G, S)
    dedges = []
    for i, (x, y, _) in enumerate(edges):
        dedges.append(DirectedEdge(2 * i, G.label(x), G.label(y), 2 * i + 1))
        dedges.append(DirectedEdge(2 * i + 1, G.label(y), G.label(x), 2 * i))
    return Graph(tuple((G.label(x), 1) for x in G.elements()), tuple(dedges))


def _check_F(G: AbelianGroup, S, F: Mapping) -> tuple[dict[Element, np.ndarray], int]:
    S = _check_generators(G, S)
    mats = {G.normalize(k): np.atleast_2d(np.asarray(v, dtype=complex)) for k, v in F.items()}
    missing = [s for s in set(S) if s not in mats]
    if missing:
        raise NotCompatible(f"no F given for generators {missing}")
    shapes = {mats[s].shape for s in set(S)}
    if len(shapes) != 1 or next(iter(shapes))[0] != next(iter(shapes))[1]:
        raise NotCompatible(f"F must be square of one size, got shapes {shapes}")
    for s in set(S):
        if np.linalg.norm(mats[G.neg(s)] - mats[s].conj().T) > 1e-12:
            raise NotCompatible(f"F(-s) != F(s)^* at s={s}")
    return mats, next(iter(shapes))[0]


def cayley_system(G: AbelianGroup, S, F: Mapping) -> tuple[Graph, TransmissionSystem]:
    """P((x, x+s, s)) = F(s) on the graph from :func:`cayley_graph`.

    Returns ``(graph_with_rank_N, system)``; the graph vertices get rank N.
    """
    mats, N = _check_F(G, S, F)
    edges = _cayley_edges(G, S)
    base = cayley_graph(G, S)
    g = Graph(tuple((v, N) for v, _ in base.vertices), base.dedges)
    P = {}
    for i, (_, _, s) in enumerate(edges):
        P[2 * i] = mats[s]
        P[2 * i + 1] = mats[G.neg(s)]
    return g, TransmissionSystem(P)


def cayley_spectrum(G: AbelianGroup, S, F: Mapping, k: int | None = None) -> Spectrum:
    """{1 - mu/k : mu eigenvalue of sum_s chi(s) F(s), chi over all characters}."""
    S = _check_generators(G, S)
    mats, N = _check_F(G, S, F)
    if k is not None and k != len(S):
        raise BadParam(f"k={k} but |S|={len(S)}")
    k = len(S)
    vals = []
    for a in G.elements():
        M = sum((G.character(a, s) * mats[s] for s in S), np.zeros((N, N), complex))
        vals.extend(1 - np.linalg.eigvalsh(0.5 * (M + M.conj().T)) / k)
    vals = np.sort(np.asarray(vals, dtype=float)).astype(complex)
    return Spectrum(vals, None, True)
