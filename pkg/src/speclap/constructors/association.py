"""Association transmission systems.

An association assigns each vertex ``a`` a set ``A(a)`` of associates. Vertex
``a`` carries the function space on ``A(a)`` (basis in global vertex order)
and edge ``a -> b`` carries the 0/1 map passing values on ``A(a) & A(b)``.

The Laplacian is normalized per coordinate by ``N(b, z)``, the number of
neighbours of ``b`` that have ``z`` as an associate. Coordinates with
``N(b, z) = 0`` have no incident couplings, so their weight is set to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from ..bounds import BoundReport, make_report
from ..errors import EmptyAssociation, InputError, NotSimple, ZeroMass
from ..graph import DirectedEdge, Graph, is_simple
from ..spectra import spectrum
from ..transmission import DEFAULT_TOL, Cochain, DiagonalWeight, TransmissionSystem, laplacian


@dataclass(frozen=True, eq=False)
class Association:
    assoc: Mapping[str, tuple[str, ...]]

    @classmethod
    def of(cls, g: Graph, assoc: Mapping[str, Iterable[str]]) -> "Association":
        """Validate against ``g`` and sort each set by vertex order."""
        out = {}
        for v in g.vertex_ids:
            members = set(assoc.get(v, ()))
            unknown = members - set(g.vertex_ids)
            if unknown:
                raise InputError(f"association of {v!r} names unknown vertices {sorted(unknown)}")
            out[v] = tuple(sorted(members, key=g.index.__getitem__))
        extra = set(assoc) - set(g.vertex_ids)
        if extra:
            raise InputError(f"association given for unknown vertices {sorted(extra)}")
        return cls(out)

    def __getitem__(self, v: str) -> tuple[str, ...]:
        return self.assoc[v]


def _prepare(g: Graph, assoc) -> Association:
    if not is_simple(g):
        raise NotSimple("associations need a simple loopless graph")
    if not isinstance(assoc, Association):
        assoc = Association.of(g, assoc)
    if all(len(assoc[v]) == 0 for v in g.vertex_ids):
        raise EmptyAssociation("every associate set is empty")
    return assoc


def association_counts(g: Graph, assoc) -> dict[tuple[str, str], int]:
    """N(a, v) = #{b adjacent to a with v in A(b)}, for v in A(a)."""
    assoc = _prepare(g, assoc)
    N = {}
    for a in g.vertex_ids:
        nbrs = g.neighbors[a] - {a}
        for v in assoc[a]:
            N[(a, v)] = sum(1 for b in nbrs if v in assoc[b])
    return N


def association_system(
    g: Graph, assoc
) -> tuple[Graph, TransmissionSystem, DiagonalWeight]:
    """Graph with ranks |A(a)|, the 0/1 transmission system and the N-weights.

    Vertices with an empty associate set carry no coordinates and are dropped
    together with their edges; the per-coordinate weights do not depend on
    them, so the Laplacian on the remaining space is unchanged.
    """
    assoc = _prepare(g, assoc)
    N = association_counts(g, assoc)
    keep = [v for v in g.vertex_ids if assoc[v]]
    kept = set(keep)
    dedges = tuple(
        DirectedEdge(e.id, e.tail, e.head, e.op)
        for e in g.dedges
        if e.tail in kept and e.head in kept
    )
    h = Graph(tuple((v, len(assoc[v])) for v in keep), dedges)
    pos = {v: {z: i for i, z in enumerate(assoc[v])} for v in keep}
    mats = {}
    for e in h.dedges:
        P = np.zeros((h.rank[e.head], h.rank[e.tail]), dtype=complex)
        for z, i in pos[e.tail].items():
            j = pos[e.head].get(z)
            if j is not None:
                P[j, i] = 1.0
        mats[e.id] = P
    weight = DiagonalWeight(
        {v: np.array([max(N[(v, z)], 1) for z in assoc[v]], dtype=float) for v in keep}
    )
    return h, TransmissionSystem(mats), weight


def association_phi(g: Graph, assoc) -> Cochain:
    """Kernel vector Phi(a)(v) = sqrt(N(a, v)) on the reduced graph."""
    assoc = _prepare(g, assoc)
    N = association_counts(g, assoc)
    return Cochain(
        {a: np.sqrt([N[(a, v)] for v in assoc[a]]) for a in g.vertex_ids if assoc[a]}
    )


def association_laplacian(g: Graph, assoc) -> tuple[Graph, np.ndarray]:
    h, ts, w = association_system(g, assoc)
    return h, laplacian(h, ts, w)


def cohesion_count(g: Graph, assoc, A: Iterable[str], B: Iterable[str]) -> int:
    """#{(a, b, v): a in A, b in B, a ~ b, v in A(a) & A(b)}."""
    assoc = _prepare(g, assoc)
    A, B = set(A), set(B)
    return sum(
        len(set(assoc[a]) & set(assoc[b]))
        for a in A
        for b in g.neighbors[a] - {a}
        if b in B
    )


def cohesion_estimate(
    g: Graph,
    assoc,
    A: Iterable[str],
    B: Iterable[str],
    tol: float = DEFAULT_TOL,
    eigenvalues: np.ndarray | None = None,
) -> BoundReport:
    """2 (1/R + 1/S) * cohesion count, against the second-smallest eigenvalue.

    ``eigenvalues`` may carry a precomputed ascending spectrum of the
    association Laplacian for sweeps over many pairs.
    """
    assoc = _prepare(g, assoc)
    A, B = set(A), set(B)
    if not A or not B or A & B:
        raise InputError("A and B must be nonempty and disjoint")
    N = association_counts(g, assoc)
    R = float(sum(N[(a, v)] for a in A for v in assoc[a]))
    S = float(sum(N[(b, v)] for b in B for v in assoc[b]))
    if R <= 0 or S <= 0:
        raise ZeroMass(f"Phi vanishes on one side (R={R}, S={S})")
    count = cohesion_count(g, assoc, A, B)
    if eigenvalues is None:
        h, L = association_laplacian(g, assoc)
        eigenvalues = spectrum(L, hermitian=True, vectors=False).values.real
    if len(eigenvalues) < 2:
        raise InputError("association space has dimension < 2")
    bound = 2 * (1 / R + 1 / S) * count
    return make_report("cohesion", bound, float(eigenvalues[1]), tol, R=R, S=S, count=count)
