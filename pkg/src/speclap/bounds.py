"""Isoperimetric and diameter bounds on lambda_2 - lambda_1.

Every bound is returned as a :class:`BoundReport`. Degenerate inputs that
make a bound meaningless (zero volume, undefined ratio M) produce an
unavailable report with ``bound = inf`` so subset sweeps never abort.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .errors import (
    BadParam,
    DiameterTooSmall,
    Disconnected,
    NotHermitian,
    NotRegular,
    TooLarge,
    UnknownVertex,
    ZeroDenominator,
)
from .graph import Graph, DirectedEdge, adjacency_matrix, boundary, degree_profile, diameter
from .spectra import spectrum
from .transmission import DEFAULT_TOL, Cochain, TransmissionSystem, classify, laplacian

MAX_CAPACITY_VERTICES = 20


@dataclass
class BoundReport:
    name: str
    bound: float
    target: float
    margin: float
    passed: bool
    context: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "bound": self.bound,
            "target": self.target,
            "margin": self.margin,
            "pass": self.passed,
            "context": self.context,
        }


def make_report(name: str, bound: float, target: float, tol: float, **context) -> BoundReport:
    margin = bound - target
    return BoundReport(name, bound, target, margin, bool(margin >= -tol), context)


@dataclass(frozen=True, eq=False)
class GroundData:
    """Spectral data shared by all bounds for one (graph, system) pair."""

    eigenvalues: np.ndarray  # real, ascending
    f1: Cochain
    K: float

    @property
    def gap(self) -> float:
        return float(self.eigenvalues[1] - self.eigenvalues[0])


def ground_data(g: Graph, ts: TransmissionSystem, tol: float = DEFAULT_TOL) -> GroundData:
    c = classify(g, ts, tol)
    if not c.hermitian_symmetric:
        raise NotHermitian(f"bounds need a Hermitian symmetric system (asym={c.asym:.3g})")
    if g.dim < 2:
        raise BadParam("need at least two eigenvalues")
    sp = spectrum(laplacian(g, ts), hermitian=True)
    return GroundData(sp.values.real.copy(), Cochain.from_vector(g, sp.vectors[:, 0]), c.K)


def _subset(g: Graph, A: Iterable[str]) -> tuple[frozenset, frozenset]:
    A = frozenset(A)
    for v in A:
        if v not in g.index:
            raise UnknownVertex(f"unknown vertex {v!r}")
    return A, frozenset(g.vertex_ids) - A


def _scaled_norms(g: Graph, f1: Cochain) -> dict[str, float]:
    """||f1(v)|| / sqrt(d_v)."""
    return {v: float(np.linalg.norm(f1[v])) / math.sqrt(g.degree[v]) for v in g.vertex_ids}


def vol_p(f1: Cochain, A: Iterable[str]) -> float:
    return float(sum(np.vdot(f1[v], f1[v]).real for v in A))


def boundary_measure_p(g: Graph, f1: Cochain, A: Iterable[str]) -> float:
    x = _scaled_norms(g, f1)
    return float(sum(x[e.tail] * x[e.head] for e in boundary(g, A)))


def _check_proper(g: Graph, A: frozenset, B: frozenset) -> None:
    if not A or not B:
        raise BadParam("subset must be nonempty and proper")


def cheeger_upper(
    g: Graph,
    ts: TransmissionSystem,
    A: Iterable[str],
    data: GroundData | None = None,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """K |dA|_P (1/vol_P(A) + 1/vol_P(B)) against lambda_2 - lambda_1."""
    A, B = _subset(g, A)
    _check_proper(g, A, B)
    data = data or ground_data(g, ts, tol)
    R, S = vol_p(data.f1, A), vol_p(data.f1, B)
    dA = boundary_measure_p(g, data.f1, A)
    ctx = {"R": R, "S": S, "K": data.K, "|dA|_P": dA}
    if R <= 0 or S <= 0:
        return make_report("cheeger_upper", math.inf, data.gap, tol, unavailable="zero volume", **ctx)
    return make_report("cheeger_upper", data.K * dA * (1 / R + 1 / S), data.gap, tol, **ctx)


def cheeger_weak(
    g: Graph,
    ts: TransmissionSystem,
    A: Iterable[str],
    data: GroundData | None = None,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """|dA| (1/vol(A) + 1/vol(B)) K L with classical volume and boundary count."""
    A, B = _subset(g, A)
    _check_proper(g, A, B)
    data = data or ground_data(g, ts, tol)
    x = _scaled_norms(g, data.f1)
    top = max(x.values())
    nonzero = [t for t in x.values() if t > 1e-12 * top]
    if not nonzero:
        raise BadParam("ground state vanishes identically")
    L = (top / min(nonzero)) ** 2
    volA = sum(g.degree[v] for v in A)
    volB = sum(g.degree[v] for v in B)
    dA = len(boundary(g, A))
    ctx = {"K": data.K, "L": L, "vol(A)": volA, "vol(B)": volB, "|dA|": dA}
    if volA == 0 or volB == 0:
        return make_report("cheeger_weak", math.inf, data.gap, tol, unavailable="zero volume", **ctx)
    return make_report("cheeger_weak", dA * (1 / volA + 1 / volB) * data.K * L, data.gap, tol, **ctx)


def cheeger_sharp(
    g: Graph,
    ts: TransmissionSystem,
    A: Iterable[str],
    data: GroundData | None = None,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """(1/R + 1/S) * sum over crossing edges b->a of |<f1(a), P(e) f1(b)>| / sqrt(d_a d_b)."""
    A, B = _subset(g, A)
    _check_proper(g, A, B)
    data = data or ground_data(g, ts, tol)
    f1 = data.f1
    R, S = vol_p(f1, A), vol_p(f1, B)
    total = 0.0
    for e in g.dedges:
        if e.tail in B and e.head in A:
            z = np.vdot(f1[e.head], ts[e.id] @ f1[e.tail])
            total += abs(z) / math.sqrt(g.degree[e.head] * g.degree[e.tail])
    ctx = {"R": R, "S": S, "crossing_sum": total}
    if R <= 0 or S <= 0:
        return make_report("cheeger_sharp", math.inf, data.gap, tol, unavailable="zero volume", **ctx)
    return make_report("cheeger_sharp", total * (1 / R + 1 / S), data.gap, tol, **ctx)


def nonempty_proper_subsets(g: Graph) -> Iterator[frozenset[str]]:
    vs = g.vertex_ids
    for k in range(1, len(vs)):
        for combo in combinations(vs, k):
            yield frozenset(combo)


# -- capacities --------------------------------------------------------------

EdgeCapacity = Mapping[int, float] | Callable[[DirectedEdge], float]
PairWeight = Mapping[tuple[str, str], float] | Callable[[str, str], float]


def _edge_cap(C: EdgeCapacity) -> Callable[[DirectedEdge], float]:
    if callable(C):
        return C
    return lambda e: float(C.get(e.id, 0.0))


def _pair_weight(D: PairWeight) -> Callable[[str, str], float]:
    if callable(D):
        return D
    return lambda u, v: float(D.get((u, v), 0.0))


def capacity_ratio(g: Graph, C: EdgeCapacity, D: PairWeight, A: Iterable[str]) -> float:
    """Capacity of crossing directed edges over the weight of separated ordered pairs."""
    A, _ = _subset(g, A)
    cap, wt = _edge_cap(C), _pair_weight(D)
    num = sum(cap(e) for e in g.dedges if (e.tail in A) != (e.head in A))
    den = sum(
        wt(u, v) for u in g.vertex_ids for v in g.vertex_ids if (u in A) != (v in A)
    )
    if den <= 0:
        raise ZeroDenominator("no weight separates the subset from its complement")
    return num / den


def capacity_min(g: Graph, C: EdgeCapacity, D: PairWeight) -> tuple[frozenset[str], float]:
    """Exhaustive minimum of :func:`capacity_ratio`; ties go to the
    lexicographically smallest subset (as sorted vertex-index tuples)."""
    if len(g) > MAX_CAPACITY_VERTICES:
        raise TooLarge(f"{len(g)} vertices exceeds the enumeration cap {MAX_CAPACITY_VERTICES}")
    best, best_key, best_val = None, None, math.inf
    for A in nonempty_proper_subsets(g):
        try:
            val = capacity_ratio(g, C, D, A)
        except ZeroDenominator:
            continue
        key = tuple(sorted(g.index[v] for v in A))
        if val < best_val - 1e-12 or (abs(val - best_val) <= 1e-12 and key < best_key):
            best, best_key, best_val = A, key, val
    if best is None:
        raise ZeroDenominator("every subset has zero denominator")
    return best, best_val


# -- diameters ---------------------------------------------------------------

def nilli_classical(k: int, b: int) -> float:
    """Upper bound on lambda_2 of a k-regular graph of diameter >= 2b + 2."""
    if k < 2 or b < 1:
        raise BadParam(f"need k >= 2 and b >= 1, got k={k}, b={b}")
    s = 2 * math.sqrt(k - 1)
    return 1 - (s - (s - 1) / b) / k


def diameter_bound(
    g: Graph,
    ts: TransmissionSystem,
    data: GroundData | None = None,
    tol: float = DEFAULT_TOL,
) -> BoundReport:
    """Diameter bound on lambda_2 - lambda_1 for Hermitian systems.

    k is the largest number of distinct non-self neighbours and b the largest
    integer with 2b + 2 <= diameter.
    """
    diam = diameter(g)
    if math.isinf(diam):
        raise Disconnected("diameter bound needs a connected graph")
    if diam < 4:
        raise DiameterTooSmall(f"diameter {diam} < 4")
    data = data or ground_data(g, ts, tol)
    k = max(dh for _, dh in degree_profile(g).values())
    q = k - 1
    b = (diam - 2) // 2
    norms = data.f1.norms()
    x = _scaled_norms(g, data.f1)
    eps = 1e-12 * max(x.values())
    ctx = {"k": k, "q": q, "b": b, "K": data.K, "diameter": diam}
    M = 0.0
    for e in g.dedges:
        if x[e.tail] > eps:
            M = max(M, x[e.head] / x[e.tail])
        elif x[e.head] > eps:
            return make_report("diameter_bound", math.inf, data.gap, tol, unavailable="M undefined", **ctx)
    den = sum(norms[v] ** 2 / g.degree[v] for v in g.vertex_ids)
    ave = sum(norms[v] ** 2 for v in g.vertex_ids) / den
    r = math.sqrt(q) * M
    bound = (1 / ave) * (data.K / M) * (1 + q * M * M - 2 * r + (2 * r - 1) / b)
    return make_report("diameter_bound", bound, data.gap, tol, M=M, ave_d=ave, **ctx)


def is_ramanujan(g: Graph) -> bool:
    """Second largest adjacency eigenvalue of a k-regular graph is <= 2 sqrt(k-1)."""
    degs = set(g.degree.values())
    if len(degs) != 1:
        raise NotRegular(f"degrees {sorted(degs)} are not constant")
    (k,) = degs
    if len(g) < 2:
        raise BadParam("need at least two vertices")
    eig = np.sort(np.linalg.eigvalsh(adjacency_matrix(g).astype(float)))[::-1]
    return bool(eig[1] <= 2 * math.sqrt(max(k - 1, 0)) + 1e-9)
