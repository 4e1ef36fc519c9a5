"""Quantum scattering systems built from indefinite-unitary transfer data.

Each undirected edge carries M in U(n+1, n+1), attached to the orientation
from the lower-indexed endpoint to the higher one. With ``I = diag(Id, -Id)``
and ``Perm`` swapping the two halves,

    F(P -> Q) = Perm M,   F(Q -> P) = M^{-1} Perm,   G(e) = i I F(e).

F is invertible and G is Hermitian symmetric because I and Perm anticommute.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
from scipy.linalg import expm

from ..errors import BadParam, NotInUpq, RankMismatch, ShapeError
from ..graph import Graph, undirected_edges
from ..transmission import DEFAULT_TOL, TransmissionSystem


def indefinite_form(p: int, q: int | None = None) -> np.ndarray:
    q = p if q is None else q
    return np.diag(np.concatenate([np.ones(p), -np.ones(q)])).astype(complex)


def swap_halves(m: int) -> np.ndarray:
    Z, E = np.zeros((m, m)), np.eye(m)
    return np.block([[Z, E], [E, Z]]).astype(complex)


def upq_defect(M: np.ndarray, p: int, q: int) -> float:
    """||M^* I M - I||, zero exactly on U(p, q)."""
    I = indefinite_form(p, q)
    return float(np.linalg.norm(M.conj().T @ I @ M - I, 2))


@dataclass(frozen=True, eq=False)
class ScatteringDatum:
    M: np.ndarray
    spin_n: int

    def __post_init__(self):
        M = np.atleast_2d(np.asarray(self.M, dtype=complex))
        m = self.spin_n + 1
        if self.spin_n < 0:
            raise BadParam(f"spin must be >= 0, got {self.spin_n}")
        if M.shape != (2 * m, 2 * m):
            raise ShapeError(f"M has shape {M.shape}, expected {(2 * m, 2 * m)}")
        object.__setattr__(self, "M", M)

    @classmethod
    def of(cls, M) -> "ScatteringDatum":
        """Infer the spin from the size of M."""
        M = np.atleast_2d(np.asarray(M, dtype=complex))
        if M.shape[0] != M.shape[1] or M.shape[0] % 2:
            raise ShapeError(f"M must be square of even size, got {M.shape}")
        return cls(M, M.shape[0] // 2 - 1)

    def check(self, tol: float = DEFAULT_TOL) -> None:
        m = self.spin_n + 1
        defect = upq_defect(self.M, m, m)
        if defect > tol:
            raise NotInUpq(f"||M^* I M - I|| = {defect:.3g} exceeds {tol:g}")


def random_upq(p: int, q: int, seed=None, scale: float = 0.5) -> np.ndarray:
    """exp([[A, B], [B^*, D]]) with A, D anti-Hermitian and B Gaussian."""
    if p < 1 or q < 1:
        raise BadParam(f"need p, q >= 1, got {p}, {q}")
    rng = np.random.default_rng(seed)

    def gauss(r, c):
        return (rng.standard_normal((r, c)) + 1j * rng.standard_normal((r, c))) / np.sqrt(2)

    A, D, B = gauss(p, p), gauss(q, q), gauss(p, q)
    A, D = 0.5 * (A - A.conj().T), 0.5 * (D - D.conj().T)
    X = scale * np.block([[A, B], [B.conj().T, D]])
    return expm(X)


def quantum_system(
    g: Graph,
    data: Mapping[int, ScatteringDatum | np.ndarray],
    tol: float = DEFAULT_TOL,
) -> tuple[TransmissionSystem, TransmissionSystem]:
    """(F, G) systems; ``data`` is keyed by the smaller directed-edge id of each pair."""
    F, G = {}, {}
    spins = set()
    for lo, hi in undirected_edges(g):
        if lo not in data:
            raise BadParam(f"no scattering datum for edge {lo}")
        d = data[lo]
        d = d if isinstance(d, ScatteringDatum) else ScatteringDatum.of(d)
        d.check(tol)
        spins.add(d.spin_n)
        m = d.spin_n + 1
        e = g.edge[lo]
        for v in (e.tail, e.head):
            if g.rank[v] != 2 * m:
                raise RankMismatch(f"vertex {v!r} has rank {g.rank[v]}, expected {2 * m}")
        fwd, bwd = (lo, hi) if g.index[e.tail] <= g.index[e.head] else (hi, lo)
        Perm, I = swap_halves(m), indefinite_form(m)
        F[fwd] = Perm @ d.M
        F[bwd] = np.linalg.solve(d.M, Perm)
        G[fwd] = 1j * I @ F[fwd]
        G[bwd] = 1j * I @ F[bwd]
    if len(spins) > 1:
        raise RankMismatch(f"mixed spins {sorted(spins)}")
    return TransmissionSystem(F), TransmissionSystem(G)
