"""Random-walk transmission systems.

For a column-stochastic Gamma with ``Gamma[j, i] = Prob(v_i, v_j)`` the
system Q(v_i -> v_j) = d_j Prob(v_i, v_j) satisfies N(A)^Q = T^{1/2} Gamma T^{-1/2},
so the Laplacian spectrum is {1 - mu : mu in spec(Gamma)}.
"""
from __future__ import annotations

import numpy as np

from ..errors import NotStochastic
from ..graph import Graph, from_pairs
from ..transmission import DiagonalWeight, TransmissionSystem, default_weight

STOCHASTIC_TOL = 1e-9


def _check(probs) -> np.ndarray:
    P = np.asarray(probs, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1] or P.shape[0] == 0:
        raise NotStochastic(f"transition matrix must be square and nonempty, got shape {P.shape}")
    if not np.all(np.isfinite(P)) or P.min() < 0:
        raise NotStochastic("transition probabilities must be finite and nonnegative")
    cols = P.sum(axis=0)
    bad = np.flatnonzero(np.abs(cols - 1) > STOCHASTIC_TOL)
    if bad.size:
        raise NotStochastic(f"columns {bad.tolist()} do not sum to 1")
    return P


def walk_system(
    probs, tol: float = 1e-12
) -> tuple[Graph, TransmissionSystem, DiagonalWeight, bool]:
    """Graph, Q system, degree weights and the reflexive flag.

    Vertices are ``v0 .. v{n-1}``. Pairs are listed as (i, j) with i <= j
    in row-major order; the forward direction is v_i -> v_j.
    """
    P = _check(probs)
    n = P.shape[0]
    names = [f"v{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i, n) if P[j, i] != 0 or P[i, j] != 0]
    g = from_pairs(names, [(names[i], names[j]) for i, j in pairs])
    d = np.array([g.degree[v] for v in names], dtype=float)
    Q = {}
    for k, (i, j) in enumerate(pairs):
        if i == j:
            Q[2 * k] = Q[2 * k + 1] = 0.5 * d[i] * P[i, i]
        else:
            Q[2 * k] = d[j] * P[j, i]
            Q[2 * k + 1] = d[i] * P[i, j]
    reflexive = all(abs(Q[2 * k] - Q[2 * k + 1]) <= tol for k in range(len(pairs)))
    return g, TransmissionSystem(Q), default_weight(g), reflexive
