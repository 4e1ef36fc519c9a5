"""Dense eigensolvers, ground states and the eigenvalue-range check."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DimensionTooLarge, NoConvergence, NotHermitian, ShapeError
from .graph import Graph
from .transmission import (
    DEFAULT_TOL,
    Cochain,
    DiagonalWeight,
    TransmissionSystem,
    classify,
    laplacian,
)

MAX_DIM = 2048


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray  # complex, sorted by (Re, Im)
    vectors: np.ndarray | None
    hermitian: bool

    @property
    def real(self) -> np.ndarray:
        return self.values.real

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RangeReport:
    max_center_dev: float
    max_imag: float
    K: float
    asym_half: float
    strictly_unitary: bool
    min_real: float
    max_real: float
    passed: bool


def _fix_phase(V: np.ndarray) -> np.ndarray:
    """Make the first non-negligible entry of each column real and >= 0."""
    V = V.copy()
    for j in range(V.shape[1]):
        col = V[:, j]
        big = np.abs(col) > 1e-12 * max(np.abs(col).max(), 1e-300)
        if big.any():
            z = col[np.argmax(big)]
            V[:, j] = col * (abs(z) / z)
    return V


def sort_order(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=complex)
    return np.lexsort((values.imag, values.real))


def spectrum(M: np.ndarray, hermitian: bool = False, vectors: bool = True) -> Spectrum:
    """Full eigendecomposition of a square matrix.

    The Hermitian path uses ``eigh`` and stores eigenvalues with zero imaginary
    part; the general path uses ``eig``.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"matrix of shape {M.shape} is not square")
    if M.shape[0] > MAX_DIM:
        raise DimensionTooLarge(f"dimension {M.shape[0]} exceeds the dense cap {MAX_DIM}")
    if M.shape[0] == 0:
        return Spectrum(np.zeros(0, complex), np.zeros((0, 0), complex) if vectors else None, hermitian)
    try:
        if hermitian:
            scale = 1.0 + np.linalg.norm(M, 2)
            if np.linalg.norm(M - M.conj().T, 2) > 1e-8 * scale:
                raise NotHermitian("matrix flagged Hermitian is not self-adjoint")
            H = 0.5 * (M + M.conj().T)
            if vectors:
                w, V = np.linalg.eigh(H)
            else:
                w, V = np.linalg.eigvalsh(H), None
            vals = w.astype(complex)
        else:
            if vectors:
                vals, V = np.linalg.eig(M)
            else:
                vals, V = np.linalg.eigvals(M), None
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    order = sort_order(vals)
    vals = vals[order]
    if V is not None:
        V = _fix_phase(V[:, order])
    return Spectrum(vals, V, hermitian)


def multiset_distance(a, b) -> float:
    """Max deviation between two eigenvalue multisets.

    Real inputs are compared after sorting. Complex inputs are paired by an
    optimal assignment, since lexicographic order is unstable for conjugate
    pairs whose real parts agree only to roundoff.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return float("inf")
    if a.size == 0:
        return 0.0
    if not (np.iscomplexobj(a) or np.iscomplexobj(b)) or (
        np.all(a.imag == 0) and np.all(b.imag == 0)
    ):
        return float(np.max(np.abs(np.sort(a.real) - np.sort(b.real))))
    cost = np.abs(a[:, None] - b[None, :])
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


def laplacian_spectrum(
    g: Graph,
    ts: TransmissionSystem,
    w: DiagonalWeight | None = None,
    hermitian: bool | None = None,
    vectors: bool = False,
) -> Spectrum:
    """Spectrum of the transmission Laplacian; solver path auto-detected when ``hermitian`` is None."""
    if hermitian is None:
        hermitian = classify(g, ts).hermitian_symmetric
    return spectrum(laplacian(g, ts, w), hermitian=hermitian, vectors=vectors)


def ground_state(
    g: Graph, ts: TransmissionSystem, w: DiagonalWeight | None = None
) -> tuple[float, Cochain]:
    """Lowest eigenvalue and a unit eigenvector, reshaped into vertex blocks."""
    if not classify(g, ts).hermitian_symmetric:
        raise NotHermitian("ground state needs a Hermitian symmetric system")
    sp = spectrum(laplacian(g, ts, w), hermitian=True)
    return float(sp.values[0].real), Cochain.from_vector(g, sp.vectors[:, 0])


def verify_range(g: Graph, ts: TransmissionSystem, tol: float = DEFAULT_TOL) -> RangeReport:
    """Check |lambda - 1| <= K and |Im lambda| <= asym/2 on the full spectrum.

    Strictly unitary systems must additionally have spectra in [0, 2].
    """
    c = classify(g, ts, tol)
    vals = spectrum(laplacian(g, ts), hermitian=False, vectors=False).values
    center = float(np.max(np.abs(vals - 1))) if vals.size else 0.0
    imag = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    lo = float(vals.real.min()) if vals.size else 0.0
    hi = float(vals.real.max()) if vals.size else 0.0
    ok = center <= c.K + tol and imag <= 0.5 * c.asym + tol
    if c.strictly_unitary:
        ok = ok and lo >= -tol and hi <= 2 + tol and imag <= tol
    return RangeReport(center, imag, c.K, 0.5 * c.asym, c.strictly_unitary, lo, hi, ok)
