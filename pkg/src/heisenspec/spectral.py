"""Dense Laplacian assembly and a Jacobi eigensolver used as ground truth."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, GraphValidationError, check_size
from .graph import Graph

#: Dense matrices are plain float64 ndarrays, assembled exactly symmetric.
SymmetricMatrix = np.ndarray

MAX_SWEEPS = 60


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    tolerance: float
    sweeps: int = 0

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __getitem__(self, j):
        return self.eigenvalues[j]

    def tolist(self) -> list[float]:
        return [float(x) for x in self.eigenvalues]


def laplacian_matrix(G: Graph) -> SymmetricMatrix:
    check_size(G.n, "Laplacian")
    L = np.zeros((G.n, G.n))
    for u, v in G.edges:
        L[u, v] = L[v, u] = -1.0
    L[np.diag_indices(G.n)] = G.degrees
    return L


def normalized_laplacian(G: Graph) -> SymmetricMatrix:
    """``D^{-1/2} L D^{-1/2}``; every vertex needs positive degree."""
    for v, d in enumerate(G.degrees):
        if d == 0:
            raise GraphValidationError(f"vertex {v} is isolated; the degree matrix is singular")
    scale = 1.0 / np.sqrt(np.asarray(G.degrees, dtype=float))
    return laplacian_matrix(G) * np.outer(scale, scale)


def _round_robin(m: int) -> list[np.ndarray]:
    """Round layouts for ``0..m-1`` (m even): position ``i`` pairs with
    ``i + m/2``; over m-1 rounds every pair meets once."""
    players = list(range(m))
    half = m // 2
    layouts = []
    for _ in range(m - 1):
        layouts.append(np.array(players[:half] + players[::-1][:half]))
        players = [players[0], players[-1]] + players[1:-1]
    return layouts


def off_diagonal_norm(A: np.ndarray) -> float:
    off = A.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def eigenvalues(M: SymmetricMatrix, tol: float = 1e-10) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits every index pair once, grouped into rounds of disjoint
    pairs so a whole round is applied as one vectorized update.  Iterates
    until the off-diagonal Frobenius norm drops below ``tol``.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        if not np.allclose(A, A.T, rtol=0.0, atol=1e-12):
            raise ValueError("matrix is not symmetric")
        A = (A + A.T) / 2
    if tol <= 0:
        raise ValueError("tol must be positive")
    N = A.shape[0]
    check_size(N, "eigensolve")
    if N <= 1:
        return Spectrum(np.sort(np.diag(A)), tol, 0)

    m = N + (N % 2)
    if m != N:
        # decoupled padding index; its rotations are all identities
        pad = np.zeros((m, m))
        pad[:N, :N] = A
        A = pad
    layouts = _round_robin(m)
    h = m // 2
    diag = np.arange(h)

    # the matrix is kept permuted into the current round's layout so each
    # round of disjoint rotations is two block updates on contiguous halves
    order = np.arange(m)
    off = off_diagonal_norm(A)
    sweeps = 0
    while off >= tol:
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps", off)
        for layout in layouts:
            where = np.empty(m, dtype=np.intp)
            where[order] = np.arange(m)
            rel = where[layout]
            A = A[rel][:, rel]
            order = layout
            apq = A[diag, diag + h]
            if not apq.any():
                continue
            app = A[diag, diag]
            aqq = A[diag + h, diag + h]
            nz = apq != 0.0
            safe = np.where(nz, apq, 1.0)
            with np.errstate(over="ignore", divide="ignore"):
                tau = (aqq - app) / (2.0 * safe)
                # huge |tau| means a negligible rotation; t -> 1/(2 tau)
                t = np.where(np.abs(tau) > 1e150, 0.5 / tau,
                             np.sign(tau + (tau == 0)) / (np.abs(tau) + np.sqrt(1.0 + tau * tau)))
            t = np.where(nz, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            top = A[:h].copy()
            bot = A[h:].copy()
            A[:h] = c[:, None] * top - s[:, None] * bot
            A[h:] = s[:, None] * top + c[:, None] * bot
            left = A[:, :h].copy()
            right = A[:, h:].copy()
            A[:, :h] = left * c - right * s
            A[:, h:] = left * s + right * c
            A[diag, diag + h] = 0.0
            A[diag + h, diag] = 0.0
        A = (A + A.T) / 2
        sweeps += 1
        off = off_diagonal_norm(A)

    vals = np.diag(A)[order < N]
    return Spectrum(np.sort(vals), tol, sweeps)


def laplacian_spectrum(G: Graph, tol: float = 1e-10) -> Spectrum:
    return eigenvalues(laplacian_matrix(G), tol)
