"""Exact spectral decomposition of the mean-field (complete-graph) model.

The token graphs of K_n are Johnson graphs; their Laplacians decompose over
projectors built from Hahn polynomials and the distance matrices of the
Johnson scheme.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import GraphValidationError, check_size
from .graph import complete_graph
from .symprod import build_heisenberg_dense, complement_permutation, enumerate_ksets, kset_mask_array, laplacian_Lk


def multiplicity(n: int, j: int) -> int:
    """``m_j = C(n,j) - C(n,j-1)``."""
    if not 0 <= j <= n // 2:
        raise GraphValidationError(f"need 0 <= j <= n/2, got j={j}, n={n}")
    return comb(n, j) - (comb(n, j - 1) if j else 0)


def hahn(n: int, k: int, j: int, z: int) -> Fraction:
    """``h_{k,j}(z)`` in exact rational arithmetic."""
    if not (0 <= j <= k <= n // 2 and 0 <= z <= k):
        raise GraphValidationError(f"need 0 <= j <= k <= n/2 and 0 <= z <= k, got n={n} k={k} j={j} z={z}")
    total = Fraction(0)
    for a in range(j + 1):
        term = Fraction(comb(j, a) * comb(n + 1 - j, a), comb(k, a) * comb(n - k, a)) * comb(z, a)
        total += -term if a % 2 else term
    return multiplicity(n, j) * total


@dataclass(frozen=True)
class HahnTable:
    n: int
    k: int
    values: tuple[tuple[Fraction, ...], ...]  # values[j][z]


def hahn_table(n: int, k: int) -> HahnTable:
    return HahnTable(n, k, tuple(tuple(hahn(n, k, j, z) for z in range(k + 1)) for j in range(k + 1)))


def kset_distance_classes(n: int, k: int) -> np.ndarray:
    """``Z[X, Y] = |X △ Y| / 2`` over k-sets in colex order."""
    check_size(comb(n, k), f"J({n},{k})")
    masks = kset_mask_array(n, k)
    x = masks[:, None] ^ masks[None, :]
    counts = np.zeros(x.shape, dtype=np.int64)
    while x.any():
        counts += x & 1
        x = x >> 1
    return counts // 2


def generalized_adjacency(n: int, k: int, z: int) -> np.ndarray:
    """0/1 matrix relating k-sets with ``|X △ Y| = 2z``."""
    if not 0 <= z <= k:
        raise GraphValidationError(f"need 0 <= z <= k, got z={z}, k={k}")
    return (kset_distance_classes(n, k) == z).astype(float)


def projector(n: int, k: int, j: int) -> np.ndarray:
    """``P_{k,j} = C(n,k)^{-1} Σ_z h_{k,j}(z) A_{k,z}``."""
    Z = kset_distance_classes(n, k)
    coeffs = np.array([float(hahn(n, k, j, z) / comb(n, k)) for z in range(k + 1)])
    return coeffs[Z]


@dataclass(frozen=True)
class MeanFieldSpectrum:
    n: int
    pairs: tuple[tuple[int, int], ...]  # (eigenvalue, multiplicity), ascending

    def expanded(self) -> np.ndarray:
        return np.repeat([float(v) for v, _ in self.pairs], [m for _, m in self.pairs])


def meanfield_spectrum(n: int) -> MeanFieldSpectrum:
    """Eigenvalues ``j(n+1-j)`` with multiplicity ``(n+1-2j) m_j`` plus the
    ``(n+1)``-fold ground level."""
    if n < 1:
        raise GraphValidationError("need at least one spin")
    pairs = [(0, n + 1)]
    pairs += [(j * (n + 1 - j), (n + 1 - 2 * j) * multiplicity(n, j)) for j in range(1, n // 2 + 1)]
    return MeanFieldSpectrum(n, tuple(pairs))


@dataclass(frozen=True)
class ReconstructionReport:
    passed: bool
    error: float
    tol: float


def reconstruct_Lk(n: int, k: int, tol: float = 1e-9) -> ReconstructionReport:
    """Frobenius distance between ``L_k(K_n)`` and ``Σ_j j(n+1-j) P_{k,j}``."""
    if not 0 <= k <= n // 2:
        raise GraphValidationError(f"need 0 <= k <= n/2, got k={k}, n={n}")
    target = laplacian_Lk(complete_graph(n), k)
    built = sum((j * (n + 1 - j) * projector(n, k, j) for j in range(1, k + 1)), np.zeros_like(target))
    err = float(np.linalg.norm(target - built))
    return ReconstructionReport(err < tol, err, tol)


def _embed(H: np.ndarray, block: np.ndarray, rows: np.ndarray) -> None:
    H[np.ix_(rows, rows)] += block


def assemble_meanfield_hamiltonian(n: int) -> np.ndarray:
    """The complete-graph Hamiltonian rebuilt from projectors on the weight-k
    sectors (``k <= n/2``) and their complement images ``U_k P U_k^†``."""
    dim = 1 << n
    check_size(dim, "Hamiltonian")
    H = np.zeros((dim, dim))
    half = n // 2
    for j in range(1, half + 1):
        energy = j * (n + 1 - j)
        for k in range(j, half + 1):
            P = energy * projector(n, k, j)
            low = kset_mask_array(n, k)
            _embed(H, P, low)
            if 2 * k == n:
                # middle sector is its own complement
                continue
            high = kset_mask_array(n, n - k)
            perm = complement_permutation(n, k)
            # (U_k P U_k^†)[comp X, comp Y] = P[X, Y]
            image = np.zeros_like(P)
            image[np.ix_(perm, perm)] = P
            _embed(H, image, high)
    return H


def reconstruct_hamiltonian(n: int, tol: float = 1e-9) -> ReconstructionReport:
    """Compare the projector assembly with the swap-built Hamiltonian of K_n."""
    built = assemble_meanfield_hamiltonian(n)
    target = build_heisenberg_dense(complete_graph(n))
    err = float(np.linalg.norm(target - built))
    return ReconstructionReport(err < tol, err, tol)


def johnson_spectrum(n: int, k: int) -> np.ndarray:
    """Expected Laplacian spectrum of J(n, k), ascending."""
    kk = min(k, n - k)
    vals = [0.0] + [float(j * (n + 1 - j)) for j in range(1, kk + 1)]
    mult = [1] + [multiplicity(n, j) for j in range(1, kk + 1)]
    return np.repeat(vals, mult)


def enumerate_johnson_ksets(n: int, k: int):
    return enumerate_ksets(n, k)
