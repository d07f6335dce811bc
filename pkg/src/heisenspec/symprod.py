"""Token graphs G^{k}, their Laplacians L_k and the swap-built Hamiltonian.

k-sets are sorted tuples of vertex labels.  They are indexed in colex order
through the combinatorial number system, so ``rank`` and ``unrank`` are O(k)
and every module agrees on row order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .errors import GraphValidationError, SizeCapError, check_size
from .graph import Graph, boundary_size_mask, mask_of
from .spectral import SymmetricMatrix, eigenvalues

KSet = tuple[int, ...]

MAX_SPINS = 12


def rank(X: Sequence[int]) -> int:
    """Colex index of a sorted k-set."""
    return sum(comb(x, i + 1) for i, x in enumerate(X))


def unrank(r: int, k: int) -> KSet:
    out = []
    for i in range(k, 0, -1):
        x = i - 1
        while comb(x + 1, i) <= r:
            x += 1
        out.append(x)
        r -= comb(x, i)
    return tuple(reversed(out))


def enumerate_ksets(n: int, k: int) -> list[KSet]:
    """All k-subsets of ``0..n-1`` in colex order."""
    if not 0 <= k <= n:
        raise GraphValidationError(f"need 0 <= k <= n, got k={k}, n={n}")
    out: list[KSet] = []

    def build(prefix_top: int, size: int, suffix: tuple[int, ...]) -> None:
        # colex: the largest element varies slowest
        if size == 0:
            out.append(suffix)
            return
        for top in range(size - 1, prefix_top):
            build(top, size - 1, (top,) + suffix)

    build(n, k, ())
    return out


def kset_mask_array(n: int, k: int) -> np.ndarray:
    return np.array([mask_of(X) for X in enumerate_ksets(n, k)], dtype=np.int64)


@dataclass(frozen=True)
class SymProduct:
    base: Graph
    k: int
    ksets: tuple[KSet, ...] = field(repr=False)
    graph: Graph = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.ksets)

    def index(self, X: Sequence[int]) -> int:
        return rank(tuple(sorted(X)))


def _token_edges(G: Graph, ksets: Sequence[KSet]) -> list[tuple[int, int]]:
    edges = []
    for i, X in enumerate(ksets):
        inside = set(X)
        for x in X:
            rest = [y for y in X if y != x]
            for y in G.adjacency[x]:
                if y in inside:
                    continue
                j = rank(tuple(sorted(rest + [y])))
                if i < j:
                    edges.append((i, j))
    return edges


def build_symmetric_product(G: Graph, k: int) -> SymProduct:
    """G^{k}: k-sets adjacent when their symmetric difference is an edge."""
    if not 0 <= k <= G.n:
        raise GraphValidationError(f"need 0 <= k <= n, got k={k}, n={G.n}")
    check_size(comb(G.n, k), f"G^{{{k}}}")
    ksets = tuple(enumerate_ksets(G.n, k))
    H = Graph.from_edges(len(ksets), _token_edges(G, ksets))
    return SymProduct(G, k, ksets, H)


def token_edge_count(G: Graph, k: int) -> int:
    """Edges of G^{k} without building it: each base edge pairs with every
    (k-1)-set avoiding both endpoints."""
    if k < 1:
        return 0
    return G.m * comb(G.n - 2, k - 1) if G.n >= 2 else 0


def laplacian_Lk(G: Graph, k: int) -> SymmetricMatrix:
    """L_k assembled from the definition: diagonal ``|∂X|``, ``-1`` where
    ``X △ Y`` is an edge of ``G``."""
    if not 0 <= k <= G.n:
        raise GraphValidationError(f"need 0 <= k <= n, got k={k}, n={G.n}")
    N = comb(G.n, k)
    check_size(N, f"L_{k}")
    ksets = enumerate_ksets(G.n, k)
    L = np.zeros((N, N))
    for i, X in enumerate(ksets):
        L[i, i] = boundary_size_mask(G, mask_of(X))
    for i, j in _token_edges(G, ksets):
        L[i, j] = L[j, i] = -1.0
    return L


def complement_permutation(n: int, k: int) -> np.ndarray:
    """``perm[i]`` is the index in the (n-k)-set order of the complement of
    the i-th k-set; this is the matrix U_k."""
    full = set(range(n))
    return np.array([rank(tuple(sorted(full - set(X)))) for X in enumerate_ksets(n, k)], dtype=np.intp)


@dataclass(frozen=True)
class ComplementCheck:
    passed: bool
    max_deviation: float


def complement_check(G: Graph, k: int) -> ComplementCheck:
    """Check ``L_{n-k} = U_k L_k U_k^†`` entrywise."""
    if not 0 <= k <= G.n:
        raise GraphValidationError(f"need 0 <= k <= n, got k={k}, n={G.n}")
    Lk = laplacian_Lk(G, k)
    Lc = laplacian_Lk(G, G.n - k)
    perm = complement_permutation(G.n, k)
    conj = np.zeros_like(Lc)
    conj[np.ix_(perm, perm)] = Lk
    dev = float(np.max(np.abs(conj - Lc))) if Lc.size else 0.0
    return ComplementCheck(dev == 0.0, dev)


def build_heisenberg_dense(G: Graph) -> SymmetricMatrix:
    """The normalized ferromagnetic Hamiltonian as ``Σ_{ij∈E} (1 - swap_ij)``.

    Basis state ``|X>`` has index ``mask(X)`` (spins in ``X`` up).  Built from
    the action ``H|X> = |∂X||X> - Σ_{ij∈∂X} |X △ {i,j}>``.
    """
    if G.n > MAX_SPINS:
        raise SizeCapError(f"n={G.n} spins exceeds the dense limit of {MAX_SPINS}")
    dim = 1 << G.n
    check_size(dim, "Hamiltonian")
    H = np.zeros((dim, dim))
    for X in range(dim):
        for u, v in G.edges:
            if ((X >> u) ^ (X >> v)) & 1:
                H[X, X] += 1.0
                H[X ^ (1 << u) ^ (1 << v), X] -= 1.0
    return H


@dataclass
class DecompositionReport:
    passed: bool
    max_deviation: float
    off_sector_max: float
    hamiltonian_spectrum: np.ndarray = field(repr=False)
    block_spectrum: np.ndarray = field(repr=False)
    detail: str = ""


def verify_decomposition(G: Graph, tol: float = 1e-8, hamiltonian: SymmetricMatrix | None = None) -> DecompositionReport:
    """Compare the spectrum of the full 2^n Hamiltonian with the union of the
    spectra of L_0..L_n, and check it never couples different weights."""
    H = build_heisenberg_dense(G) if hamiltonian is None else hamiltonian
    dim = 1 << G.n
    weights = np.array([bin(x).count("1") for x in range(dim)])
    cross = weights[:, None] != weights[None, :]
    off_sector = float(np.max(np.abs(H[cross]))) if cross.any() else 0.0

    full = eigenvalues(H).eigenvalues
    blocks = np.sort(np.concatenate([eigenvalues(laplacian_Lk(G, k)).eigenvalues for k in range(G.n + 1)]))
    dev = float(np.max(np.abs(full - blocks)))
    passed = dev <= tol and off_sector == 0.0
    detail = ""
    if not passed:
        bad = np.flatnonzero(np.abs(full - blocks) > tol)
        pairs = ", ".join(f"#{i}: H={full[i]:.10g} blocks={blocks[i]:.10g}" for i in bad[:10])
        detail = f"off-sector max {off_sector:g}; mismatches {pairs}"
    return DecompositionReport(passed, dev, off_sector, full, blocks, detail)


def sector_laplacian(G: Graph, k: int) -> SymmetricMatrix:
    """The weight-k block of the dense Hamiltonian, reindexed in colex order."""
    H = build_heisenberg_dense(G)
    masks = kset_mask_array(G.n, k)
    return H[np.ix_(masks, masks)]

