"""Generalized diameters of token graphs and the diameter-based upper bounds
on eigenvalues of L_k, plus the elementary bounds on the largest eigenvalue.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

import numpy as np

from .assignment import kset_distance
from .errors import GraphValidationError, SizeCapError, check_size
from .graph import INF, DistanceMatrix, Extended, Graph, all_pairs_distances, bfs_distances
from .symprod import KSet, build_symmetric_product, enumerate_ksets, rank

DEFAULT_TRIALS = 16
ENUMERATION_CAP = 5_000_000


def trial_generators(seed: int, trials: int) -> list[np.random.Generator]:
    """Independent per-trial streams split deterministically from one seed."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(trials)]


def select_ksets(j: int, n: int, k: int, seed: int | np.random.Generator) -> list[KSet]:
    """Draw ``j + 1`` distinct uniformly random k-subsets of ``0..n-1``,
    rejecting repeats."""
    if j + 1 > comb(n, k):
        raise GraphValidationError(f"cannot pick {j + 1} distinct {k}-sets from {n} vertices")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    chosen: list[KSet] = []
    seen = set()
    while len(chosen) < j + 1:
        Y = tuple(sorted(int(x) for x in rng.choice(n, size=k, replace=False)))
        if Y not in seen:
            seen.add(Y)
            chosen.append(Y)
    return chosen


def kset_distance_table(G: Graph, k: int, D: DistanceMatrix | None = None) -> np.ndarray:
    """Token-graph distances between all k-sets (colex order); unreachable
    pairs hold -1."""
    P_ksets = enumerate_ksets(G.n, k)
    check_size(len(P_ksets), f"{k}-set distance table")
    if D is None:
        D = all_pairs_distances(G)
    N = len(P_ksets)
    table = np.zeros((N, N), dtype=np.int64)
    for a in range(N):
        for b in range(a + 1, N):
            d = kset_distance(P_ksets[a], P_ksets[b], D)
            table[a, b] = table[b, a] = -1 if d is INF else d
    return table


def _table_set_distance(ksets: Sequence[KSet], table: np.ndarray) -> Extended:
    idx = np.array([rank(X) for X in ksets])
    sub = table[np.ix_(idx, idx)]
    iu = np.triu_indices(len(idx), 1)
    vals = sub[iu]
    finite = vals[vals >= 0]
    return int(finite.min()) if finite.size else INF


def set_distance(ksets: Sequence[KSet], D: DistanceMatrix) -> Extended:
    """Minimum pairwise token-graph distance among the given k-sets."""
    best: Extended = INF
    for a in range(len(ksets)):
        for b in range(a + 1, len(ksets)):
            d = kset_distance(ksets[a], ksets[b], D)
            if d < best:
                best = d
    return best


@dataclass(frozen=True)
class DiameterEstimate:
    j: int
    k: int
    d: Extended
    trials: int
    seed: int
    witness: tuple[KSet, ...] = field(default=())


def estimate_generalized_diameter(
    G: Graph,
    k: int,
    j: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    D: DistanceMatrix | None = None,
    table: np.ndarray | None = None,
) -> DiameterEstimate:
    """Lower bound on the j-diameter of G^{k}: the best, over random draws of
    ``j + 1`` k-sets, of their minimum pairwise distance.

    ``table`` (from :func:`kset_distance_table`) replaces the per-pair
    assignments with lookups; the draws and the result are unchanged.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if j < 1:
        raise GraphValidationError("j must be at least 1")
    if D is None and table is None:
        D = all_pairs_distances(G)
    best: Extended | None = None
    witness: tuple[KSet, ...] = ()
    for rng in trial_generators(seed, trials):
        ksets = select_ksets(j, G.n, k, rng)
        d = set_distance(ksets, D) if table is None else _table_set_distance(ksets, table)
        if best is None or d > best:
            best, witness = d, tuple(ksets)
    return DiameterEstimate(j, k, best, trials, seed, witness)


def _hop_matrix(H: Graph) -> np.ndarray:
    """BFS hops with unreachable pairs set one past any finite distance."""
    hops = np.array([bfs_distances(H, s) for s in range(H.n)], dtype=np.int64).reshape(H.n, H.n)
    hops[hops < 0] = H.n
    return hops


def exact_generalized_diameter(G: Graph, k: int, j: int, cap: int = ENUMERATION_CAP) -> Extended:
    """The j-diameter of G^{k} by exhaustive search over ``(j+1)``-subsets of
    its vertices, with distances from BFS on the explicit token graph."""
    if j < 1:
        raise GraphValidationError("j must be at least 1")
    P = build_symmetric_product(G, k)
    N = P.size
    if j + 1 > N:
        raise GraphValidationError(f"G^{{{k}}} has only {N} vertices")
    count = comb(N, j + 1)
    if count > cap:
        raise SizeCapError(f"{count} candidate sets exceed the enumeration cap {cap}; use the estimator")
    hops = _hop_matrix(P.graph)
    pairs = list(itertools.combinations(range(j + 1), 2))
    best = -1
    combos = itertools.combinations(range(N), j + 1)
    while True:
        chunk = np.array(list(itertools.islice(combos, 200_000)), dtype=np.intp)
        if chunk.size == 0:
            break
        mins = np.full(len(chunk), np.iinfo(np.int64).max)
        for a, b in pairs:
            np.minimum(mins, hops[chunk[:, a], chunk[:, b]], out=mins)
        best = max(best, int(mins.max()))
    return INF if best >= N else best


@dataclass(frozen=True)
class ReductionCheck:
    """Comparison of assignment distances with BFS distances in G^{k}."""

    pairs: int
    equal: int
    max_gap: int
    example: tuple[KSet, KSet] | None


def check_assignment_reduction(G: Graph, k: int) -> ReductionCheck:
    """For every pair of k-sets compare the assignment value with the true
    BFS distance in the explicit G^{k}."""
    P = build_symmetric_product(G, k)
    D = all_pairs_distances(G)
    hops = _hop_matrix(P.graph)
    equal = 0
    pairs = 0
    max_gap = 0
    example = None
    for a in range(P.size):
        for b in range(a + 1, P.size):
            pairs += 1
            est = kset_distance(P.ksets[a], P.ksets[b], D)
            true = INF if hops[a, b] >= P.size else int(hops[a, b])
            if est == true:
                equal += 1
                continue
            if est is INF or (true is not INF and est > true):
                raise AssertionError(f"assignment exceeds BFS distance for {P.ksets[a]}, {P.ksets[b]}")
            gap = P.size if true is INF else true - est
            if gap > max_gap:
                max_gap, example = gap, (P.ksets[a], P.ksets[b])
    return ReductionCheck(pairs, equal, max_gap, example)


# -- upper bounds ------------------------------------------------------------


def diameter_bound(mu: float, N: int, d: Extended, exponent: str = "certified") -> float:
    """``mu (1 - 2 / (1 + N^{1/(d-1)}))`` for ``d >= 2``.

    ``d = INF`` gives 0 and ``d < 2`` gives no bound (``inf``).
    ``exponent="pseudocode"`` uses ``N^{1/d}`` instead; that variant is kept
    only for comparison and is not a certified bound.
    """
    if d is INF:
        return 0.0
    if d < 2:
        return math.inf
    if exponent == "certified":
        power = 1.0 / (d - 1)
    elif exponent == "pseudocode":
        power = 1.0 / d
    else:
        raise ValueError(f"unknown exponent variant {exponent!r}")
    return mu * (1.0 - 2.0 / (1.0 + N**power))


@dataclass(frozen=True)
class UpperBoundRecord:
    k: int
    j: int
    mu: float
    N: int
    d: Extended
    bound: float
    estimate: DiameterEstimate
    certified: bool = True
    note: str = ""


def lambda_max_surrogate(G: Graph, k: int, refine: bool = False) -> float:
    """Upper bound on the largest eigenvalue of L_k: ``2 k β``, or for
    ``k = 1`` with ``refine`` the sum of the two largest degrees."""
    degs = sorted(G.degrees, reverse=True)
    if not degs:
        return 0.0
    if refine and k == 1:
        return float(degs[0] + (degs[1] if len(degs) > 1 else 0))
    return float(2 * k * degs[0])


def upper_bound_lambda(
    G: Graph,
    k: int,
    j: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    exponent: str = "certified",
    refine_mu: bool = False,
    D: DistanceMatrix | None = None,
    table: np.ndarray | None = None,
) -> UpperBoundRecord:
    """Upper bound on ``λ_j(L_k)`` from an estimated generalized diameter.

    Every estimate is a lower bound on the true diameter and the formula
    decreases in ``d``, so the returned bound stays valid.
    """
    if not 1 <= k <= max(1, G.n // 2):
        raise GraphValidationError(f"need 1 <= k <= n/2, got k={k}, n={G.n}")
    N = comb(G.n, k)
    if not 1 <= j <= N - 1:
        raise GraphValidationError(f"need 1 <= j <= {N - 1}, got j={j}")
    mu = lambda_max_surrogate(G, k, refine_mu)
    est = estimate_generalized_diameter(G, k, j, trials, seed, D, table)
    bound = diameter_bound(mu, N, est.d, exponent)
    note = ""
    if est.d is INF:
        note = "infinite-diameter witness: the selected k-sets lie in different components of G^{k}"
    elif est.d < 2:
        note = "estimated diameter below 2; no bound"
    certified = exponent == "certified"
    if not certified:
        note = (note + "; " if note else "") + "pseudocode exponent 1/d, not certified"
    return UpperBoundRecord(k, j, mu, N, est.d, bound, est, certified, note)


@dataclass(frozen=True)
class LambdaMaxBounds:
    lower: float
    upper: float
    hamiltonian: tuple[float, float] | None = None


def lambda_max_bounds(G: Graph, k: int, fit, refine: bool = False) -> LambdaMaxBounds:
    """``c k^{1-1/δ} <= λ_max(L_k) <= 2kβ`` for an isoperimetric fit
    ``(δ, c)``; at ``k = ⌊n/2⌋`` also the envelope
    ``c ⌊n/2⌋^{1-1/δ} <= λ_max(H) <= nβ`` for the full Hamiltonian."""
    delta, c = fit.delta, fit.c
    if k == 0:
        return LambdaMaxBounds(0.0, 0.0)
    if not 1 <= k <= max(1, G.n // 2):
        raise GraphValidationError(f"need 1 <= k <= n/2, got k={k}, n={G.n}")
    expo = 1.0 - (0.0 if math.isinf(delta) else 1.0 / delta)
    lower = c * k**expo
    upper = lambda_max_surrogate(G, k, refine)
    ham = None
    if k == G.n // 2:
        beta = max(G.degrees, default=0)
        ham = (c * (G.n // 2) ** expo, float(G.n * beta))
    return LambdaMaxBounds(lower, upper, ham)
