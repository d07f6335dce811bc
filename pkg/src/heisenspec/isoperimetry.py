"""Edge-isoperimetric profiles, Sobolev-type functionals, and the
isoperimetric inequality for token graphs derived from vertex-deleted
subgraphs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import GraphValidationError, HeisenspecError, SizeCapError, size_cap
from .graph import Graph, induced_subgraph, mask_of, members_of
from .symprod import KSet, build_symmetric_product, enumerate_ksets, rank

EIP_MAX_VERTICES = 24
CHECK_MAX_VERTICES = 20
OMEGA_EXHAUSTIVE_MAX = 15
DELTA_GRID = (2.5, 3.0, 4.0, 6.0, math.inf)


def _inv(delta: float) -> float:
    return 0.0 if math.isinf(delta) else 1.0 / delta


# -- exact edge-isoperimetric problem ----------------------------------------


def boundary_minima(G: Graph) -> tuple[list[int], list[int]]:
    """Minimum ``|∂X|`` over ``|X| = s`` for every ``s = 0..n``, with a
    minimizing bitmask per size.

    Walks the subsets avoiding the last vertex in Gray-code order, updating
    the boundary in O(1) word operations per step; complements cover the
    remaining subsets.
    """
    n = G.n
    if n > EIP_MAX_VERTICES:
        raise SizeCapError(f"exact EIP limited to n <= {EIP_MAX_VERTICES}, got {n}; use sampling")
    if n == 0:
        return [0], [0]
    nbr = G.neighbor_masks
    deg = G.degrees
    best = [None] * (n + 1)
    arg = [0] * (n + 1)
    best[0] = 0
    X = 0
    b = 0
    pc = 0
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        shared = (nbr[v] & X).bit_count()
        if X & bit:
            X ^= bit
            b += 2 * shared - deg[v]
            pc -= 1
        else:
            X |= bit
            b += deg[v] - 2 * shared
            pc += 1
        cur = best[pc]
        if cur is None or b < cur:
            best[pc] = b
            arg[pc] = X
    full = (1 << n) - 1
    minima = [0] * (n + 1)
    masks = [0] * (n + 1)
    for s in range(n + 1):
        direct, comp = best[s], best[n - s]
        if comp is not None and (direct is None or comp < direct):
            minima[s], masks[s] = comp, full ^ arg[n - s]
        else:
            minima[s], masks[s] = direct, arg[s]
    return minima, masks


@dataclass(frozen=True)
class EIPProfile:
    """``e[s-1]`` is the minimum boundary over sets of size ``s``,
    ``s = 1..⌊n/2⌋``."""

    n: int
    e: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]
    name: str = ""


def eip_bruteforce(G: Graph, name: str = "") -> EIPProfile:
    minima, masks = boundary_minima(G)
    half = G.n // 2
    return EIPProfile(
        G.n,
        tuple(minima[1 : half + 1]),
        tuple(members_of(masks[s]) for s in range(1, half + 1)),
        name,
    )


def eip_sampled(G: Graph, samples: int, seed: int = 0) -> EIPProfile:
    """Upper estimate of the profile from random subsets; heuristic only."""
    rng = np.random.default_rng(seed)
    half = G.n // 2
    e = [None] * (half + 1)
    wit: list[tuple[int, ...]] = [()] * (half + 1)
    for _ in range(samples):
        s = int(rng.integers(1, half + 1))
        X = tuple(sorted(int(x) for x in rng.choice(G.n, size=s, replace=False)))
        inside = set(X)
        b = sum((u in inside) != (v in inside) for u, v in G.edges)
        if e[s] is None or b < e[s]:
            e[s], wit[s] = b, X
    missing = [s for s in range(1, half + 1) if e[s] is None]
    if missing:
        raise HeisenspecError(f"sampling never hit sizes {missing}; raise the sample count")
    return EIPProfile(G.n, tuple(e[1:]), tuple(wit[1:]), "sampled")


@dataclass(frozen=True)
class IsoFit:
    """Dimension ``δ`` and isoperimetric number ``c`` with
    ``e[s] >= c s^{1-1/δ}`` for every size in the profile."""

    delta: float
    c: float
    certified: bool = True


def iso_fit(profile: EIPProfile, delta: float) -> IsoFit:
    """Largest ``c`` such that ``e[s] >= c s^{1-1/δ}`` for all ``s``."""
    if not profile.e:
        raise HeisenspecError("empty profile: the graph has fewer than two vertices")
    if not delta > 1:
        raise ValueError(f"dimension must exceed 1, got {delta}")
    expo = 1.0 - _inv(delta)
    c = min(e / s**expo for s, e in enumerate(profile.e, start=1))
    return IsoFit(delta, c, profile.name != "sampled")


# -- functionals -------------------------------------------------------------


def sobolev_seminorm(G: Graph, f: Sequence[float]) -> float:
    """``Σ_{uv ∈ E} |f(u) - f(v)|``."""
    if len(f) != G.n:
        raise ValueError(f"function has {len(f)} values for {G.n} vertices")
    return sum(abs(f[u] - f[v]) for u, v in G.edges)


def indicator(G: Graph, X: Sequence[int]) -> list[float]:
    inside = set(X)
    return [1.0 if v in inside else 0.0 for v in range(G.n)]


def functional_g_p(G: Graph, X: Sequence[int], p: float) -> float:
    """``g_p`` of the indicator of ``X``: ``(2|X||V∖X|/|V|)^{1/p}``."""
    if p < 1:
        raise ValueError("p must be at least 1")
    x = len(set(X))
    return (2.0 * x * (G.n - x) / G.n) ** (1.0 / p)


def functional_rho_p(G: Graph, f: Sequence[float], p: float) -> float:
    """``(Σ_v |f(v) - mean(f)|^p)^{1/p}``."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if len(f) != G.n:
        raise ValueError(f"function has {len(f)} values for {G.n} vertices")
    mean = sum(f) / G.n
    return sum(abs(x - mean) ** p for x in f) ** (1.0 / p)


def rho_p_of_size(n: int, s: int, p: float) -> float:
    """``ρ_p`` of any indicator with ``s`` ones among ``n`` vertices."""
    q = s / n
    return (s * (1.0 - q) ** p + (n - s) * q**p) ** (1.0 / p)


@dataclass(frozen=True)
class IsoCheck:
    passed: bool
    min_ratio: float
    witness: tuple[int, ...]


def check_isoperimetric(G: Graph, C: float, p: float) -> IsoCheck:
    """Is ``‖1_X‖_E >= C ρ_p(1_X)`` for every ``X ⊆ V``?

    Every set size is covered through the exact boundary minima, so this is
    exhaustive.  ``min_ratio`` is the optimal constant and ``witness`` a set
    attaining it.
    """
    if G.n > CHECK_MAX_VERTICES:
        raise SizeCapError(f"exhaustive check limited to n <= {CHECK_MAX_VERTICES}, got {G.n}")
    if p < 1 or C <= 0:
        raise ValueError("need p >= 1 and C > 0")
    ratio, witness = optimal_rho_constant(G, p, with_witness=True)
    return IsoCheck(ratio >= C * (1 - 1e-12), ratio, witness)


def optimal_rho_constant(G: Graph, p: float, with_witness: bool = False):
    """Largest ``C`` making ``G`` ``(C, ρ_p)``-isoperimetric (``inf`` when
    there is no nonempty proper subset)."""
    minima, masks = boundary_minima(G)
    best = math.inf
    arg = 0
    # ties go to the most balanced set size
    for s in sorted(range(1, G.n), key=lambda s: (abs(G.n - 2 * s), s)):
        r = minima[s] / rho_p_of_size(G.n, s, p)
        if r < best:
            best, arg = r, masks[s]
    if with_witness:
        return best, members_of(arg)
    return best


# -- vertex-deleted subgraph families ----------------------------------------


def subgraph_family(
    G: Graph, k: int, sample: int | None = None, seed: int = 0
) -> Iterator[tuple[tuple[int, ...], Graph]]:
    """Yield ``(W, G - W)`` for the (k-1)-sets ``W``; all of them, or
    ``sample`` uniformly drawn ones."""
    if not 1 <= k <= G.n:
        raise GraphValidationError(f"need 1 <= k <= n, got k={k}, n={G.n}")
    total = comb(G.n, k - 1)
    if sample is None:
        if total > size_cap():
            raise SizeCapError(f"{total} deleted subgraphs exceed the cap; pass a sample size")
        for W in itertools.combinations(range(G.n), k - 1):
            yield W, induced_subgraph(G, W)[0]
        return
    rng = np.random.default_rng(seed)
    for _ in range(sample):
        W = tuple(sorted(int(x) for x in rng.choice(G.n, size=k - 1, replace=False)))
        yield W, induced_subgraph(G, W)[0]


@dataclass(frozen=True)
class FamilyConstant:
    value: float
    deleted: tuple[int, ...]
    certified: bool


def family_constant_detail(
    G: Graph, k: int, delta_k: float, sample: int | None = None, seed: int = 0
) -> FamilyConstant:
    best = math.inf
    arg: tuple[int, ...] = ()
    for W, K in subgraph_family(G, k, sample, seed):
        c = iso_fit(eip_bruteforce(K), delta_k).c
        if c < best:
            best, arg = c, W
    return FamilyConstant(best, arg, sample is None)


def family_constant(G: Graph, k: int, delta_k: float, sample: int | None = None, seed: int = 0) -> float:
    """``a_k``: the smallest isoperimetric number, at dimension ``δ_k``, over
    all subgraphs with ``k - 1`` vertices deleted."""
    return family_constant_detail(G, k, delta_k, sample, seed).value


def family_rho_constant(G: Graph, k: int, p: float) -> float:
    """Largest ``C`` such that every ``G - W``, ``|W| = k - 1``, is
    ``(C, ρ_p)``-isoperimetric."""
    return min(optimal_rho_constant(K, p) for _, K in subgraph_family(G, k))


# -- Johnson boundaries and the token-graph inequality ------------------------


def johnson_boundary(n: int, k: int, omega) -> int:
    """Pairs ``(X ∈ Ω, Y ∉ Ω)`` of k-sets with ``|X △ Y| = 2``."""
    inside = {tuple(sorted(X)) for X in omega}
    count = 0
    for X in inside:
        xs = set(X)
        for x in X:
            rest = xs - {x}
            for y in range(n):
                if y in xs:
                    continue
                if tuple(sorted(rest | {y})) not in inside:
                    count += 1
    return count


def _edge_arrays(edges: Sequence[tuple[int, int]]) -> tuple[np.ndarray, np.ndarray]:
    if not edges:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    arr = np.array(edges, dtype=np.int64)
    return arr[:, 0], arr[:, 1]


def _boundaries_of_all_subsets(edges, masks: np.ndarray) -> np.ndarray:
    us, vs = _edge_arrays(edges)
    out = np.zeros(len(masks), dtype=np.int64)
    for u, v in zip(us, vs):
        out += ((masks >> u) ^ (masks >> v)) & 1
    return out


def johnson_edges(n: int, k: int) -> list[tuple[int, int]]:
    ksets = enumerate_ksets(n, k)
    edges = []
    for i, X in enumerate(ksets):
        xs = set(X)
        for x in X:
            for y in range(n):
                if y not in xs:
                    j = rank(tuple(sorted((xs - {x}) | {y})))
                    if i < j:
                        edges.append((i, j))
    return edges


@dataclass
class SymprodBoundReport:
    passed: bool
    C: float
    p: float
    scanned: int
    exhaustive: bool
    min_ratio: float
    witness: tuple[KSet, ...]
    equality_count: int


def verify_symprod_bound(
    G: Graph,
    k: int,
    p: float,
    C: float | None = None,
    samples: int = 20000,
    seed: int = 0,
    tol: float = 1e-9,
) -> SymprodBoundReport:
    """Check ``|∂Ω| >= C/(n-k+1) (2|∂_J Ω|)^{1/p}`` over subsets ``Ω`` of
    k-sets; exhaustive when there are at most 2^15 of them, else sampled.

    ``C`` defaults to the certified constant of the deleted-subgraph family;
    a larger one is rejected.
    """
    certified = family_rho_constant(G, k, p)
    if C is None:
        C = certified
    elif C > certified * (1 + 1e-12):
        raise GraphValidationError(
            f"C={C} is not certified: some (k-1)-deleted subgraph only admits {certified}"
        )
    P = build_symmetric_product(G, k)
    N = P.size
    exhaustive = N <= OMEGA_EXHAUSTIVE_MAX
    if exhaustive:
        masks = np.arange(1 << N, dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        bits = rng.integers(0, 2, size=(samples, N), dtype=np.int64)
        if N >= 63:
            raise SizeCapError("sampled scan limited to fewer than 63 k-sets")
        masks = bits @ (1 << np.arange(N, dtype=np.int64))
    lhs = _boundaries_of_all_subsets(P.graph.edges, masks).astype(float)
    jb = _boundaries_of_all_subsets(johnson_edges(G.n, k), masks).astype(float)
    rhs = C / (G.n - k + 1) * (2.0 * jb) ** (1.0 / p)
    ok = lhs >= rhs - tol
    positive = rhs > 0
    if positive.any():
        ratios = np.where(positive, lhs / np.where(positive, rhs, 1.0), np.inf)
        idx = int(np.argmin(ratios))
        min_ratio = float(ratios[idx])
        witness = tuple(P.ksets[i] for i in members_of(int(masks[idx])))
        equal = int(np.sum(positive & (np.abs(lhs - rhs) <= tol)))
    else:
        min_ratio, witness, equal = math.inf, (), 0
    return SymprodBoundReport(bool(ok.all()), C, p, len(masks), exhaustive, min_ratio, witness, equal)


def corollary_constant(C: float, n: int, k: int, p: float) -> float:
    """``C n^{1/p} / (n - k + 1)``: the ``(·, g_p)`` and ``(·, ρ_p)``
    isoperimetric constant inherited by G^{k}."""
    if C <= 0 or p < 1:
        raise ValueError("need C > 0 and p >= 1")
    return C * n ** (1.0 / p) / (n - k + 1)

