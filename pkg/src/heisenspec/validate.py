"""Property suites run by ``heisenspec validate``.

Each suite returns a :class:`CheckResult`; a graph passes when every
applicable suite does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from .diameter import kset_distance_table, upper_bound_lambda
from .errors import HeisenspecError
from .graph import Graph, all_pairs_distances, complete_graph, is_connected, members_of
from .isoperimetry import (
    CHECK_MAX_VERTICES,
    OMEGA_EXHAUSTIVE_MAX,
    eip_bruteforce,
    family_constant,
    functional_g_p,
    functional_rho_p,
    indicator,
    iso_fit,
    sobolev_seminorm,
    verify_symprod_bound,
)
from .johnson import meanfield_spectrum, reconstruct_Lk
from .lower import lower_bound_lambda_Lk, sandwich_check
from .spectral import eigenvalues
from .symprod import MAX_SPINS, build_heisenberg_dense, complement_check, laplacian_Lk, verify_decomposition

RHO_PS = (1.0, 1.5, 2.0, 3.0)
DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""


def _skip(name: str, why: str) -> CheckResult:
    return CheckResult(name, True, True, why)


def check_decomposition(G: Graph, inject_fault: bool = False) -> CheckResult:
    if G.n > MAX_SPINS:
        return _skip("decomposition", f"n > {MAX_SPINS}")
    H = None
    if inject_fault:
        H = build_heisenberg_dense(G)
        H[0, 0] += 0.5
    rep = verify_decomposition(G, hamiltonian=H)
    return CheckResult("decomposition", rep.passed, detail=rep.detail or f"max deviation {rep.max_deviation:.3g}")


def check_aldous_gap(G: Graph, tol: float = 1e-9) -> CheckResult:
    if not is_connected(G) or G.n < 2:
        return _skip("aldous-gap", "graph is disconnected")
    gaps = [eigenvalues(laplacian_Lk(G, k)).eigenvalues[1] for k in range(1, G.n)]
    spread = float(max(gaps) - min(gaps))
    return CheckResult("aldous-gap", spread <= tol, detail=f"lambda_1 spread {spread:.3g}")


def check_sandwich(G: Graph) -> CheckResult:
    if not is_connected(G) or G.n < 2:
        return _skip("sandwich", "graph is disconnected")
    rep = sandwich_check(G)
    return CheckResult("sandwich", rep.passed, detail=rep.detail)


def rho_stated_factor(p: float) -> float:
    """Published lower factor ``2^{-(1-1/p)}`` in ``factor * g_p <= ρ_p``."""
    return 2.0 ** -(1.0 - 1.0 / p)


def rho_valid_factor(p: float) -> float:
    """Lower factor that holds for every ``p >= 1``.

    ``(ρ_p/g_p)^p = ((1-q)^{p-1} + q^{p-1}) / 2`` with ``q = |X|/|V|``; for
    ``p < 2`` this tends to 1/2 as ``q -> 0``, so the stated factor is only
    valid for ``p = 1`` and ``p >= 2``.
    """
    return 2.0 ** -max(1.0 / p, 1.0 - 1.0 / p)


def check_rho_bounds(G: Graph, ps=RHO_PS, tol: float = 1e-12, factor=rho_valid_factor) -> CheckResult:
    """``factor(p) g_p <= ρ_p <= g_p`` and ``‖1_X‖_E = |∂X|`` over every X."""
    if G.n > MAX_SPINS:
        return _skip("rho-bounds", f"n > {MAX_SPINS}")
    for mask in range(1 << G.n):
        X = members_of(mask)
        f = indicator(G, X)
        inside = set(X)
        boundary = sum((u in inside) != (v in inside) for u, v in G.edges)
        if sobolev_seminorm(G, f) != boundary:
            return CheckResult("rho-bounds", False, detail=f"seminorm differs from boundary at X={X}")
        for p in ps:
            g = functional_g_p(G, X, p)
            r = functional_rho_p(G, f, p)
            if not (factor(p) * g - tol <= r <= g + tol):
                return CheckResult("rho-bounds", False, detail=f"X={X}, p={p}: g={g}, rho={r}")
            if p == 1.0 and abs(r - g) > tol:
                return CheckResult("rho-bounds", False, detail=f"rho_1 != g_1 at X={X}")
    return CheckResult("rho-bounds", True)


def check_token_isoperimetry(G: Graph, ps=(1.0, 2.0)) -> CheckResult:
    if G.n > CHECK_MAX_VERTICES:
        return _skip("token-isoperimetry", f"n > {CHECK_MAX_VERTICES}")
    ran = 0
    for k in range(1, G.n // 2 + 1):
        if comb(G.n, k) > OMEGA_EXHAUSTIVE_MAX:
            continue
        for p in ps:
            rep = verify_symprod_bound(G, k, p)
            ran += 1
            if not rep.passed:
                return CheckResult("token-isoperimetry", False, detail=f"k={k}, p={p}, witness {rep.witness}")
    if not ran:
        return _skip("token-isoperimetry", f"every C(n,k) exceeds {OMEGA_EXHAUSTIVE_MAX}")
    return CheckResult("token-isoperimetry", True, detail=f"{ran} exhaustive scans")


def check_meanfield(n: int, tol: float = 1e-8) -> CheckResult:
    """Mean-field table against the oracle spectrum of the complete graph."""
    if n > MAX_SPINS or n < 1:
        return _skip("mean-field", f"n outside 1..{MAX_SPINS}")
    oracle = eigenvalues(build_heisenberg_dense(complete_graph(n))).eigenvalues
    table = meanfield_spectrum(n).expanded()
    if len(oracle) != len(table) or np.max(np.abs(oracle - table)) > tol:
        return CheckResult("mean-field", False, detail="spectrum mismatch")
    for k in range(n // 2 + 1):
        rep = reconstruct_Lk(n, k)
        if not rep.passed:
            return CheckResult("mean-field", False, detail=f"projector error {rep.error:.3g} at k={k}")
    return CheckResult("mean-field", True)


def check_complement(G: Graph) -> CheckResult:
    worst = 0.0
    for k in range(G.n + 1):
        rep = complement_check(G, k)
        worst = max(worst, rep.max_deviation)
        if not rep.passed:
            return CheckResult("complement", False, detail=f"k={k}: deviation {rep.max_deviation:.3g}")
    return CheckResult("complement", True, detail=f"max deviation {worst:.3g}")


def check_bounds(G: Graph, seed: int = 0, tol: float = 1e-9, delta: float = 3.0) -> CheckResult:
    """Upper and lower bounds bracket the oracle eigenvalues of each L_k."""
    if G.n < 2 or not G.edges:
        return _skip("bounds", "no edges")
    D = all_pairs_distances(G)
    fit = iso_fit(eip_bruteforce(G), delta) if is_connected(G) else None
    for k in range(1, G.n // 2 + 1):
        spec = eigenvalues(laplacian_Lk(G, k)).eigenvalues
        a_k = family_constant(G, k, delta) if fit is not None else 0.0
        table = kset_distance_table(G, k, D)
        for j in range(1, len(spec)):
            up = upper_bound_lambda(G, k, j, seed=seed, D=D, table=table)
            if math.isfinite(up.bound) and up.bound < spec[j] - tol:
                return CheckResult("bounds", False, detail=f"upper k={k} j={j}: {up.bound} < {spec[j]}")
            if fit is None:
                continue
            low = lower_bound_lambda_Lk(G, k, j, a_k, delta, fit)
            if low.applicable and low.bound > spec[j] + tol:
                return CheckResult("bounds", False, detail=f"lower k={k} j={j}: {low.bound} > {spec[j]}")
    return CheckResult("bounds", True)


def run_suites(G: Graph, inject_fault: bool = False, seed: int = 0) -> list[CheckResult]:
    suites: list[Callable[[], CheckResult]] = [
        lambda: check_decomposition(G, inject_fault),
        lambda: check_aldous_gap(G),
        lambda: check_sandwich(G),
        lambda: check_rho_bounds(G),
        lambda: check_token_isoperimetry(G),
        lambda: check_meanfield(G.n),
        lambda: check_complement(G),
        lambda: check_bounds(G, seed),
    ]
    results = []
    for suite in suites:
        try:
            results.append(suite())
        except HeisenspecError as exc:
            results.append(CheckResult(getattr(suite, "__name__", "suite"), False, detail=str(exc)))
    return results


def rho_ratio_floor(n: int, p: float) -> float:
    """``min_X ρ_p(1_X) / g_p(1_X)`` over nonempty proper X on ``n`` vertices."""
    q = np.arange(1, n) / n
    return float(np.min((((1 - q) ** (p - 1) + q ** (p - 1)) / 2) ** (1 / p)))
