"""Isoperimetric lower bounds on Laplacian eigenvalues of a graph and of the
token-graph blocks L_k."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import GraphValidationError, NotApplicableError
from .graph import Graph, is_connected
from .spectral import eigenvalues, laplacian_matrix, normalized_laplacian


def _inv(delta: float) -> float:
    return 0.0 if math.isinf(delta) else 1.0 / delta


def _dimension_factor(delta: float) -> float:
    """``((δ-2)/(δ-1))^2``, tending to 1 as ``δ -> ∞``."""
    if math.isinf(delta):
        return 1.0
    return ((delta - 2.0) / (delta - 1.0)) ** 2


def c_delta(c: float, beta: float, delta: float) -> float:
    """Volume-form isoperimetric constant ``c / β^{1-1/δ}``."""
    if beta < 1:
        raise ValueError("maximum degree must be at least 1")
    if not delta > 1:
        raise ValueError("dimension must exceed 1")
    return c / beta ** (1.0 - _inv(delta))


def lower_bound_lambda_graph(b: float, beta: float, c: float, delta: float, j: int, m_edges: float) -> float:
    """``(b c^2 / (16 e β^2)) ((δ-2)/(δ-1))^2 (j β / (18 m))^{2/δ}``.

    Raises :class:`NotApplicableError` unless ``δ > 2`` and ``c > 0``.
    """
    if not delta > 2:
        raise NotApplicableError(f"dimension {delta} is not above 2")
    if c <= 0:
        raise NotApplicableError("isoperimetric number is zero")
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return 0.0
    if m_edges <= 0 or beta <= 0:
        raise GraphValidationError("graph has no edges")
    return (
        b * c * c / (16.0 * math.e * beta * beta)
        * _dimension_factor(delta)
        * (j * beta / (18.0 * m_edges)) ** (2.0 * _inv(delta))
    )


@dataclass
class LowerBoundRecord:
    k: int
    j: int
    bound: float | None
    applicable: bool
    reason: str = ""
    inputs: dict = field(default_factory=dict)


def lower_bound_lambda_Lk(
    G: Graph,
    k: int,
    j: int,
    a_k: float,
    delta_k: float,
    fit,
    edges: int | None = None,
) -> LowerBoundRecord:
    """Lower bound on ``λ_j(L_k)``.

    ``fit`` is the ``(δ, c)`` pair of ``G`` itself; ``a_k`` the isoperimetric
    number at dimension ``δ_k`` shared by all subgraphs with ``k - 1``
    vertices deleted.  The token graph's minimum degree is bounded below by
    ``c k^{1-1/δ}`` and its maximum degree above by ``k β_1``.  Its edge count
    defaults to the bound ``k β_1 C(n,k) / 2``; pass ``edges`` to use an exact
    count instead.
    """
    n = G.n
    beta1 = max(G.degrees, default=0)
    N = comb(n, k)
    inputs = {
        "n": n,
        "k": k,
        "j": j,
        "a_k": a_k,
        "delta_k": delta_k,
        "delta": fit.delta,
        "c": fit.c,
        "beta1": beta1,
        "edges": "bound" if edges is None else "exact",
    }
    if not delta_k > 2:
        return LowerBoundRecord(k, j, None, False, f"delta_k = {delta_k} is not above 2", inputs)
    if a_k <= 0:
        return LowerBoundRecord(k, j, None, False, "a_k = 0: some subgraph with k-1 vertices deleted is disconnected", inputs)
    if fit.c <= 0:
        return LowerBoundRecord(k, j, None, False, "G has isoperimetric number 0", inputs)
    if j == 0:
        return LowerBoundRecord(k, j, 0.0, True, "", inputs)

    if edges is None:
        value = (
            fit.c * k ** (-_inv(fit.delta)) * a_k**2 / (16.0 * math.e * k * beta1**2)
            * (n ** (1.0 - _inv(delta_k)) / (n - k + 1)) ** 2
            * _dimension_factor(delta_k)
            * (j / (9.0 * N)) ** (2.0 * _inv(delta_k))
        )
    else:
        value = lower_bound_lambda_graph(
            b=fit.c * k ** (1.0 - _inv(fit.delta)),
            beta=k * beta1,
            c=a_k * n ** (1.0 - _inv(delta_k)) / (n - k + 1),
            delta=delta_k,
            j=j,
            m_edges=edges,
        )
    return LowerBoundRecord(k, j, value, True, "", inputs)


@dataclass
class SandwichReport:
    passed: bool
    b: int
    beta: int
    laplacian: np.ndarray
    normalized: np.ndarray
    worst_j: int | None = None
    detail: str = ""


def sandwich_check(G: Graph, tol: float = 1e-8) -> SandwichReport:
    """``b λ_j(L̃) <= λ_j(L) <= β λ_j(L̃)`` for every ``j``."""
    if not is_connected(G):
        raise GraphValidationError("sandwich check needs a connected graph")
    L = eigenvalues(laplacian_matrix(G)).eigenvalues
    Ln = eigenvalues(normalized_laplacian(G)).eigenvalues
    b, beta = min(G.degrees), max(G.degrees)
    low_gap = b * Ln - L
    high_gap = L - beta * Ln
    worst = np.maximum(low_gap, high_gap)
    j = int(np.argmax(worst))
    passed = bool(worst[j] <= tol)
    detail = "" if passed else f"j={j}: b*normalized={b * Ln[j]:.12g}, L={L[j]:.12g}, beta*normalized={beta * Ln[j]:.12g}"
    return SandwichReport(passed, b, beta, L, Ln, None if passed else j, detail)
