"""Kuhn-Munkres minimum assignment and distances between k-sets."""

from __future__ import annotations

from typing import Sequence

from .errors import GraphValidationError
from .graph import INF, DistanceMatrix, Extended

CostMatrix = Sequence[Sequence[Extended]]


def _hungarian(cost: list[list]) -> list[int] | None:
    """Shortest-augmenting-path Hungarian method, O(a^3).

    ``INF`` entries are simply not edges.  Returns ``row -> column`` or
    ``None`` when no permutation avoids them.
    """
    a = len(cost)
    u = [0] * (a + 1)
    v = [0] * (a + 1)
    match = [0] * (a + 1)  # match[col] = row, 1-based, 0 = free
    way = [0] * (a + 1)
    for i in range(1, a + 1):
        match[0] = i
        j0 = 0
        minv: list = [None] * (a + 1)
        used = [False] * (a + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            row = cost[i0 - 1]
            delta = None
            j1 = 0
            for j in range(1, a + 1):
                if used[j]:
                    continue
                c = row[j - 1]
                if c is not INF:
                    cur = c - u[i0] - v[j]
                    if minv[j] is None or cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] is not None and (delta is None or minv[j] < delta):
                    delta = minv[j]
                    j1 = j
            if delta is None:
                return None
            for j in range(a + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    perm = [0] * a
    for j in range(1, a + 1):
        perm[match[j] - 1] = j - 1
    return perm


def min_assignment(C: CostMatrix) -> tuple[Extended, tuple[int, ...]]:
    """Minimum of ``Σ_u C[u][π(u)]`` over permutations ``π``.

    Among optimal permutations the lexicographically smallest is returned.
    Entries are nonnegative integers or ``INF``; if every permutation hits an
    ``INF`` the result is ``(INF, ())``.
    """
    a = len(C)
    for row in C:
        if len(row) != a:
            raise ValueError("cost matrix must be square")
    if a == 0:
        return 0, ()
    # Scale costs by a**a and add a lexicographic tie-break term that sums to
    # less than a**a, so the unique optimum of the scaled problem is the
    # lexicographically smallest optimum of the original.
    scale = a**a
    weights = [a ** (a - 1 - r) for r in range(a)]
    scaled = [
        [INF if c is INF else c * scale + col * weights[r] for col, c in enumerate(row)]
        for r, row in enumerate(C)
    ]
    perm = _hungarian(scaled)
    if perm is None:
        return INF, ()
    return sum(C[r][perm[r]] for r in range(a)), tuple(perm)


def assignment_value(C: CostMatrix) -> Extended:
    """Minimum assignment value only; no tie-breaking work."""
    a = len(C)
    if a == 0:
        return 0
    if a == 1:
        return C[0][0]
    if a == 2:
        x, y = C[0][0], C[1][1]
        u, v = C[0][1], C[1][0]
        first = INF if x is INF or y is INF else x + y
        second = INF if u is INF or v is INF else u + v
        return min(first, second)
    perm = _hungarian([list(row) for row in C])
    if perm is None:
        return INF
    return sum(C[r][perm[r]] for r in range(a))


def assignment_cost_matrix(X: Sequence[int], Y: Sequence[int], D: DistanceMatrix) -> list[list[Extended]]:
    """Pairwise base distances between ``X \\ Y`` (rows) and ``Y \\ X``."""
    common = set(X) & set(Y)
    xs = [x for x in X if x not in common]
    ys = [y for y in Y if y not in common]
    rows = D.rows()
    return [[rows[x][y] for y in ys] for x in xs]


def kset_distance(X: Sequence[int], Y: Sequence[int], D: DistanceMatrix) -> Extended:
    """Distance between two k-sets in G^{k} through minimum assignment of the
    tokens that differ."""
    if len(X) != len(Y):
        raise GraphValidationError(f"k-sets differ in size: {len(X)} vs {len(Y)}")
    return assignment_value(assignment_cost_matrix(X, Y, D))
