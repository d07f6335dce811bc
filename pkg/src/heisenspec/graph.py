"""Undirected simple graphs, BFS distances and edge boundaries.

Vertices are ``0..n-1`` inside the library.  The edge-list text format is
1-indexed; :func:`parse_graph` and :func:`format_graph` translate.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import GraphValidationError, HeisenspecError, ParseError


class _Infinity:
    """Distance marker for vertices in different components.

    Orders above every integer.  Arithmetic on it raises, so unreachable
    pairs can never leak into a finite sum.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self) -> int:
        return hash("heisenspec.INF")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


INF = _Infinity()

#: A hop count or :data:`INF`.
Extended = Union[int, _Infinity]


def is_inf(x) -> bool:
    return x is INF


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build through :meth:`from_edges` (validating) rather than the raw
    constructor.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphValidationError(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge {{{u}, {v}}} has a label outside 0..{n - 1}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphValidationError(f"duplicate edge {{{key[0]}, {key[1]}}}")
            seen.add(key)
        ordered = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, ordered, tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nb) for nb in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.neighbor_masks[u] >> v) & 1 == 1

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def vertex_set(G: Graph, X: Iterable[int]) -> tuple[int, ...]:
    """Validate ``X`` against ``G`` and return it as a sorted tuple."""
    members = tuple(sorted(set(X)))
    for x in members:
        if not 0 <= x < G.n:
            raise GraphValidationError(f"vertex {x} outside 0..{G.n - 1}")
    return members


def mask_of(X: Iterable[int]) -> int:
    mask = 0
    for x in X:
        mask |= 1 << x
    return mask


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: a header ``n m`` then ``m`` lines ``u v``
    with 1-indexed labels.  Blank lines and ``#`` comments are skipped."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty document; expected header 'n m'", 1)

    def ints(lineno: int, parts: list[str]) -> tuple[int, int]:
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {' '.join(parts)!r}", lineno)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {' '.join(parts)!r}", lineno) from None

    lineno, header = rows[0]
    n, m = ints(lineno, header)
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", lineno)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header declares {m} edges but {len(body)} follow", last)

    edges = []
    seen = set()
    for lineno, parts in body:
        u, v = ints(lineno, parts)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphValidationError(f"line {lineno}: label outside 1..{n} in edge {u} {v}")
        if u == v:
            raise GraphValidationError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidationError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- distances ---------------------------------------------------------------


class DistanceMatrix:
    """All-pairs hop counts; unreachable pairs read back as :data:`INF`."""

    __slots__ = ("_hops", "_rows")

    def __init__(self, hops: np.ndarray):
        # -1 marks unreachable internally; never exposed
        self._hops = hops
        self._rows = None

    @property
    def n(self) -> int:
        return self._hops.shape[0]

    def __getitem__(self, key: tuple[int, int]) -> Extended:
        h = int(self._hops[key])
        return INF if h < 0 else h

    def reachable(self, u: int, v: int) -> bool:
        return self._hops[u, v] >= 0

    def rows(self) -> list[list[Extended]]:
        """Nested lists, built once; callers must not mutate them."""
        if self._rows is None:
            self._rows = [[INF if h < 0 else int(h) for h in row] for row in self._hops]
        return self._rows

    def to_serializable(self) -> list[list[int | str]]:
        return [["inf" if h < 0 else int(h) for h in row] for row in self._hops]

    def __eq__(self, other) -> bool:
        return isinstance(other, DistanceMatrix) and np.array_equal(self._hops, other._hops)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def bfs_distances(G: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; ``-1`` where unreachable."""
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    adj = G.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    """BFS from every vertex, O(n(n+m))."""
    hops = np.array([bfs_distances(G, s) for s in range(G.n)], dtype=np.int64).reshape(G.n, G.n)
    return DistanceMatrix(hops)


# -- boundaries, subgraphs, degrees ------------------------------------------


def edge_boundary(G: Graph, X: Iterable[int]) -> tuple[list[tuple[int, int]], int]:
    """Edges with exactly one endpoint in ``X``, and their count."""
    inside = set(vertex_set(G, X))
    crossing = [(u, v) for u, v in G.edges if (u in inside) != (v in inside)]
    return crossing, len(crossing)


def boundary_size_mask(G: Graph, mask: int) -> int:
    """``|∂X|`` for ``X`` given as a bitmask."""
    total = 0
    nm = G.neighbor_masks
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        total += G.degrees[v] - (nm[v] & mask).bit_count()
        rest ^= low
    return total


def induced_subgraph(G: Graph, W: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Delete ``W``; return the remaining graph relabeled ``0..n-|W|-1`` and
    the map ``new label -> old label``."""
    removed = set(vertex_set(G, W))
    keep = tuple(v for v in range(G.n) if v not in removed)
    if not keep:
        raise GraphValidationError("cannot delete every vertex")
    new_label = {old: new for new, old in enumerate(keep)}
    edges = [(new_label[u], new_label[v]) for u, v in G.edges if u in new_label and v in new_label]
    return Graph.from_edges(len(keep), edges), keep


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    degrees: tuple[int, ...]
    volume: int


def degree_profile(G: Graph) -> DegreeProfile:
    degs = G.degrees
    if not degs:
        return DegreeProfile(0, 0, (), 0)
    return DegreeProfile(min(degs), max(degs), degs, sum(degs))


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    label = [-1] * G.n
    comps = []
    for s in range(G.n):
        if label[s] >= 0:
            continue
        label[s] = len(comps)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if label[w] < 0:
                    label[w] = label[s]
                    members.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(members)))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


# -- standard families -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(n: int) -> Graph:
    """Center 0 joined to ``n - 1`` leaves."""
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to a cycle on ``1..n-1``."""
    if n < 4:
        raise GraphValidationError("a wheel needs at least 4 vertices")
    rim = [(i, i + 1 if i + 1 < n else 1) for i in range(1, n)]
    return Graph.from_edges(n, rim + [(0, v) for v in range(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return Graph.from_edges(offset, edges)


def random_graph(n: int, p: float, seed: int | random.Random) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded stream."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int | random.Random, max_tries: int = 1000) -> Graph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_tries):
        G = random_graph(n, p, rng)
        if is_connected(G):
            return G
    raise HeisenspecError(f"no connected G({n}, {p}) sample in {max_tries} tries")
