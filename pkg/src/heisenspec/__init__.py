"""Spectral bounds for ferromagnetic Heisenberg Hamiltonians on graphs."""

from .graph import INF, Graph, parse_graph, read_graph

__all__ = ["INF", "Graph", "parse_graph", "read_graph"]
__version__ = "0.1.0"
