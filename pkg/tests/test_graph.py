import pytest

from heisenspec.errors import GraphValidationError, ParseError
from heisenspec.graph import (
    INF,
    all_pairs_distances,
    connected_components,
    cycle_graph,
    degree_profile,
    edge_boundary,
    empty_graph,
    format_graph,
    induced_subgraph,
    is_inf,
    complete_graph,
    parse_graph,
    path_graph,
    star_graph,
    disjoint_union,
)


def test_parse_path():
    G = parse_graph("3 2\n1 2\n2 3")
    assert G == path_graph(3)
    assert G.m == 2


def test_parse_complete_graph():
    G = parse_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4")
    assert G == complete_graph(4)


def test_parse_duplicate_edge():
    with pytest.raises(GraphValidationError, match="duplicate"):
        parse_graph("3 2\n1 2\n1 2")


def test_parse_reversed_duplicate_and_self_loop():
    with pytest.raises(GraphValidationError, match="duplicate"):
        parse_graph("3 2\n1 2\n2 1")
    with pytest.raises(GraphValidationError, match="self-loop"):
        parse_graph("3 1\n2 2")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_graph("3 2\n1 2\n2 x")
    assert info.value.line == 3
    with pytest.raises(GraphValidationError, match="line 2"):
        parse_graph("3 1\n1 4")


def test_parse_comments_and_roundtrip():
    G = parse_graph("# a comment\n4 3\n1 2  # first\n\n2 3\n3 4\n")
    assert G == path_graph(4)
    assert parse_graph(format_graph(G)) == G


def test_distances_on_path_and_cycle():
    D = all_pairs_distances(path_graph(4))
    assert D[0, 3] == 3
    D = all_pairs_distances(cycle_graph(6))
    assert D[0, 3] == 3
    assert D[0, 2] == 2


def test_distance_between_components_is_inf():
    D = all_pairs_distances(empty_graph(2))
    assert D[0, 1] is INF
    assert is_inf(D[0, 1])
    assert D.to_serializable()[0][1] == "inf"


def test_inf_marker_orders_above_ints():
    assert 10**9 < INF
    assert INF > 0
    assert not INF < 3
    assert min(INF, 4) == 4
    with pytest.raises(TypeError):
        INF + 1


def test_edge_boundary_examples():
    K4 = complete_graph(4)
    assert edge_boundary(K4, [0])[1] == 3
    assert edge_boundary(K4, [0, 1])[1] == 4
    assert edge_boundary(K4, [])[1] == 0
    assert edge_boundary(K4, range(4))[1] == 0
    with pytest.raises(GraphValidationError):
        edge_boundary(K4, [7])


def test_induced_subgraph_examples():
    H, keep = induced_subgraph(complete_graph(4), [3])
    assert H == complete_graph(3)
    assert keep == (0, 1, 2)
    H, keep = induced_subgraph(path_graph(4), [1])
    assert keep == (0, 2, 3)
    assert H.edges == ((1, 2),)
    H, _ = induced_subgraph(cycle_graph(6), [0, 3])
    assert H == disjoint_union(path_graph(2), path_graph(2))
    with pytest.raises(GraphValidationError):
        induced_subgraph(path_graph(2), [0, 1])


def test_degree_profiles():
    p = degree_profile(cycle_graph(6))
    assert (p.min_degree, p.max_degree, p.volume) == (2, 2, 12)
    p = degree_profile(complete_graph(4))
    assert (p.min_degree, p.max_degree, p.volume) == (3, 3, 12)
    p = degree_profile(star_graph(4))
    assert (p.min_degree, p.max_degree) == (1, 3)


def test_connected_components():
    assert connected_components(cycle_graph(6)) == [tuple(range(6))]
    assert len(connected_components(disjoint_union(path_graph(2), path_graph(2)))) == 2
    H, _ = induced_subgraph(path_graph(4), [1])
    assert connected_components(H) == [(0,), (1, 2)]
