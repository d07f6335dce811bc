import pytest

from heisenspec.graph import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
    wheel_graph,
)

ACCEPTANCE_LINES: list[str] = []


def small_corpus():
    """Named graphs shared by several test modules."""
    return {
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "star4": star_graph(4),
        "wheel6": wheel_graph(6),
        "K23": complete_bipartite_graph(2, 3),
        "2K2": disjoint_union(path_graph(2), path_graph(2)),
    }


@pytest.fixture
def corpus():
    return small_corpus()


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
