import math

from heisenspec.graph import disjoint_union, path_graph
from heisenspec.report import BoundReport, BoundRow, DiameterInfo, FitInfo, GraphInfo


def sample_report():
    G = disjoint_union(path_graph(3), path_graph(2))
    return BoundReport(
        "upper",
        GraphInfo.of(G),
        [
            BoundRow(1, 1, upper=0.0, upper_note="infinite-diameter witness", exact=0.0,
                     diameter=DiameterInfo(math.inf, 16, 0, [[1], [4]])),
            BoundRow(1, 2, upper=math.inf, diameter=DiameterInfo(1, 16, 0, [[1], [2], [3]])),
            BoundRow(2, 1, lower=None, lower_reason="a_k = 0", fit=FitInfo(math.inf, 0.5, True, 0.0)),
        ],
    )


def test_graph_info():
    info = GraphInfo.of(disjoint_union(path_graph(3), path_graph(2)))
    assert (info.n, info.m, info.b, info.beta, info.components) == (5, 3, 1, 2, 2)


def test_json_roundtrip():
    rep = sample_report()
    text = rep.to_json()
    assert '"inf"' in text and "Infinity" not in text
    back = BoundReport.from_json(text)
    assert back == rep
    assert back.to_json() == text


def test_csv_has_one_line_per_row():
    lines = sample_report().to_csv().strip().splitlines()
    assert len(lines) == 4
    assert "1;4" in lines[1]


def test_violations():
    rep = sample_report()
    assert rep.violations() == []
    rep.rows.append(BoundRow(1, 3, lower=2.0, exact=1.0))
    assert rep.violations() == [rep.rows[-1]]
