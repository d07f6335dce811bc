import json
import math

import pytest

from heisenspec.cli import main
from heisenspec.graph import complete_graph, cycle_graph, disjoint_union, format_graph, path_graph
from heisenspec.report import BoundReport


@pytest.fixture
def write_graph(tmp_path):
    def write(G, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_graph(G))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_examples(capsys, write_graph):
    assert run(capsys, "spectrum", write_graph(complete_graph(4)), "-k", "2")[:2] == (0, "0 4 4 4 6 6\n")
    assert run(capsys, "spectrum", write_graph(path_graph(3)), "-k", "2")[:2] == (0, "0 1 3\n")
    assert run(capsys, "spectrum", write_graph(path_graph(3)), "-k", "0")[:2] == (0, "0\n")
    code, out, _ = run(capsys, "spectrum", write_graph(path_graph(3)), "-k", "1", "--format", "json")
    assert json.loads(out) == {"k": 1, "eigenvalues": [0.0, 1.0, 3.0]}


def test_upper_is_reproducible(capsys, write_graph):
    path = write_graph(cycle_graph(7))
    args = ("upper", path, "-k", "1,2", "-j", "all", "--seed", "9")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first[0] == 0 and first[1] == second[1]
    report = BoundReport.from_json(first[1])
    assert report.violations() == []
    assert all(r.diameter.seed == 9 and r.diameter.trials == 16 for r in report.rows)


def test_upper_disconnected_tightness(capsys, write_graph):
    path = write_graph(disjoint_union(path_graph(2), path_graph(2), path_graph(3)))
    code, out, _ = run(capsys, "upper", path, "-k", "1", "-j", "2", "--trials", "64")
    row = json.loads(out)["rows"][0]
    assert row["upper"] == 0.0
    assert row["diameter"]["d"] == "inf"
    assert "infinite-diameter" in row["upper_note"]
    assert row["exact"] == pytest.approx(0, abs=1e-9)
    # witnesses are 1-indexed
    assert min(min(X) for X in row["diameter"]["witness"]) >= 1


def test_upper_pseudocode_flag(capsys, write_graph):
    code, out, _ = run(capsys, "upper", write_graph(cycle_graph(6)), "-k", "2", "--pseudocode-exponent")
    assert "not certified" in json.loads(out)["rows"][0]["upper_note"]


def test_lower_rows(capsys, write_graph):
    code, out, _ = run(capsys, "lower", write_graph(path_graph(3)), "-k", "2")
    row = json.loads(out)["rows"][0]
    assert code == 0 and row["lower"] is None and "a_k" in row["lower_reason"]

    code, out, _ = run(capsys, "lower", write_graph(cycle_graph(6)), "-k", "1,2", "-j", "1,2", "--delta-grid", "3,4")
    report = BoundReport.from_json(out)
    assert len(report.rows) == 2 * 2 * 2
    assert {r.fit.delta for r in report.rows} == {3.0, 4.0}
    assert report.violations() == []


def test_lower_csv_and_inf_delta(capsys, write_graph):
    code, out, _ = run(capsys, "lower", write_graph(complete_graph(5)), "-k", "2", "--delta-grid", "inf", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("k,j,lower")
    assert ",inf," in lines[1]


def test_validate_exit_codes(capsys, write_graph):
    assert run(capsys, "validate", write_graph(complete_graph(4)))[0] == 0
    assert run(capsys, "validate", write_graph(path_graph(3)))[0] == 0
    code, out, err = run(capsys, "validate", write_graph(complete_graph(4)), "--inject-fault")
    assert code == 1 and "FAIL decomposition" in out


def test_input_errors(capsys, tmp_path, write_graph):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n1 2\n1 2\n")
    code, _, err = run(capsys, "spectrum", str(bad), "-k", "1")
    assert code == 2 and "duplicate" in err
    bad.write_text("3 2\n1 2\n")
    assert run(capsys, "spectrum", str(bad), "-k", "1")[0] == 2
    assert run(capsys, "spectrum", str(tmp_path / "missing.txt"), "-k", "1")[0] == 2


def test_size_cap_exit(capsys, monkeypatch, write_graph):
    monkeypatch.setenv("HEISENSPEC_CAP", "5")
    code, _, err = run(capsys, "spectrum", write_graph(complete_graph(4)), "-k", "2")
    assert code == 3 and "cap" in err
    monkeypatch.delenv("HEISENSPEC_CAP")
    assert run(capsys, "validate", write_graph(path_graph(9)))[0] == 3
