"""Machine-readable bound reports: JSON and CSV.

Infinity is written as the string ``"inf"``; a bound that does not apply
is ``null`` with a reason alongside.  Vertex labels are 1-indexed.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

from .graph import Graph, connected_components


def _num_out(x):
    if x is None:
        return None
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _num_in(x):
    if x == "inf":
        return math.inf
    if x == "-inf":
        return -math.inf
    return x


@dataclass
class GraphInfo:
    n: int
    m: int
    b: int
    beta: int
    components: int

    @classmethod
    def of(cls, G: Graph) -> "GraphInfo":
        degs = G.degrees
        return cls(G.n, G.m, min(degs, default=0), max(degs, default=0), len(connected_components(G)))


@dataclass
class DiameterInfo:
    d: float | int  # math.inf when the witness sets are mutually unreachable
    trials: int
    seed: int
    witness: list[list[int]]


@dataclass
class FitInfo:
    delta: float
    c: float
    certified: bool
    a_k: float | None = None


@dataclass
class BoundRow:
    k: int
    j: int
    lower: float | None = None
    lower_reason: str | None = None
    upper: float | None = None
    upper_note: str | None = None
    exact: float | None = None
    diameter: DiameterInfo | None = None
    fit: FitInfo | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("lower", "upper", "exact"):
            out[key] = _num_out(out[key])
        if out["diameter"] is not None:
            out["diameter"]["d"] = _num_out(out["diameter"]["d"])
        if out["fit"] is not None:
            out["fit"]["delta"] = _num_out(out["fit"]["delta"])
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "BoundRow":
        data = dict(data)
        for key in ("lower", "upper", "exact"):
            data[key] = _num_in(data.get(key))
        if data.get("diameter") is not None:
            dia = dict(data["diameter"])
            dia["d"] = _num_in(dia["d"])
            data["diameter"] = DiameterInfo(**dia)
        if data.get("fit") is not None:
            fit = dict(data["fit"])
            fit["delta"] = _num_in(fit["delta"])
            data["fit"] = FitInfo(**fit)
        return cls(**data)


@dataclass
class BoundReport:
    command: str
    graph: GraphInfo
    rows: list[BoundRow] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"command": self.command, "graph": asdict(self.graph), "rows": [r.to_dict() for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "BoundReport":
        return cls(data["command"], GraphInfo(**data["graph"]), [BoundRow.from_dict(r) for r in data["rows"]])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "BoundReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        cols = [
            "k", "j", "lower", "lower_reason", "upper", "upper_note", "exact",
            "d", "trials", "seed", "witness", "delta", "c", "a_k", "certified",
        ]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.rows:
            d = r.to_dict()
            dia = d["diameter"] or {}
            fit = d["fit"] or {}
            witness = ";".join(" ".join(map(str, X)) for X in dia.get("witness", []))
            w.writerow([
                r.k, r.j, d["lower"], d["lower_reason"], d["upper"], d["upper_note"], d["exact"],
                dia.get("d"), dia.get("trials"), dia.get("seed"), witness,
                fit.get("delta"), fit.get("c"), fit.get("a_k"), fit.get("certified"),
            ])
        return buf.getvalue()

    def violations(self, tol: float = 1e-9) -> list[BoundRow]:
        """Rows where an oracle value falls outside its bounds."""
        bad = []
        for r in self.rows:
            if r.exact is None:
                continue
            if r.lower is not None and r.lower > r.exact + tol:
                bad.append(r)
            elif r.upper is not None and r.upper < r.exact - tol:
                bad.append(r)
        return bad
