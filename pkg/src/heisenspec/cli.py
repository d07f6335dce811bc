"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from math import comb

from .diameter import DEFAULT_TRIALS, upper_bound_lambda
from .errors import ConvergenceError, GraphValidationError, HeisenspecError, ParseError, SizeCapError
from .graph import INF, Graph, all_pairs_distances, read_graph
from .isoperimetry import EIP_MAX_VERTICES, eip_bruteforce, eip_sampled, family_constant_detail, iso_fit
from .lower import lower_bound_lambda_Lk
from .report import BoundReport, BoundRow, DiameterInfo, FitInfo, GraphInfo
from .spectral import eigenvalues
from .symprod import laplacian_Lk, token_edge_count
from .validate import DEFAULT_MAX_N, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
#: largest block for which bound reports also carry the oracle eigenvalue
ORACLE_MAX = 256


def _fmt(x: float) -> str:
    x = round(float(x), 9)
    return f"{x + 0.0:.10g}"


def _parse_list(text: str, cast=int) -> list:
    return [cast(t) for t in text.replace(",", " ").split()]


def _parse_delta(t: str) -> float:
    return math.inf if t.lower() in ("inf", "infinity") else float(t)


def _j_values(spec: str, N: int) -> list[int]:
    if spec == "all":
        return list(range(1, N))
    return _parse_list(spec)


class _Oracle:
    """Per-k spectra, computed lazily and only under :data:`ORACLE_MAX`."""

    def __init__(self, G: Graph, enabled: bool):
        self.G, self.enabled, self._cache = G, enabled, {}

    def value(self, k: int, j: int) -> float | None:
        if not self.enabled or comb(self.G.n, k) > ORACLE_MAX:
            return None
        if k not in self._cache:
            self._cache[k] = eigenvalues(laplacian_Lk(self.G, k)).eigenvalues
        spec = self._cache[k]
        return float(spec[j]) if j < len(spec) else None


def _emit(report: BoundReport, fmt: str) -> None:
    sys.stdout.write(report.to_csv() if fmt == "csv" else report.to_json() + "\n")


def cmd_spectrum(args) -> int:
    G = read_graph(args.graph)
    spec = eigenvalues(laplacian_Lk(G, args.k)).eigenvalues
    if args.format == "json":
        import json

        print(json.dumps({"k": args.k, "eigenvalues": [float(_fmt(x)) for x in spec]}))
    elif args.format == "csv":
        print("index,eigenvalue")
        for i, x in enumerate(spec):
            print(f"{i},{_fmt(x)}")
    else:
        print(" ".join(_fmt(x) for x in spec))
    return EXIT_OK


def cmd_upper(args) -> int:
    G = read_graph(args.graph)
    D = all_pairs_distances(G)
    oracle = _Oracle(G, not args.no_exact)
    report = BoundReport("upper", GraphInfo.of(G))
    for k in _parse_list(args.k):
        for j in _j_values(args.j, comb(G.n, k)):
            rec = upper_bound_lambda(
                G, k, j, trials=args.trials, seed=args.seed,
                exponent="pseudocode" if args.pseudocode_exponent else "certified",
                refine_mu=args.refine_mu, D=D,
            )
            est = rec.estimate
            dia = DiameterInfo(
                math.inf if est.d is INF else est.d, est.trials, est.seed,
                [[v + 1 for v in X] for X in est.witness],
            )
            report.rows.append(BoundRow(
                k, j, upper=rec.bound, upper_note=rec.note or None,
                exact=oracle.value(k, j), diameter=dia,
            ))
    _emit(report, args.format)
    return EXIT_OK


def cmd_lower(args) -> int:
    G = read_graph(args.graph)
    if args.sample is None and G.n > EIP_MAX_VERTICES:
        raise SizeCapError(f"exact profiles need n <= {EIP_MAX_VERTICES}; pass --sample")
    profile = eip_bruteforce(G) if args.sample is None else eip_sampled(G, args.sample, args.seed)
    oracle = _Oracle(G, not args.no_exact)
    report = BoundReport("lower", GraphInfo.of(G))
    for delta in _parse_list(args.delta_grid, _parse_delta):
        fit = iso_fit(profile, delta)
        for k in _parse_list(args.k):
            fam = family_constant_detail(G, k, delta, args.sample, args.seed)
            edges = token_edge_count(G, k) if args.exact_edges else None
            for j in _j_values(args.j, comb(G.n, k)):
                rec = lower_bound_lambda_Lk(G, k, j, fam.value, delta, fit, edges=edges)
                report.rows.append(BoundRow(
                    k, j, lower=rec.bound, lower_reason=rec.reason or None,
                    exact=oracle.value(k, j),
                    fit=FitInfo(delta, fit.c, fit.certified and fam.certified, fam.value),
                ))
    _emit(report, args.format)
    return EXIT_OK


def cmd_validate(args) -> int:
    G = read_graph(args.graph)
    if G.n > args.max_n:
        raise SizeCapError(f"validation suites limited to n <= {args.max_n}, got {G.n}")
    failed = False
    for res in run_suites(G, inject_fault=args.inject_fault, seed=args.seed):
        status = "skip" if res.skipped else ("pass" if res.passed else "FAIL")
        print(f"{status:4} {res.name}" + (f"  ({res.detail})" if res.detail else ""))
        failed |= not res.passed
    if failed:
        print("validation failed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heisenspec", description="Spectral bounds for Heisenberg Hamiltonians on graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="edge-list file: header 'n m', then m lines 'u v' (1-indexed)")
    common.add_argument("--threads", type=int, default=os.cpu_count(), help="worker threads (accepted; computation is serial)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of L_k")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_spectrum)

    def report_opts(p):
        p.add_argument("-k", default="1", help="comma-separated k values")
        p.add_argument("-j", default="1", help="comma-separated j values, or 'all'")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--no-exact", action="store_true", help="skip oracle eigenvalues")

    p = sub.add_parser("upper", parents=[common], help="diameter-based upper bounds")
    report_opts(p)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--pseudocode-exponent", action="store_true", help="use N^(1/d); not a certified bound")
    p.add_argument("--refine-mu", action="store_true", help="k=1: use the two largest degrees for mu")
    p.set_defaults(func=cmd_upper)

    p = sub.add_parser("lower", parents=[common], help="isoperimetric lower bounds")
    report_opts(p)
    p.add_argument("--delta-grid", default="3", help="comma-separated dimensions (use 'inf' for infinity)")
    p.add_argument("--sample", type=int, default=None, help="sample profiles and families instead of enumerating")
    p.add_argument("--exact-edges", action="store_true", help="use the exact token-graph edge count")
    p.set_defaults(func=cmd_lower)

    p = sub.add_parser("validate", parents=[common], help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphValidationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except HeisenspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
