"""Command-line surface: graph input, threshold and family queries,
criticality checks, sweeps and sharpness records.

Graphs come in as graph6 text or as edge-list files (a leading "n <count>"
line, then "u v" lines, "#" comments). Real numbers print with 10
significant digits; report JSON stores full-precision decimal strings.
Exit codes: 0 success / theorem holds, 1 counterexample or failed
sharpness check, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .criticality import (
    Certificate,
    is_k_factor_critical_by_definition,
    is_k_factor_critical_by_favaron,
)
from .families import (
    REGIME_K_PLUS_6,
    REGIME_K_PLUS_8,
    extremal_general,
    extremal_k_plus_6,
    extremal_k_plus_8,
    threshold,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import Graph
from .spectral import spectral_radius
from .verify import (
    BUILTIN_ENUMERATION,
    DEFAULT_MARGIN,
    EXTERNAL_STREAM,
    SweepConfig,
    run_sweep,
    verify_sharpness,
)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: optional '#' comments, a leading
    'n <count>' line, then 'u v' lines with 0-based endpoints."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ValueError(
                    f"line {line_no}: expected the order line 'n <count>' first"
                )
            try:
                n = int(tokens[1])
            except ValueError:
                raise ValueError(f"line {line_no}: bad vertex count {tokens[1]!r}")
            if n <= 0:
                raise ValueError(f"line {line_no}: order must be positive")
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {line_no}: expected 'u v'")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {line_no}: endpoints must be integers")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {line_no}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"line {line_no}: loops are not allowed")
        edges.append((u, v))
    if n is None:
        raise ValueError("missing the order line 'n <count>'")
    return Graph.from_edges(n, edges)


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        return decode_graph6(args.graph6)
    return parse_edge_list(Path(args.edges_file).read_text())


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", help="graph6 text of the input graph")
    group.add_argument("--edges-file", help="path to an edge-list file")


def _certificate_text(cert: Certificate | None) -> str:
    if cert is None:
        return "none"
    witness = "{" + ", ".join(map(str, cert.witness_set)) + "}"
    if cert.odd_components is not None:
        return f"{cert.kind}: D={witness}, odd components {cert.odd_components}"
    return f"{cert.kind}: Q={witness} leaves no perfect matching"


def _certificate_json(cert: Certificate | None) -> dict | None:
    if cert is None:
        return None
    return {
        "kind": cert.kind,
        "witness": list(cert.witness_set),
        "odd_components": cert.odd_components,
    }


def _cmd_radius(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    rho = spectral_radius(g)
    if args.format == "json":
        print(json.dumps({"n": g.n, "rho": rho}))
    else:
        print(_fmt(rho))
    return 0


def _cmd_critical(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    by_def = is_k_factor_critical_by_definition(g, args.k)
    by_fav = is_k_factor_critical_by_favaron(g, args.k)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": g.n,
                    "k": args.k,
                    "by_definition": {
                        "is_critical": by_def.is_critical,
                        "certificate": _certificate_json(by_def.certificate),
                    },
                    "by_favaron": {
                        "is_critical": by_fav.is_critical,
                        "certificate": _certificate_json(by_fav.certificate),
                    },
                    "agree": by_def.is_critical == by_fav.is_critical,
                }
            )
        )
    else:
        print(f"by definition: {'critical' if by_def.is_critical else 'not critical'}"
              f" ({_certificate_text(by_def.certificate)})")
        print(f"by odd-component criterion: "
              f"{'critical' if by_fav.is_critical else 'not critical'}"
              f" ({_certificate_text(by_fav.certificate)})")
        print(f"agree: {str(by_def.is_critical == by_fav.is_critical).lower()}")
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    spec = threshold(args.n, args.k)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": spec.n,
                    "k": spec.k,
                    "regime": spec.regime,
                    "value": spec.value,
                    "defining_polynomial": [
                        int(c) for c in spec.defining_polynomial.coefficients
                    ],
                }
            )
        )
    else:
        print(f"regime: {spec.regime}")
        print(f"value: {_fmt(spec.value)}")
        coeffs = ", ".join(str(int(c)) for c in spec.defining_polynomial.coefficients)
        print(f"defining polynomial (degree-descending): [{coeffs}]")
    return 0


def _cmd_extremal(args: argparse.Namespace) -> int:
    spec = threshold(args.n, args.k)
    if spec.regime == REGIME_K_PLUS_6:
        family = extremal_k_plus_6(args.k)
    elif spec.regime == REGIME_K_PLUS_8:
        family = extremal_k_plus_8(args.k)
    else:
        family = extremal_general(args.n, args.k)
    print(encode_graph6(family.graph))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    source = EXTERNAL_STREAM if args.stream else BUILTIN_ENUMERATION
    cfg = SweepConfig(
        n=args.n, k=args.k, source=source, threshold_margin=args.margin
    )
    if args.stream:
        with open(args.stream) as handle:
            report = run_sweep(cfg, stream=handle)
    else:
        report = run_sweep(cfg)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(
            f"scanned {report.graphs_scanned} graphs; "
            f"{len(report.counterexamples)} counterexamples; report: {args.out}"
        )
    else:
        print(text)
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["graph6", "n", "kappa", "rho", "threshold", "verdict"])
            for row in report.rows:
                writer.writerow(
                    [row.graph6, row.n, row.kappa, repr(row.rho),
                     repr(row.threshold), row.verdict]
                )
    return 0 if report.theorem_holds else 1


def _cmd_sharpness(args: argparse.Namespace) -> int:
    record = verify_sharpness(args.n, args.k)
    if args.format == "json":
        print(record.to_json())
    else:
        print(f"regime: {record.regime}")
        print(f"graph6: {record.graph6}")
        print(f"rho: {_fmt(record.rho)}  threshold: {_fmt(record.threshold)}  "
              f"distance: {record.distance:.3e}")
        print(f"rho matches threshold: {record.rho_matches}")
        print(f"not {record.k}-factor-critical: {record.is_non_critical} "
              f"({_certificate_text(record.certificate)})")
        print(f"connectivity {record.connectivity} >= {record.k + 1}: "
              f"{record.connectivity_ok}")
        print(f"passed: {record.passed}")
    return 0 if record.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfactor",
        description=(
            "Spectral-radius thresholds, extremal families and exhaustive "
            "verification for k-factor-critical graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="print the adjacency spectral radius")
    _add_graph_input(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("critical", help="run both k-factor-criticality deciders")
    _add_graph_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_critical)

    p = sub.add_parser("threshold", help="print the threshold for (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("extremal", help="print the regime's extremal graph (graph6)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("sweep", help="exhaustively verify the threshold at (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--stream", help="graph6 file to sweep instead of builtin enumeration")
    p.add_argument("--margin", type=float, default=DEFAULT_MARGIN)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--csv", help="also write one CSV row per analyzed graph")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("sharpness", help="check the extremal graph pins the bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_sharpness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
