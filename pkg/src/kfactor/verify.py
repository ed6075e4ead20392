"""Exhaustive small-order verification of the spectral threshold theorem.

The harness enumerates every connected graph up to isomorphism at small
orders (or consumes an external graph6 stream), filters by the theorem's
hypotheses, compares the spectral radius against the regime threshold, and
records the implication "above threshold implies k-factor-critical" per
graph. The theorem holds on a sweep exactly when the counterexample list
comes back empty; the sharpness side shows up as an at-threshold witness
sitting within 1e-9 of the bound.

Builtin enumeration is labeled-exhaustive over all 2^C(n,2) adjacency
masks, deduplicated by canonical form (the minimum adjacency bit-string
over all vertex permutations). Scanning masks in ascending order makes the
first unseen connected mask of each isomorphism class exactly its canonical
form, and the class orbit is then marked seen in one vectorized pass. That
is honest and fast to n = 7; larger orders come in as external streams.

Strict threshold comparison uses a +margin guard (default 1e-9): graphs
within the margin of the threshold are classified at-threshold, logged, and
excluded from counterexample logic, so float equality at the sharp bound
can never produce a false counterexample.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator

import numpy as np

from .criticality import (
    Certificate,
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
from .graphs import Graph, component_masks, vertex_connectivity
from .spectral import ASSERT_TOL, spectral_radius

SCHEMA_VERSION = "1"

BUILTIN_ENUMERATION = "builtin_enumeration"
EXTERNAL_STREAM = "external_stream"

BUILTIN_MAX_ORDER = 7
STREAM_MAX_ORDER = 16
DEFAULT_MARGIN = 1e-9

VERDICT_CRITICAL = "critical"
VERDICT_COUNTEREXAMPLE = "counterexample"
VERDICT_AT_THRESHOLD = "at_threshold"
VERDICT_BELOW = "below_threshold"
VERDICT_HYPOTHESIS_FAILED = "hypothesis_failed"


@dataclass(frozen=True)
class SweepConfig:
    n: int
    k: int
    source: str = BUILTIN_ENUMERATION
    threshold_margin: float = DEFAULT_MARGIN


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    rho: float
    threshold: float
    certificate: Certificate


@dataclass(frozen=True)
class NearThresholdRecord:
    """A graph pinned by its distance to the threshold. ``is_critical`` is
    None when criticality was not evaluated (below-threshold graphs)."""

    graph6: str
    rho: float
    distance: float
    is_critical: bool | None = None
    certificate: Certificate | None = None


@dataclass(frozen=True)
class SweepRow:
    graph6: str
    n: int
    kappa: int
    rho: float
    threshold: float
    verdict: str


@dataclass
class VerificationReport:
    config: SweepConfig
    threshold_value: float
    graphs_scanned: int = 0
    hypothesis_passed: int = 0
    above_threshold: int = 0
    critical_among_above: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    at_threshold: list[NearThresholdRecord] = field(default_factory=list)
    closest_above: NearThresholdRecord | None = None
    closest_below: NearThresholdRecord | None = None
    sharp_witness: NearThresholdRecord | None = None
    stream_errors: list[tuple[int, str]] = field(default_factory=list)
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def theorem_holds(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": {
                "n": self.config.n,
                "k": self.config.k,
                "source": self.config.source,
                "margin": repr(self.config.threshold_margin),
            },
            "threshold": repr(self.threshold_value),
            "totals": {
                "scanned": self.graphs_scanned,
                "hypothesis_passed": self.hypothesis_passed,
                "above_threshold": self.above_threshold,
                "critical": self.critical_among_above,
            },
            "counterexamples": [
                {
                    "graph6": c.graph6,
                    "rho": repr(c.rho),
                    "threshold": repr(c.threshold),
                    "certificate": _certificate_dict(c.certificate),
                }
                for c in self.counterexamples
            ],
            "at_threshold": [_near_dict(r) for r in self.at_threshold],
            "closest_above": _near_dict(self.closest_above),
            "closest_below": _near_dict(self.closest_below),
            "sharp_witness": _near_dict(self.sharp_witness),
            "stream_errors": [
                {"line": line, "message": message}
                for line, message in self.stream_errors
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


def _certificate_dict(cert: Certificate | None) -> dict | None:
    if cert is None:
        return None
    return {
        "kind": cert.kind,
        "witness": list(cert.witness_set),
        "odd_components": cert.odd_components,
    }


def _near_dict(record: NearThresholdRecord | None) -> dict | None:
    if record is None:
        return None
    return {
        "graph6": record.graph6,
        "rho": repr(record.rho),
        "distance": repr(record.distance),
        "is_critical": record.is_critical,
        "certificate": _certificate_dict(record.certificate),
    }


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n vertices, exactly once up to isomorphism.

    Graphs are yielded in ascending canonical-mask order, so the stream is
    deterministic. Guarded to n <= 7; larger orders should come from an
    external graph6 stream.
    """
    if n < 1:
        raise ValueError("enumeration needs at least one vertex")
    if n > BUILTIN_MAX_ORDER:
        raise ValueError(
            f"builtin enumeration is limited to n <= {BUILTIN_MAX_ORDER}; "
            "supply an external graph6 stream for larger orders"
        )
    yield from _connected_graphs(n)


@lru_cache(maxsize=None)
def _permutation_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.intp)


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph([0]),)
    m = n * (n - 1) // 2
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    perms = _permutation_array(n)
    iu = np.triu_indices(n, 1)
    weights = (np.int64(1) << np.arange(m, dtype=np.int64))
    seen = bytearray(1 << m)
    full = (1 << n) - 1
    out: list[Graph] = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        if component_masks(rows, full)[0] != full:
            continue
        adjacency = np.zeros((n, n), dtype=np.uint8)
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adjacency[i, j] = 1
                adjacency[j, i] = 1
        relabeled = adjacency[perms[:, :, None], perms[:, None, :]]
        orbit = relabeled[:, iu[0], iu[1]].astype(np.int64) @ weights
        for value in np.unique(orbit).tolist():
            seen[value] = 1
        out.append(Graph(rows))
    return tuple(out)


def canonical_form(g: Graph) -> int:
    """Minimum adjacency bit-string over all vertex permutations.

    Bit b of the result is the pair (i, j), i < j, in row-major order. Two
    graphs are isomorphic iff their canonical forms are equal. Guarded to
    n <= 8, where brute force over permutations is still cheap.
    """
    n = g.n
    if n > 8:
        raise ValueError("canonical forms are limited to n <= 8")
    if n <= 1:
        return 0
    perms = _permutation_array(n)
    iu = np.triu_indices(n, 1)
    m = n * (n - 1) // 2
    weights = (np.int64(1) << np.arange(m, dtype=np.int64))
    adjacency = np.zeros((n, n), dtype=np.uint8)
    for u, v in g.edges():
        adjacency[u, v] = 1
        adjacency[v, u] = 1
    relabeled = adjacency[perms[:, :, None], perms[:, None, :]]
    orbit = relabeled[:, iu[0], iu[1]].astype(np.int64) @ weights
    return int(orbit.min())


def _graphs_from_stream(
    stream: Iterable[str], n: int, errors: list[tuple[int, str]]
) -> Iterator[Graph]:
    for line_no, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            g = decode_graph6(text)
        except Graph6Error as exc:
            errors.append((line_no, str(exc)))
            continue
        if g.n != n:
            errors.append((line_no, f"graph has order {g.n}, sweep expects {n}"))
            continue
        yield g


def run_sweep(cfg: SweepConfig, stream: Iterable[str] | None = None) -> VerificationReport:
    """Scan graphs at (n, k), compare rho against the threshold, and record
    the criticality verdict of everything strictly above it.

    Builtin sweeps enumerate connected graphs up to isomorphism; external
    sweeps consume graph6 lines (malformed entries are reported with their
    line numbers and skipped). The report is deterministic: records are
    keyed to canonical enumeration order and sorted encodings.
    """
    n, k = cfg.n, cfg.k
    if k < 0:
        raise ValueError("k must be nonnegative")
    if (n - k) % 2 != 0:
        raise ValueError(f"order n={n} and k={k} must have equal parity")
    if n < k + 4:
        raise ValueError(f"order n={n} must be at least k+4={k + 4}")
    if cfg.source == BUILTIN_ENUMERATION:
        if n > BUILTIN_MAX_ORDER:
            raise ValueError(
                f"builtin sweeps are limited to n <= {BUILTIN_MAX_ORDER}; "
                "use an external stream"
            )
        graphs: Iterable[Graph] = enumerate_connected_graphs(n)
    elif cfg.source == EXTERNAL_STREAM:
        if n > STREAM_MAX_ORDER:
            raise ValueError(f"stream sweeps are limited to n <= {STREAM_MAX_ORDER}")
        if stream is None:
            raise ValueError("external_stream sweeps need a stream of graph6 lines")
    else:
        raise ValueError(f"unknown sweep source {cfg.source!r}")

    theta = threshold(n, k).value
    margin = cfg.threshold_margin
    report = VerificationReport(config=cfg, threshold_value=theta)
    if cfg.source == EXTERNAL_STREAM:
        graphs = _graphs_from_stream(stream, n, report.stream_errors)

    sharp_candidate: tuple[float, str, Graph] | None = None

    for g in graphs:
        report.graphs_scanned += 1
        kappa = vertex_connectivity(g)
        g6 = encode_graph6(g)
        if kappa < k + 1:
            report.rows.append(
                SweepRow(g6, n, kappa, spectral_radius(g), theta,
                         VERDICT_HYPOTHESIS_FAILED)
            )
            continue
        report.hypothesis_passed += 1
        rho = spectral_radius(g)
        diff = rho - theta
        if sharp_candidate is None or (abs(diff), g6) < sharp_candidate[:2]:
            sharp_candidate = (abs(diff), g6, g)
        if diff > margin:
            report.above_threshold += 1
            verdict = is_k_factor_critical_by_favaron(g, k)
            if verdict.is_critical:
                report.critical_among_above += 1
                row_verdict = VERDICT_CRITICAL
                record = NearThresholdRecord(
                    graph6=g6, rho=rho, distance=diff, is_critical=True
                )
                if report.closest_above is None or (
                    (record.distance, record.graph6)
                    < (report.closest_above.distance, report.closest_above.graph6)
                ):
                    report.closest_above = record
            else:
                row_verdict = VERDICT_COUNTEREXAMPLE
                report.counterexamples.append(
                    Counterexample(
                        graph6=g6, rho=rho, threshold=theta,
                        certificate=verdict.certificate,
                    )
                )
        elif diff >= -margin:
            row_verdict = VERDICT_AT_THRESHOLD
            verdict = is_k_factor_critical_by_favaron(g, k)
            report.at_threshold.append(
                NearThresholdRecord(
                    graph6=g6, rho=rho, distance=abs(diff),
                    is_critical=verdict.is_critical,
                    certificate=verdict.certificate,
                )
            )
        else:
            row_verdict = VERDICT_BELOW
            record = NearThresholdRecord(graph6=g6, rho=rho, distance=-diff)
            if report.closest_below is None or (
                (record.distance, record.graph6)
                < (report.closest_below.distance, report.closest_below.graph6)
            ):
                report.closest_below = record
        report.rows.append(SweepRow(g6, n, kappa, rho, theta, row_verdict))

    report.counterexamples.sort(key=lambda c: c.graph6)
    report.at_threshold.sort(key=lambda r: r.graph6)
    if sharp_candidate is not None:
        distance, g6, g = sharp_candidate
        verdict = is_k_factor_critical_by_favaron(g, k)
        report.sharp_witness = NearThresholdRecord(
            graph6=g6,
            rho=spectral_radius(g),
            distance=distance,
            is_critical=verdict.is_critical,
            certificate=verdict.certificate,
        )
    return report


@dataclass(frozen=True)
class SharpnessRecord:
    """Outcome of checking that the regime's extremal graph pins the bound:
    rho sits within 1e-9 of the threshold, the graph is not k-factor-critical
    (with certificate), and it satisfies the connectivity hypothesis."""

    n: int
    k: int
    regime: str
    graph6: str
    rho: float
    threshold: float
    distance: float
    rho_matches: bool
    is_non_critical: bool
    certificate: Certificate | None
    connectivity: int
    connectivity_ok: bool

    @property
    def passed(self) -> bool:
        return self.rho_matches and self.is_non_critical and self.connectivity_ok

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "k": self.k,
            "regime": self.regime,
            "graph6": self.graph6,
            "rho": repr(self.rho),
            "threshold": repr(self.threshold),
            "distance": repr(self.distance),
            "rho_matches": self.rho_matches,
            "is_non_critical": self.is_non_critical,
            "certificate": _certificate_dict(self.certificate),
            "connectivity": self.connectivity,
            "connectivity_ok": self.connectivity_ok,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


def verify_sharpness(n: int, k: int) -> SharpnessRecord:
    """Build the regime's extremal graph and check the three sharpness facts.

    Failures come back as structured findings in the record, not as raised
    exceptions; only invalid (n, k) inputs raise.
    """
    spec = threshold(n, k)
    if spec.regime == REGIME_K_PLUS_6:
        family = extremal_k_plus_6(k)
    elif spec.regime == REGIME_K_PLUS_8:
        family = extremal_k_plus_8(k)
    else:
        family = extremal_general(n, k)
    g = family.graph
    rho = spectral_radius(g)
    distance = abs(rho - spec.value)
    verdict = is_k_factor_critical_by_favaron(g, k)
    kappa = vertex_connectivity(g)
    return SharpnessRecord(
        n=n,
        k=k,
        regime=spec.regime,
        graph6=encode_graph6(g),
        rho=rho,
        threshold=spec.value,
        distance=distance,
        rho_matches=distance < ASSERT_TOL,
        is_non_critical=not verdict.is_critical,
        certificate=verdict.certificate,
        connectivity=kappa,
        connectivity_ok=kappa >= k + 1,
    )
