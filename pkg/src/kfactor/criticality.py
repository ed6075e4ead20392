"""Deciding k-factor-criticality two independent ways, with certificates.

A graph is k-factor-critical when deleting any k vertices leaves a graph
with a perfect matching. The definition decider enumerates the k-subsets
directly and runs the matching algorithm on each remainder. The second
decider uses Favaron's odd-component characterization: for n = k (mod 2),
the graph is k-factor-critical iff o(G - D) <= |D| - k for every vertex
subset D with |D| >= k.

Both deciders are stateless, enumerate subsets by increasing size then
lexicographic order, and emit a re-checkable certificate on every negative
verdict: either the first violating set D with its odd-component count, or
the first removed k-set whose remainder has no perfect matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, component_masks, delete_vertices, vertex_connectivity
from .matching import has_perfect_matching

VIOLATING_SET = "violating_set"
UNMATCHED_REMOVAL = "unmatched_removal"

# Subset enumeration over 2^n sets is the cost driver; past this the deciders
# refuse rather than silently stall.
DECIDER_MAX_ORDER = 16


@dataclass(frozen=True)
class Certificate:
    """Checkable witness for a negative verdict.

    ``violating_set``: witness D with o(G - D) = odd_components > |D| - k.
    ``unmatched_removal``: witness Q, |Q| = k, where G - Q has no perfect
    matching.
    """

    kind: str
    witness_set: tuple[int, ...]
    odd_components: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (VIOLATING_SET, UNMATCHED_REMOVAL):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if (self.kind == VIOLATING_SET) != (self.odd_components is not None):
            raise ValueError("odd_components goes with violating_set certificates")


@dataclass(frozen=True)
class CriticalityVerdict:
    is_critical: bool
    k: int
    certificate: Certificate | None = None

    def __post_init__(self) -> None:
        if self.is_critical == (self.certificate is not None):
            raise ValueError("certificate must be present exactly on negative verdicts")


@dataclass(frozen=True)
class HypothesisReport:
    """Which of the threshold theorem's hypotheses the graph satisfies."""

    parity_ok: bool
    connectivity_ok: bool
    order_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.parity_ok and self.connectivity_ok and self.order_ok


def _guard(g: Graph, k: int) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g.n > DECIDER_MAX_ORDER:
        raise ValueError(
            f"criticality deciders are limited to n <= {DECIDER_MAX_ORDER}"
        )
    if g.n < k:
        raise ValueError(f"order {g.n} is smaller than k={k}")
    if (g.n - k) % 2 != 0:
        raise ValueError(f"order {g.n} and k={k} must have equal parity")


def is_k_factor_critical_by_definition(g: Graph, k: int) -> CriticalityVerdict:
    """Check every k-subset removal for a perfect matching in the remainder.

    On failure the certificate carries the lexicographically first failing
    removal set. k = 0 reduces to a single perfect-matching test.
    """
    _guard(g, k)
    if k == 0:
        if has_perfect_matching(g):
            return CriticalityVerdict(is_critical=True, k=0)
        cert = Certificate(kind=UNMATCHED_REMOVAL, witness_set=())
        return CriticalityVerdict(is_critical=False, k=0, certificate=cert)
    for removed in combinations(range(g.n), k):
        remainder, _ = delete_vertices(g, removed)
        if not has_perfect_matching(remainder):
            cert = Certificate(kind=UNMATCHED_REMOVAL, witness_set=removed)
            return CriticalityVerdict(is_critical=False, k=k, certificate=cert)
    return CriticalityVerdict(is_critical=True, k=k)


def is_k_factor_critical_by_favaron(g: Graph, k: int) -> CriticalityVerdict:
    """Check o(G - D) <= |D| - k over all D with |D| >= k.

    Subsets are scanned by increasing size, lexicographic within a size, so
    the reported violating set is the globally first one in that order.
    Once |D| - k >= n - |D| the remaining vertices cannot supply enough odd
    components to violate the bound, so larger sizes are skipped.
    """
    _guard(g, k)
    n = g.n
    rows = g.rows()
    full = (1 << n) - 1
    for size in range(k, n + 1):
        if size - k >= n - size:
            break
        for subset in combinations(range(n), size):
            removed_mask = 0
            for v in subset:
                removed_mask |= 1 << v
            odd = sum(
                1
                for m in component_masks(rows, full & ~removed_mask)
                if m.bit_count() % 2 == 1
            )
            if odd > size - k:
                cert = Certificate(
                    kind=VIOLATING_SET, witness_set=subset, odd_components=odd
                )
                return CriticalityVerdict(is_critical=False, k=k, certificate=cert)
    return CriticalityVerdict(is_critical=True, k=k)


def check_theorem_hypotheses(g: Graph, k: int) -> HypothesisReport:
    """Screen the threshold theorem's hypotheses: n = k (mod 2), vertex
    connectivity at least k + 1, and order at least k + 4."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return HypothesisReport(
        parity_ok=(g.n - k) % 2 == 0,
        connectivity_ok=vertex_connectivity(g) >= k + 1,
        order_ok=g.n >= k + 4,
    )
