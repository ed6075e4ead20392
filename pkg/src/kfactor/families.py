"""Threshold evaluation and the extremal graph families that attain it.

The spectral threshold for k-factor-criticality splits into three regimes
by the order n (with n = k mod 2, n >= k + 4):

- n = k + 6: closed form (k + 1 + sqrt(k^2 + 18k + 33)) / 2, attained by
  K_{k+2} v (4K_1);
- n = k + 8 with k >= 1: closed form (k + 2 + sqrt(k^2 + 24k + 64)) / 2,
  attained by K_{k+3} v (5K_1);
- every other order, including (k, n) = (0, 8): the largest root of
  x^3 - (n-4) x^2 - (n+2k-1) x + 2 (k+1) (n-k-4), attained by
  K_{n-k-3} v K_{k+1} v (2K_1).

Each constructor returns the graph together with its defining block
partition, which is equitable by construction, so quotient checks never
have to rediscover it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, complete_graph, disjoint_union, empty_graph, sequential_join
from .spectral import Partition, Polynomial, largest_real_root

REGIME_GENERAL = "general_cubic"
REGIME_K_PLUS_6 = "n_eq_k_plus_6"
REGIME_K_PLUS_8 = "n_eq_k_plus_8"


@dataclass(frozen=True)
class ThresholdSpec:
    """The threshold for a given (n, k): which regime applies, its value,
    and the polynomial the value is a root of."""

    n: int
    k: int
    regime: str
    value: float
    defining_polynomial: Polynomial


@dataclass(frozen=True)
class PartitionedGraph:
    """A constructed family member carrying its defining block partition."""

    graph: Graph
    partition: Partition


def cubic_threshold_polynomial(n: int, k: int) -> Polynomial:
    """x^3 - (n-4) x^2 - (n+2k-1) x + 2 (k+1) (n-k-4), exact coefficients."""
    return Polynomial((1, -(n - 4), -(n + 2 * k - 1), 2 * (k + 1) * (n - k - 4)))


def _validate_order(n: int, k: int) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < k + 4:
        raise ValueError(f"order n={n} must be at least k+4={k + 4}")
    if (n - k) % 2 != 0:
        raise ValueError(f"order n={n} and k={k} must have equal parity")


def threshold(n: int, k: int) -> ThresholdSpec:
    """Regime dispatch and threshold value for (n, k).

    The (k, n) = (0, 8) pair routes to the general cubic, not to the
    n = k + 8 closed form, which only applies for k >= 1.
    """
    _validate_order(n, k)
    if n == k + 6:
        poly = Polynomial((1, -(k + 1), -4 * (k + 2)))
        value = (k + 1 + math.sqrt(k * k + 18 * k + 33)) / 2
        return ThresholdSpec(n=n, k=k, regime=REGIME_K_PLUS_6, value=value,
                             defining_polynomial=poly)
    if n == k + 8 and k >= 1:
        poly = Polynomial((1, -(k + 2), -5 * (k + 3)))
        value = (k + 2 + math.sqrt(k * k + 24 * k + 64)) / 2
        return ThresholdSpec(n=n, k=k, regime=REGIME_K_PLUS_8, value=value,
                             defining_polynomial=poly)
    poly = cubic_threshold_polynomial(n, k)
    value = largest_real_root(poly, tol=1e-13)
    return ThresholdSpec(n=n, k=k, regime=REGIME_GENERAL, value=value,
                         defining_polynomial=poly)


def theta_k_plus_4(k: int) -> float:
    """Closed form of the threshold at the minimum order n = k + 4."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k + math.sqrt(k * k + 12 * k + 12)) / 2


def extremal_general(n: int, k: int) -> PartitionedGraph:
    """K_{n-k-3} v K_{k+1} v (2K_1), the general-regime extremal graph."""
    _validate_order(n, k)
    parts = [complete_graph(n - k - 3), complete_graph(k + 1), empty_graph(2)]
    g, blocks = sequential_join(parts)
    return PartitionedGraph(graph=g, partition=Partition(blocks))


def extremal_k_plus_6(k: int) -> PartitionedGraph:
    """K_{k+2} v (4K_1), the n = k + 6 extremal graph."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    g, blocks = sequential_join([complete_graph(k + 2), empty_graph(4)])
    return PartitionedGraph(graph=g, partition=Partition(blocks))


def extremal_k_plus_8(k: int) -> PartitionedGraph:
    """K_{k+3} v (5K_1), the n = k + 8 extremal graph.

    Constructible for any k >= 0; note the threshold regime only cites it
    for k >= 1, while (k, n) = (0, 8) belongs to the general cubic.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    g, blocks = sequential_join([complete_graph(k + 3), empty_graph(5)])
    return PartitionedGraph(graph=g, partition=Partition(blocks))


def proof_case_graph(d: int, k: int, n1: int) -> PartitionedGraph:
    """K_d v (K_{n1} u (d-k+1) K_1), the shape the maximizer argument lands on.

    The partition keeps three blocks: the K_d hub, the K_{n1} component, and
    all the singletons as one block. n1 must be odd (the joined components
    are odd by construction) and d must be at least k + 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if d < k + 1:
        raise ValueError(f"d={d} must be at least k+1={k + 1}")
    if n1 < 1 or n1 % 2 == 0:
        raise ValueError(f"largest component order n1={n1} must be odd and positive")
    tail, tail_blocks = disjoint_union(
        [complete_graph(n1), empty_graph(d - k + 1)]
    )
    g, blocks = sequential_join([complete_graph(d), tail])
    hub = blocks[0]
    clique_block = [v + d for v in tail_blocks[0]]
    singleton_block = [v + d for v in tail_blocks[1]]
    return PartitionedGraph(
        graph=g, partition=Partition([hub, clique_block, singleton_block])
    )
