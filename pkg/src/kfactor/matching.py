"""Maximum matching in general graphs, plus an exhaustive reference search.

The augmenting-path search is the classic O(n^3) blossom contraction scheme:
BFS from an exposed vertex, rebasing the vertices of every odd cycle found
onto the cycle's base until an exposed vertex is reached. Vertices are
scanned in ascending index everywhere (exposed-vertex selection, neighbor
order), so the returned matching is reproducible.

``brute_force_max_matching_size`` is the independent oracle: a memoized
exhaustive search over which vertices get matched, guarded to n <= 12.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, stored as (u, v) pairs with u < v."""

    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered_vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching; the size is unique, the edge set is
    the deterministic one produced by ascending-index scanning."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    # Cheap deterministic greedy seed; the augmenting search fixes the rest.
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = _augmenting_path(nbrs, match, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
    edges = frozenset((v, match[v]) for v in range(n) if match[v] > v)
    return Matching(edges=edges)


def _augmenting_path(
    nbrs: list[list[int]], match: list[int], root: int
) -> tuple[int, list[int]]:
    """BFS with blossom contraction from the exposed ``root``.

    Returns the far endpoint of an augmenting path together with the parent
    links needed to walk it back, or (-1, parents) when none exists.
    """
    n = len(nbrs)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_cycle(v: int, anchor: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != anchor:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # Odd cycle: contract it by rebasing its vertices.
                anchor = lowest_common_base(v, to)
                in_blossom = [False] * n
                mark_cycle(v, anchor, to, in_blossom)
                mark_cycle(to, anchor, v, in_blossom)
                for u in range(n):
                    if in_blossom[base[u]]:
                        base[u] = anchor
                        if not used[u]:
                            used[u] = True
                            queue.append(u)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def has_perfect_matching(g: Graph) -> bool:
    """True iff a matching covers every vertex. Odd orders short-circuit to
    False; the order-0 graph is vacuously matchable."""
    if g.n % 2 == 1:
        return False
    return max_matching(g).size == g.n // 2


def brute_force_max_matching_size(g: Graph) -> int:
    """Maximum matching size by exhaustive search, guarded to n <= 12."""
    if g.n > 12:
        raise ValueError("exhaustive matching search is limited to n <= 12")
    rows = g.rows()

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if free == 0:
            return 0
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        out = best(rest)  # leave v unmatched
        cand = rows[v] & rest
        while cand:
            lu = cand & -cand
            out = max(out, 1 + best(rest ^ lu))
            cand ^= lu
        return out

    result = best((1 << g.n) - 1)
    best.cache_clear()
    return result
