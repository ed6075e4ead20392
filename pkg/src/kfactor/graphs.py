"""Simple undirected graphs over dense bitset adjacency.

Vertices are always labeled 0..n-1 and each vertex stores its neighborhood
as one Python int used as a bitmask. That keeps graphs immutable, hashable
and cheap to slice at the orders this package targets (n <= 64), and it is
all the combinatorial machinery the rest of the package needs: component
structure, odd-component counts, joins, vertex deletion, connectivity and
degrees.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Hard ceiling on the supported order; everything here is desk scale.
MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is the neighborhood of ``v`` as a bitmask. Construction
    validates symmetry and the absence of loops, so every reachable value
    is a simple graph.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[int]):
        rows = tuple(rows)
        n = len(rows)
        if n > MAX_ORDER:
            raise ValueError(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self._rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph of order ``n`` from an iterable of vertex pairs."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} rejected")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    @property
    def n(self) -> int:
        return len(self._rows)

    def rows(self) -> tuple[int, ...]:
        """All neighborhood bitmasks, indexed by vertex."""
        return self._rows

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._rows):
            raise ValueError(f"vertex {v} out of range for order {len(self._rows)}")

    def row(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask."""
        self._check_vertex(v)
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in ascending order."""
        self._check_vertex(v)
        return list(_bits(self._rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in ascending order."""
        out = []
        for u, row in enumerate(self._rows):
            out.extend((u, v) for v in _bits(row) if v > u)
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components of a graph: the blocks, how many there are, and
    how many have odd cardinality."""

    blocks: tuple[tuple[int, ...], ...]
    odd_count: int
    total_count: int


def complete_graph(n: int) -> Graph:
    """The complete graph on n vertices."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    full = (1 << n) - 1
    return Graph([full ^ (1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    """n isolated vertices."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return Graph([0] * n)


def disjoint_union(parts: Sequence[Graph]) -> tuple[Graph, list[list[int]]]:
    """Disjoint union of the parts, relabeled consecutively.

    Returns the union together with the list of vertex blocks, one per part,
    in the new labeling.
    """
    rows: list[int] = []
    blocks: list[list[int]] = []
    offset = 0
    for part in parts:
        blocks.append(list(range(offset, offset + part.n)))
        rows.extend(row << offset for row in part.rows())
        offset += part.n
    return Graph(rows), blocks


def sequential_join(parts: Sequence[Graph]) -> tuple[Graph, list[list[int]]]:
    """Union of the parts plus all edges between consecutive parts.

    Non-consecutive parts are not joined. Returns the join together with the
    per-part vertex blocks in the new labeling.
    """
    if not parts:
        raise ValueError("sequential join needs at least one part")
    g, blocks = disjoint_union(parts)
    rows = list(g.rows())
    for left, right in zip(blocks, blocks[1:]):
        left_mask = sum(1 << v for v in left)
        right_mask = sum(1 << v for v in right)
        for v in left:
            rows[v] |= right_mask
        for v in right:
            rows[v] |= left_mask
    return Graph(rows), blocks


def delete_vertices(g: Graph, remove: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on the complement of ``remove``.

    Survivors are relabeled to 0..m-1 in ascending original order. Returns
    the subgraph and the list mapping each new label to its original one, so
    certificates can be translated back.
    """
    removed = set(remove)
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
    survivors = [v for v in range(g.n) if v not in removed]
    position = {old: new for new, old in enumerate(survivors)}
    rows = []
    for old in survivors:
        row = 0
        for u in _bits(g.row(old)):
            if u not in removed:
                row |= 1 << position[u]
        rows.append(row)
    return Graph(rows), survivors


def component_masks(rows: Sequence[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced on the ``alive`` bitmask.

    Low-level helper shared by the component decomposition and the subset
    scans in the criticality deciders. Components are returned as bitmasks
    in ascending order of their smallest vertex.
    """
    out = []
    rest = alive
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for u in _bits(frontier):
                reach |= rows[u]
            frontier = reach & alive & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> ComponentDecomposition:
    """Partition into maximal connected blocks, with the odd-block count."""
    masks = component_masks(g.rows(), (1 << g.n) - 1)
    blocks = tuple(tuple(_bits(m)) for m in masks)
    odd = sum(1 for m in masks if m.bit_count() % 2 == 1)
    return ComponentDecomposition(blocks=blocks, odd_count=odd, total_count=len(blocks))


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of ``v``."""
    return g.row(v).bit_count()


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity, with the complete-graph convention kappa = n - 1.

    Computed as the minimum over all non-adjacent pairs of the maximum
    number of internally vertex-disjoint paths between them (max-flow with
    unit vertex capacities). Disconnected graphs have connectivity 0.
    """
    n = g.n
    if n <= 1:
        return 0
    if components(g).total_count > 1:
        return 0
    best = n - 1
    for u in range(n):
        for w in range(u + 1, n):
            if not g.has_edge(u, w):
                best = min(best, _max_vertex_flow(g, u, w, best))
    return best


def _max_vertex_flow(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Max vertex-disjoint s-t paths via unit-capacity max-flow.

    Each vertex splits into an in-node (2v) and an out-node (2v + 1) joined
    with capacity 1; the terminals are uncapacitated. Stops early once the
    flow reaches ``cutoff`` since callers only need the minimum.
    """
    n = g.n
    inf = n
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = 0
            adj[a].append(b)
            adj[b].append(a)
        cap[(a, b)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, inf if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, inf)
        add(2 * v + 1, 2 * u, inf)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent: dict[int, int | None] = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        path = []
        b = sink
        while parent[b] is not None:
            a = parent[b]
            path.append((a, b))
            b = a
        bottleneck = min(cap[e] for e in path)
        for e in path:
            a, b = e
            cap[(a, b)] -= bottleneck
            cap[(b, a)] += bottleneck
        flow += bottleneck
    return flow
