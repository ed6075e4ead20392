"""Adjacency spectral radius, equitable partitions and exact quotient algebra.

The spectral radius is computed by power iteration on A + I (the diagonal
shift breaks the period of bipartite components, and for a connected graph
A + I is primitive, so the iteration provably converges from the all-ones
start vector). Disconnected graphs take the maximum over components.

Quotient matrices have rational entries by construction, so characteristic
polynomials are computed exactly over ``fractions.Fraction`` and only the
final root extraction happens in floating point. Root finding is uniform
sign-change bisection for every degree; closed forms are reserved for test
oracles.

Tolerance ladder, fixed package-wide: computations run at 1e-12 and
assertions/comparisons get one decade of slack at 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import Graph, _bits, component_masks

COMPUTE_TOL = 1e-12
ASSERT_TOL = 1e-9

_MAX_POWER_ITERATIONS = 200_000


@dataclass(frozen=True)
class Partition:
    """An ordered list of disjoint nonempty vertex blocks covering V(G)."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Sequence[Sequence[int]]):
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(block)) for block in blocks)
        )

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            for v in block:
                if not 0 <= v < g.n:
                    raise ValueError(f"vertex {v} out of range for order {g.n}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one block")
                seen.add(v)
        if len(seen) != g.n:
            raise ValueError("partition does not cover every vertex")

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class QuotientMatrix:
    """Square matrix of average row sums between blocks.

    Entry (i, j) is the average, over the vertices of block i, of the number
    of neighbors in block j. When the block sizes are known, the edge-count
    symmetry q_ij * |V_i| == q_ji * |V_j| is enforced.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    block_sizes: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("quotient matrix must be square and nonempty")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("quotient entries must be nonnegative")
        object.__setattr__(self, "entries", rows)
        if self.block_sizes is not None:
            sizes = tuple(int(s) for s in self.block_sizes)
            if len(sizes) != len(rows) or any(s <= 0 for s in sizes):
                raise ValueError("block sizes must be positive, one per block")
            for i in range(len(rows)):
                for j in range(len(rows)):
                    if rows[i][j] * sizes[i] != rows[j][i] * sizes[j]:
                        raise ValueError(
                            "entries violate block edge-count symmetry at "
                            f"({i}, {j})"
                        )
            object.__setattr__(self, "block_sizes", sizes)

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial with degree-descending coefficients.

    Characteristic polynomials are monic with exact rational coefficients;
    evaluation works with whatever numeric type the argument carries.
    """

    coefficients: tuple

    def __init__(self, coefficients: Sequence):
        coeffs = tuple(coefficients)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        d = self.degree
        if d == 0:
            return Polynomial((0,))
        return Polynomial(
            tuple(c * (d - i) for i, c in enumerate(self.coefficients[:-1]))
        )

    def float_coefficients(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coefficients)


def spectral_radius(g: Graph, tol: float = COMPUTE_TOL) -> float:
    """Largest adjacency eigenvalue, accurate to ``tol``.

    An edgeless graph has spectral radius 0; the empty graph is rejected.
    """
    if g.n == 0:
        raise ValueError("spectral radius is undefined for the empty graph")
    rows = g.rows()
    best = 0.0
    for mask in component_masks(rows, (1 << g.n) - 1):
        if mask.bit_count() == 1:
            continue
        vertices = list(_bits(mask))
        position = {v: i for i, v in enumerate(vertices)}
        nbrs = [
            [position[u] for u in _bits(rows[v] & mask)] for v in vertices
        ]
        best = max(best, _power_radius(nbrs, tol))
    return best


def _power_radius(nbrs: list[list[int]], tol: float) -> float:
    """Power iteration on A + I for one connected component.

    The all-ones start has positive overlap with the Perron vector, and the
    iterate stays entrywise positive, so once the residual ||Bv - lam*v||
    drops below ``tol`` the Rayleigh quotient sits next to the Perron root.
    """
    n = len(nbrs)
    v = [1.0 / math.sqrt(n)] * n
    for _ in range(_MAX_POWER_ITERATIONS):
        w = [v[i] + math.fsum(v[j] for j in nbrs[i]) for i in range(n)]
        lam = math.fsum(v[i] * w[i] for i in range(n))
        residual = math.sqrt(math.fsum((w[i] - lam * v[i]) ** 2 for i in range(n)))
        norm = math.sqrt(math.fsum(x * x for x in w))
        v = [x / norm for x in w]
        if residual <= tol * max(1.0, lam):
            return lam - 1.0
    raise ArithmeticError("power iteration did not converge")


def is_equitable(g: Graph, p: Partition) -> bool:
    """Whether every vertex of block i has the same neighbor count in block j,
    for every ordered block pair (i, j)."""
    p.validate(g)
    masks = [sum(1 << v for v in block) for block in p.blocks]
    for block in p.blocks:
        first = None
        for v in block:
            profile = tuple((g.row(v) & m).bit_count() for m in masks)
            if first is None:
                first = profile
            elif profile != first:
                return False
    return True


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    """Matrix of average neighbor counts between the partition's blocks."""
    p.validate(g)
    masks = [sum(1 << v for v in block) for block in p.blocks]
    entries = []
    for block in p.blocks:
        row = []
        for m in masks:
            total = sum((g.row(v) & m).bit_count() for v in block)
            row.append(Fraction(total, len(block)))
        entries.append(tuple(row))
    return QuotientMatrix(
        entries=tuple(entries),
        block_sizes=tuple(len(block) for block in p.blocks),
    )


def char_poly(m: QuotientMatrix) -> Polynomial:
    """Monic characteristic polynomial det(xI - M), exact over rationals.

    Uses the Faddeev-LeVerrier recurrence, which stays in Fraction
    arithmetic all the way down.
    """
    n = m.size
    a = [list(row) for row in m.entries]
    coeffs: list[Fraction] = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for step in range(1, n + 1):
        shifted = [row[:] for row in mk]
        for i in range(n):
            shifted[i][i] += coeffs[-1]
        mk = [
            [
                sum(a[i][t] * shifted[t][j] for t in range(n))
                for j in range(n)
            ]
            for i in range(n)
        ]
        trace = sum(mk[i][i] for i in range(n))
        coeffs.append(-trace / step)
    return Polynomial(tuple(coeffs))


def largest_real_root(
    p: Polynomial,
    bracket: tuple[float, float] | None = None,
    tol: float = 1e-12,
) -> float:
    """Largest real root of ``p`` inside the bracket, to within ``tol``.

    Real roots are located by recursively bracketing between the critical
    points (the derivative's real roots) and bisecting every sign change.
    Raises if no real root lies in the bracket, which signals a misuse for
    the characteristic polynomials this package feeds in.
    """
    coeffs = [float(c) for c in p.coefficients]
    while coeffs and coeffs[0] == 0.0:
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        raise ValueError("polynomial is constant; it has no roots to find")
    if bracket is None:
        lead = abs(coeffs[0])
        size = max(abs(c) / lead for c in coeffs[1:])
        bound = max(1.0, len(coeffs) * size, 1.0 + size)
        bracket = (-bound, bound)
    lo, hi = bracket
    roots = _real_roots(coeffs, lo, hi, tol)
    if not roots:
        raise ValueError(f"no real root in bracket [{lo}, {hi}]")
    return max(roots)


def _horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _real_roots(coeffs: list[float], lo: float, hi: float, tol: float) -> list[float]:
    degree = len(coeffs) - 1
    if degree <= 0:
        return []
    if degree == 1:
        r = -coeffs[1] / coeffs[0]
        return [r] if lo <= r <= hi else []
    derivative = [c * (degree - i) for i, c in enumerate(coeffs[:-1])]
    cut_points = sorted(set([lo, hi] + _real_roots(derivative, lo, hi, tol)))
    roots = []
    values = [(x, _horner(coeffs, x)) for x in cut_points]
    for (a, fa), (b, fb) in zip(values, values[1:]):
        if fa == 0.0:
            roots.append(a)
        if fa * fb < 0.0:
            roots.append(_bisect(coeffs, a, b, fa, tol))
    if values[-1][1] == 0.0:
        roots.append(values[-1][0])
    return roots


def _bisect(coeffs: list[float], a: float, b: float, fa: float, tol: float) -> float:
    # The polynomial is monotone on [a, b] (no interior critical point), so
    # plain bisection of the sign change is safe.
    width = tol * 0.25
    while b - a > width:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = _horner(coeffs, mid)
        if fm == 0.0:
            return mid
        if (fa < 0.0) == (fm < 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def quotient_spectral_radius(g: Graph, p: Partition) -> float:
    """Largest eigenvalue of the quotient matrix of an equitable partition.

    For an equitable partition this equals the spectral radius of the graph,
    which is exactly how the threshold families are analyzed. Non-equitable
    partitions are rejected because the identity's hypothesis fails.
    """
    if not is_equitable(g, p):
        raise ValueError("partition is not equitable")
    return largest_real_root(char_poly(quotient_matrix(g, p)))
