"""Effective resistance in the unit-resistor network of a graph.

Two backends: ``"exact"`` grounds the highest-index vertex and solves the reduced
Laplacian system by fraction-free integer elimination, returning Fractions;
``"floating"`` does a dense numpy solve. The matrix-tree theorem gives an
independent exact route through spanning-tree counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

import numpy as np

from .errors import DomainError, UsageError
from .graph import Edge, Graph, _check_pair, common_neighbors, is_block_graph, is_connected, require_connected
from .inequality import DEFAULT_PATH_CAP, path_packing
from .linalg import bareiss_determinant, fraction_free_solve

Backend = Literal["exact", "floating"]
Resistance = Union[Fraction, float]

EXACT_MAX_N = 64
FLOAT_TOL = 1e-9


def default_backend(g: Graph) -> Backend:
    return "exact" if g.n <= EXACT_MAX_N else "floating"


def laplacian(g: Graph) -> list[list[int]]:
    L = [[0] * g.n for _ in range(g.n)]
    for u in range(g.n):
        L[u][u] = g.degree(u)
        for w in g.adj[u]:
            L[u][w] = -1
    return L


def _reduced(L: list[list[int]], ground: int) -> list[list[int]]:
    return [[x for j, x in enumerate(row) if j != ground] for i, row in enumerate(L) if i != ground]


class ResistanceMatrix:
    """All pairwise effective resistances of a connected graph.

    Built from one inverse of the grounded Laplacian: with the ground vertex's
    potential fixed at zero, R(u, v) = G[u][u] + G[v][v] - 2 G[u][v].
    """

    def __init__(self, g: Graph, backend: Backend | None = None, ground: int | None = None):
        require_connected(g)
        self.n = g.n
        self.backend = backend or default_backend(g)
        if self.backend not in ("exact", "floating"):
            raise UsageError(f"unknown backend {self.backend!r}")
        self.ground = g.n - 1 if ground is None else ground
        if g.n <= 1:
            self._inv = None
            return
        red = _reduced(laplacian(g), self.ground)
        k = g.n - 1
        if self.backend == "exact":
            ident = [[int(i == c) for i in range(k)] for c in range(k)]
            det, cols = fraction_free_solve(red, ident)
            self._det = det
            self._inv = cols  # symmetric, so columns double as rows
        else:
            self._inv = np.linalg.inv(np.array(red, dtype=float))

    def _entry(self, u: int, v: int):
        if u == self.ground or v == self.ground:
            return 0
        i = u - (u > self.ground)
        j = v - (v > self.ground)
        return self._inv[i][j]

    def __call__(self, u: int, v: int) -> Resistance:
        if u == v:
            return Fraction(0) if self.backend == "exact" else 0.0
        num = self._entry(u, u) + self._entry(v, v) - 2 * self._entry(u, v)
        if self.backend == "exact":
            return Fraction(num, self._det)
        return float(num)


def effective_resistance(g: Graph, u: int, v: int, backend: Backend | None = None) -> Resistance:
    """R(u, v) = (e_u - e_v)^T L^+ (e_u - e_v), solved for the single pair."""
    require_connected(g)
    _check_pair(g, u, v)
    backend = backend or default_backend(g)
    ground = g.n - 1
    red = _reduced(laplacian(g), ground)
    b = [0] * g.n
    b[u], b[v] = 1, -1
    del b[ground]

    def pot(x: int, sol):
        return 0 if x == ground else sol[x - (x > ground)]

    if backend == "exact":
        det, (sol,) = fraction_free_solve(red, [b])
        return Fraction(pot(u, sol) - pot(v, sol), det)
    if backend == "floating":
        sol = np.linalg.solve(np.array(red, dtype=float), np.array(b, dtype=float))
        return float(pot(u, sol) - pot(v, sol))
    raise UsageError(f"unknown backend {backend!r}")


@dataclass(frozen=True)
class ResistanceReport:
    per_edge: dict[Edge, Resistance]
    total: Resistance
    expected_total: int
    backend: str
    residual: Resistance
    holds: bool


def forster_check(g: Graph, backend: Backend | None = None) -> ResistanceReport:
    """Sum of edge resistances versus n - 1.

    Exact mode raises AssertionError unless the identity holds exactly; floating
    mode reports the residual and ``holds`` means residual < 1e-9.
    """
    R = ResistanceMatrix(g, backend)
    zero = Fraction(0) if R.backend == "exact" else 0.0
    per_edge = {e: R(*e) for e in g.edges()}
    total = sum(per_edge.values(), zero)
    residual = abs(total - (g.n - 1))
    if R.backend == "exact":
        assert residual == 0, f"edge resistances sum to {total}, expected {g.n - 1}"
        holds = True
    else:
        holds = residual < FLOAT_TOL
    return ResistanceReport(per_edge, total, g.n - 1, R.backend, residual, holds)


def resistance_upper_bound(g: Graph, u: int, v: int) -> Fraction:
    """Resistance of the edge in parallel with one 2-edge path per common neighbour."""
    _check_pair(g, u, v)
    if not g.has_edge(u, v):
        raise UsageError(f"({u}, {v}) is not an edge")
    k = len(common_neighbors(g, u, v))
    return 1 / (Fraction(k, 2) + 1)


@dataclass(frozen=True)
class EdgeBound:
    edge: Edge
    resistance: Fraction
    bound: Fraction
    strict: bool


@dataclass(frozen=True)
class BoundReport:
    per_edge: tuple[EdgeBound, ...]
    all_hold: bool
    any_strict: bool
    block_graph: bool


def check_bound_eq1(g: Graph) -> BoundReport:
    """Per-edge check of R(u, v) <= 1 / (k/2 + 1), k the common-neighbour count.

    Raises AssertionError if any edge violates the bound or if strictness does not
    match the block-graph test (strict somewhere iff some block is not a clique).
    """
    R = ResistanceMatrix(g, "exact")
    rows = []
    for u, v in g.edges():
        r = R(u, v)
        bound = resistance_upper_bound(g, u, v)
        assert r <= bound, f"edge ({u}, {v}): R = {r} exceeds {bound}"
        rows.append(EdgeBound((u, v), r, bound, r < bound))
    any_strict = any(row.strict for row in rows)
    block = is_block_graph(g)
    assert any_strict != block, f"any_strict={any_strict} but block_graph={block}"
    return BoundReport(tuple(rows), True, any_strict, block)


@dataclass(frozen=True)
class DetourBound:
    resistance: Fraction
    bound: Fraction
    holds: bool
    packing: int


def theorem3_resistance_bound(g: Graph, u: int, v: int, ell: int, path_cap: int = DEFAULT_PATH_CAP) -> DetourBound:
    """R(u, v) <= 1 / (1 + P(uv, ell) / ell), checked exactly."""
    require_connected(g)
    if not g.has_edge(u, v):
        raise UsageError(f"({u}, {v}) is not an edge")
    p = path_packing(g, u, v, ell, path_cap).value
    bound = 1 / (1 + Fraction(p, ell))
    r = effective_resistance(g, u, v, "exact")
    return DetourBound(r, bound, r <= bound, p)


# ---------------------------------------------------------------------------
# matrix-tree oracle
# ---------------------------------------------------------------------------

def _weighted_tree_count(n: int, weights: dict[Edge, int]) -> int:
    if n <= 1:
        return 1
    L = [[0] * n for _ in range(n)]
    for (a, b), w in weights.items():
        L[a][a] += w
        L[b][b] += w
        L[a][b] -= w
        L[b][a] -= w
    return bareiss_determinant(_reduced(L, n - 1))


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees: a cofactor of the Laplacian (0 if disconnected)."""
    if g.n <= 1:
        return 1
    if not is_connected(g):
        return 0
    return bareiss_determinant(_reduced(laplacian(g), g.n - 1))


def resistance_via_spanning_trees(g: Graph, u: int, v: int) -> Fraction:
    """tau(G with u and v identified) / tau(G).

    The identification keeps parallel edges as integer multiplicities and drops
    the loop that a u-v edge would become.
    """
    _check_pair(g, u, v)
    if not is_connected(g):
        raise DomainError("graph is not connected")
    lo, hi = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == hi:
            x = lo
        return x - (x > hi)

    weights: dict[Edge, int] = {}
    for a, b in g.edges():
        a, b = relabel(a), relabel(b)
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        weights[key] = weights.get(key, 0) + 1
    return Fraction(_weighted_tree_count(g.n - 1, weights), spanning_tree_count(g))
