"""Vertex orderings, good pairs and the good-pair subgraph G^pi.

An ordered pair (u, v) is good for an ordering when uv is an edge, u comes
before v, and u comes before every common neighbour of u and v. The spanning
subgraph formed by good pairs is always connected, and it is a tree for every
ordering exactly when the graph is a block graph.
"""

from __future__ import annotations

import itertools
import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ResourceError, UsageError
from .graph import (
    Edge,
    Graph,
    _check_vertex,
    biconnected_components,
    common_neighbors,
    find_cycle,
    is_connected,
    require_connected,
    shortest_path,
)
from .harness.rng import SplitMix64, derive_seed

DEFAULT_ORDERING_LIMIT = 9


@dataclass(frozen=True)
class Ordering:
    """``rank[v]`` is the position of vertex v; a permutation of ``0..n-1``."""

    rank: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.rank) != list(range(len(self.rank))):
            raise UsageError(f"ranks {list(self.rank)} are not a permutation of 0..{len(self.rank) - 1}")

    @classmethod
    def from_values(cls, values: Sequence[int]) -> Ordering:
        """Rank-compress an injective labelling into the naturals."""
        if len(set(values)) != len(values):
            raise UsageError("ordering values must be distinct")
        order = sorted(range(len(values)), key=lambda v: values[v])
        return cls.from_sequence(order)

    @classmethod
    def from_sequence(cls, vertices: Sequence[int]) -> Ordering:
        """Ordering that lists ``vertices`` first to last."""
        rank = [0] * len(vertices)
        for i, v in enumerate(vertices):
            rank[v] = i
        return cls(tuple(rank))

    @classmethod
    def identity(cls, n: int) -> Ordering:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.rank)

    def sequence(self) -> list[int]:
        seq = [0] * self.n
        for v, r in enumerate(self.rank):
            seq[r] = v
        return seq

    def __str__(self) -> str:
        return " ".join(map(str, self.rank))


def _check_ordering(g: Graph, pi: Ordering) -> None:
    if pi.n != g.n:
        raise UsageError(f"ordering has {pi.n} entries for a graph on {g.n} vertices")


def is_good_pair(g: Graph, pi: Ordering, u: int, v: int) -> bool:
    _check_ordering(g, pi)
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise UsageError(f"expected distinct vertices, got {u} twice")
    if not g.has_edge(u, v):
        return False
    r = pi.rank
    return r[u] < r[v] and all(r[u] < r[w] for w in common_neighbors(g, u, v))


def good_pair_graph(g: Graph, pi: Ordering) -> Graph:
    """The spanning subgraph G^pi of edges whose rank-oriented pair is good."""
    _check_ordering(g, pi)
    r = pi.rank
    kept = []
    for u, v in g.edges():
        lo = min(r[u], r[v])
        if all(r[w] > lo for w in g.neighbors(u) & g.neighbors(v)):
            kept.append((u, v))
    return Graph.from_edges(g.n, kept)


# ---------------------------------------------------------------------------
# triangle deletion
# ---------------------------------------------------------------------------

def _tiebreak_default(pi: Ordering) -> Callable[[Edge], tuple]:
    # sigma descending, then larger endpoint rank descending, then lexicographic
    r = pi.rank
    return lambda e: (-min(r[e[0]], r[e[1]]), -max(r[e[0]], r[e[1]]), e)


def _tiebreak_lex(pi: Ordering) -> Callable[[Edge], tuple]:
    r = pi.rank
    return lambda e: (-min(r[e[0]], r[e[1]]), e)


TIE_BREAKS = {"default": _tiebreak_default, "lex": _tiebreak_lex}


def good_pair_graph_by_deletion(g: Graph, pi: Ordering, tie_break: str = "default") -> Graph:
    """Build G^pi by deleting edges that sit in a triangle with an earlier apex.

    Edges are processed from the largest to the smallest sigma (the smaller endpoint
    rank); ``tie_break`` orders edges with equal sigma.
    """
    _check_ordering(g, pi)
    try:
        key = TIE_BREAKS[tie_break](pi)
    except KeyError:
        raise UsageError(f"unknown tie-break policy {tie_break!r}") from None
    r = pi.rank
    h = [set(row) for row in g.adj]
    for u, v in sorted(g.edges(), key=key):
        lo = min(r[u], r[v])
        if any(r[a] < lo for a in h[u] & h[v]):
            h[u].discard(v)
            h[v].discard(u)
    return Graph(g.n, tuple(tuple(sorted(s)) for s in h))


# ---------------------------------------------------------------------------
# minimum-weight spanning tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[Edge, ...]
    weight: int


def min_weight_spanning_tree(g: Graph, pi: Ordering) -> SpanningTree:
    """Kruskal on weights min(rank u, rank v); ties by larger rank, then by edge."""
    require_connected(g)
    _check_ordering(g, pi)
    r = pi.rank
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: list[Edge] = []
    weight = 0
    for u, v in sorted(g.edges(), key=lambda e: (min(r[e[0]], r[e[1]]), max(r[e[0]], r[e[1]]), e)):
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            chosen.append((u, v))
            weight += min(r[u], r[v])
    return SpanningTree(tuple(sorted(chosen)), weight)


# ---------------------------------------------------------------------------
# expectations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpectationReport:
    exact: Fraction
    sample_mean: float
    sample_count: int
    sample_stddev: float

    @property
    def standard_error(self) -> float:
        return self.sample_stddev / math.sqrt(self.sample_count)

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "sample_mean": self.sample_mean,
            "sample_count": self.sample_count,
            "sample_stddev": self.sample_stddev,
            "standard_error": self.standard_error,
        }


def exact_expected_good_edges(g: Graph) -> Fraction:
    """Expected edge count of G^pi for a uniformly random ordering."""
    return sum((Fraction(2, len(common_neighbors(g, u, v)) + 2) for u, v in g.edges()), Fraction(0))


def random_ordering(n: int, seed: int) -> Ordering:
    rng = SplitMix64(seed)
    seq = list(range(n))
    rng.shuffle(seq)
    return Ordering.from_sequence(seq)


def sample_good_edge_count(g: Graph, trials: int, seed: int) -> ExpectationReport:
    """Monte Carlo estimate of E|E(G^pi)|; trial i uses the ordering seeded by derive_seed(seed, i)."""
    if trials < 1:
        raise UsageError("trials must be at least 1")
    counts = [good_pair_graph(g, random_ordering(g.n, derive_seed(seed, i))).m for i in range(trials)]
    mean = statistics.fmean(counts)
    stddev = statistics.stdev(counts) if trials > 1 else 0.0
    return ExpectationReport(exact_expected_good_edges(g), mean, trials, stddev)


def all_orderings_average(g: Graph, n_limit: int = DEFAULT_ORDERING_LIMIT) -> Fraction:
    """Exact average of |E(G^pi)| over all n! orderings."""
    if g.n > n_limit:
        raise ResourceError(f"n={g.n} exceeds the ordering enumeration limit {n_limit}")
    total = sum(good_pair_graph(g, Ordering.from_sequence(p)).m for p in itertools.permutations(range(g.n)))
    return Fraction(total, math.factorial(g.n))


# ---------------------------------------------------------------------------
# exhaustive ordering checks and cycle witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderingsReport:
    always_connected: bool
    always_tree: bool
    counterexample: Ordering | None
    orderings: int
    disconnected_example: Ordering | None = None


def all_orderings_report(g: Graph, n_limit: int = DEFAULT_ORDERING_LIMIT) -> OrderingsReport:
    """Check G^pi over all n! orderings for connectivity and acyclicity."""
    require_connected(g)
    if g.n > n_limit:
        raise ResourceError(f"n={g.n} exceeds the ordering enumeration limit {n_limit}")
    connected = True
    cyclic: Ordering | None = None
    broken: Ordering | None = None
    count = 0
    for seq in itertools.permutations(range(g.n)):
        pi = Ordering.from_sequence(seq)
        h = good_pair_graph(g, pi)
        count += 1
        if not is_connected(h):
            connected = False
            broken = broken or pi
        if cyclic is None and (h.m > g.n - 1 or find_cycle(h) is not None):
            cyclic = pi
    return OrderingsReport(connected, cyclic is None, cyclic, count, broken)


@dataclass(frozen=True)
class CycleWitness:
    ordering: Ordering
    cycle: tuple[int, ...]
    triple: tuple[int, int, int]
    path: tuple[int, ...]


def _witness_candidates(g: Graph) -> Iterable[tuple[int, int, int, list[int]]]:
    """(a, b, c, path) for induced paths a-c-b inside non-clique blocks.

    Blocks in sorted order; within a block, pairs (a, b) at distance 2
    lexicographically, c ascending. ``path`` is the shortest a-b path avoiding c
    inside the block.
    """
    for block in biconnected_components(g).blocks:
        if block.is_clique():
            continue
        verts = sorted(block.vertices)
        for a, b in itertools.combinations(verts, 2):
            if g.has_edge(a, b):
                continue
            for c in sorted(g.neighbors(a) & g.neighbors(b) & block.vertices):
                path = shortest_path(g, a, b, avoid=(c,), within=block.vertices)
                if path is not None:
                    yield a, b, c, path


def cycle_witness_ordering(g: Graph) -> CycleWitness | None:
    """An ordering whose G^pi has a cycle, or None for block graphs.

    The ordering puts a, b, c, then the interior of the shortest a-b path avoiding
    c, then every other vertex by label. The first candidate triple whose ordering
    actually yields a cycle is returned; when c touches two consecutive path
    vertices the recipe can produce a tree, so later triples are tried.
    """
    require_connected(g)
    for a, b, c, path in _witness_candidates(g):
        head = [a, b, c] + path[1:-1]
        rest = [x for x in range(g.n) if x not in set(head)]
        pi = Ordering.from_sequence(head + rest)
        cycle = find_cycle(good_pair_graph(g, pi))
        if cycle is not None:
            return CycleWitness(pi, tuple(cycle), (a, b, c), tuple(path))
    if any(not blk.is_clique() for blk in biconnected_components(g).blocks):
        raise AssertionError("no candidate ordering produced a cycle in a non-block graph")
    return None
