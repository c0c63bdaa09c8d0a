"""Seeded random graph generators and exhaustive enumeration of small graphs."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterator

from ..errors import ResourceError, UsageError
from ..graph import Graph, is_connected
from .rng import SplitMix64

MODELS = ("erdos_renyi", "random_tree", "block_graph")
ER_RETRIES = 1000


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int = 0
    p: float = 0.5
    blocks: int = 1
    max_clique: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise UsageError(f"unknown model {self.model!r}; expected one of {', '.join(MODELS)}")
        if self.model == "block_graph":
            if self.blocks < 1 or self.max_clique < 2:
                raise UsageError("block_graph needs blocks >= 1 and max_clique >= 2")
        elif self.n < 1:
            raise UsageError(f"{self.model} needs n >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise UsageError(f"p must lie in [0, 1], got {self.p}")

    def with_seed(self, seed: int) -> GenSpec:
        return GenSpec(self.model, self.n, self.p, self.blocks, self.max_clique, seed)


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def gen_graph(spec: GenSpec) -> Graph:
    rng = SplitMix64(spec.seed)
    if spec.model == "random_tree":
        if spec.n == 1:
            return Graph.empty(1)
        seq = [rng.below(spec.n) for _ in range(spec.n - 2)]
        return Graph.from_edges(spec.n, prufer_decode(seq, spec.n))
    if spec.model == "erdos_renyi":
        pairs = list(itertools.combinations(range(spec.n), 2))
        for _ in range(ER_RETRIES):
            g = Graph.from_edges(spec.n, [e for e in pairs if rng.random() < spec.p])
            if is_connected(g):
                return g
        raise ResourceError(
            f"no connected G({spec.n}, {spec.p}) in {ER_RETRIES} attempts; try a larger p"
        )
    # block_graph: glue cliques at uniformly chosen existing vertices
    size = rng.randint(2, spec.max_clique)
    edges = list(itertools.combinations(range(size), 2))
    n = size
    for _ in range(spec.blocks - 1):
        anchor = rng.below(n)
        size = rng.randint(2, spec.max_clique)
        clique = [anchor] + list(range(n, n + size - 1))
        edges.extend(itertools.combinations(clique, 2))
        n += size - 1
    return Graph.from_edges(n, edges)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on 0..n-1, by filtering all edge subsets."""
    if not 1 <= n <= 7:
        raise UsageError(f"enumeration supports 1 <= n <= 7, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if is_connected(g):
            yield g
