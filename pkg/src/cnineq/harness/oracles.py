"""Brute-force reference computations used to cross-check the fast paths."""

from __future__ import annotations

import itertools

from ..errors import ResourceError
from ..graph import Graph, is_connected

INDEPENDENCE_MAX_N = 24


def independence_number(g: Graph) -> int:
    """Maximum independent set size by branch and bound on a max-degree vertex."""
    if g.n > INDEPENDENCE_MAX_N:
        raise ResourceError(f"n={g.n} exceeds the independence-number guard {INDEPENDENCE_MAX_N}")
    best = 0

    def search(alive: frozenset[int], size: int) -> None:
        nonlocal best
        if size + len(alive) <= best:
            return
        if not alive:
            best = size
            return
        v = max(alive, key=lambda x: (len(g.neighbors(x) & alive), -x))
        if not g.neighbors(v) & alive:
            # no edges left among alive vertices
            best = max(best, size + len(alive))
            return
        search(alive - g.neighbors(v) - {v}, size + 1)
        search(alive - {v}, size)

    search(frozenset(range(g.n)), 0)
    return best


def is_block_graph_brute(g: Graph) -> bool:
    """Block-graph test via Menger instead of lowpoints.

    Two non-adjacent vertices share a block iff no single third vertex separates
    them, so a connected graph is a block graph iff every non-adjacent pair can be
    separated by deleting one vertex.
    """
    for x, y in itertools.combinations(range(g.n), 2):
        if g.has_edge(x, y):
            continue
        if all(_connected_without(g, x, y, z) for z in range(g.n) if z not in (x, y)):
            return False
    return True


def _connected_without(g: Graph, x: int, y: int, z: int) -> bool:
    seen = {x}
    stack = [x]
    while stack:
        a = stack.pop()
        if a == y:
            return True
        for w in g.adj[a]:
            if w != z and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def brute_cut_vertices(g: Graph) -> set[int]:
    """Vertices whose deletion disconnects the (connected) graph."""
    cuts = set()
    for z in range(g.n):
        sub, _ = g.induced(v for v in range(g.n) if v != z)
        if not is_connected(sub):
            cuts.add(z)
    return cuts
