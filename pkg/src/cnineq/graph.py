"""Simple undirected graphs on vertices ``0..n-1``.

Edge-list text format::

    # comments start with '#'
    n m
    u v
    ...

The header gives the vertex count and the number of distinct edges. Duplicate
edge lines collapse to one edge; self-loops are rejected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, ParseError, UsageError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with sorted adjacency tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise UsageError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        sets = []
        for u, row in enumerate(self.adj):
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise UsageError(f"neighbors of {u} are not sorted and duplicate-free")
            for w in row:
                if not 0 <= w < self.n:
                    raise UsageError(f"neighbor {w} of {u} out of range")
                if w == u:
                    raise UsageError(f"self-loop at {u}")
            sets.append(frozenset(row))
        for u, row in enumerate(self.adj):
            for w in row:
                if u not in sets[w]:
                    raise UsageError(f"asymmetric adjacency between {u} and {w}")
        object.__setattr__(self, "_sets", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise UsageError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def neighbors(self, u: int) -> frozenset[int]:
        return self._sets[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in sorted order."""
        return [(u, w) for u in range(self.n) for w in self.adj[u] if u < w]

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise UsageError(f"({u}, {v}) is not an edge")
        e = _norm(u, v)
        return Graph.from_edges(self.n, (x for x in self.edges() if x != e))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``, plus the old labels in order."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[w]) for u in old for w in self.adj[u] if w in index and u < w]
        return Graph.from_edges(len(old), edges), old


def _check_vertex(g: Graph, u: int) -> None:
    if not isinstance(u, int) or not 0 <= u < g.n:
        raise UsageError(f"vertex {u!r} out of range for n={g.n}")


def _check_pair(g: Graph, u: int, v: int) -> None:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise UsageError(f"expected distinct vertices, got {u} twice")


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format. Raises ParseError naming the line."""
    header: tuple[int, int] | None = None
    header_line = 0
    edges: set[Edge] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last_line = lineno
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header values must be nonnegative", lineno)
            header, header_line = (a, b), lineno
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex index out of range [0, {n}) in {line!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        edges.add(_norm(a, b))
    if header is None:
        raise ParseError("missing 'n m' header", max(1, len(text.splitlines())))
    n, m = header
    if len(edges) != m:
        raise ParseError(
            f"header declares {m} edges but {len(edges)} distinct edges were read",
            last_line or header_line,
        )
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, highlight: Iterable[Edge] | None = None) -> str:
    """DOT text for ``g``; edges in ``highlight`` get a red, thick style."""
    marked: set[Edge] = set()
    for u, v in highlight or ():
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise UsageError(f"highlight edge ({u}, {v}) is not an edge of the graph")
        marked.add(_norm(u, v))
    out = ["graph G {"]
    out.extend(f"  {u};" for u in range(g.n))
    for e in g.edges():
        attr = ' [color="red", penwidth=2]' if e in marked else ""
        out.append(f"  {e[0]} -- {e[1]}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# neighbourhoods and connectivity
# ---------------------------------------------------------------------------

def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    _check_pair(g, u, v)
    return g.neighbors(u) & g.neighbors(v)


def _reach(g: Graph, start: int, banned: frozenset[int] = frozenset()) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for w in g.adj[x]:
            if w not in seen and w not in banned:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(_reach(g, 0)) == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DomainError("graph is not connected")


def shortest_path(g: Graph, src: int, dst: int, avoid: Iterable[int] = (),
                  within: Iterable[int] | None = None) -> list[int] | None:
    """BFS path from src to dst avoiding ``avoid``, optionally restricted to ``within``.

    Neighbors are expanded in ascending order, so the result is deterministic.
    """
    banned = set(avoid)
    allowed = None if within is None else set(within)
    prev = {src: -1}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = [x]
            while prev[path[-1]] != -1:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in g.adj[x]:
            if w in prev or w in banned or (allowed is not None and w not in allowed):
                continue
            prev[w] = x
            queue.append(w)
    return None


def find_cycle(g: Graph) -> list[int] | None:
    """Vertex sequence of some cycle in g (closing edge implied), or None for a forest."""
    parent = [-2] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if w == parent[x]:
                    continue
                if parent[w] == -2:
                    parent[w] = x
                    depth[w] = depth[x] + 1
                    stack.append(w)
                else:
                    # non-tree edge x-w closes a cycle through their tree paths
                    a, b = x, w
                    left, right = [a], [b]
                    while depth[a] > depth[b]:
                        a = parent[a]
                        left.append(a)
                    while depth[b] > depth[a]:
                        b = parent[b]
                        right.append(b)
                    while a != b:
                        a, b = parent[a], parent[b]
                        left.append(a)
                        right.append(b)
                    return left + right[-2::-1]
    return None


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def is_clique(self) -> bool:
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]


def biconnected_components(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices by one DFS with an edge stack (lowpoint method).

    Blocks are returned sorted by their sorted vertex tuples.
    """
    require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[Block] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[Edge] = []
        # frames: (vertex, parent, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            x, parent, i = stack[-1]
            row = g.adj[x]
            if i < len(row):
                stack[-1] = (x, parent, i + 1)
                w = row[i]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((x, w))
                    if x == root:
                        root_children += 1
                    stack.append((w, x, 0))
                elif w != parent and disc[w] < disc[x]:
                    edge_stack.append((x, w))
                    low[x] = min(low[x], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[x])
            if low[x] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[Edge] = set()
                while True:
                    e = edge_stack.pop()
                    comp.add(_norm(*e))
                    if e == (parent, x):
                        break
                verts = frozenset(v for e in comp for v in e)
                blocks.append(Block(verts, frozenset(comp)))
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda b: sorted(b.vertices))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def is_block_graph(g: Graph) -> bool:
    """True iff every block of the (connected) graph induces a complete subgraph."""
    return all(b.is_clique() for b in biconnected_components(g).blocks)


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == max(g.n - 1, 0)


def bridges(g: Graph) -> list[Edge]:
    return sorted(next(iter(b.edges)) for b in biconnected_components(g).blocks if len(b.edges) == 1)
