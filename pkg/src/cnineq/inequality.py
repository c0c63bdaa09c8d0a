"""Exact evaluation of the common-neighbourhood edge sum and its generalization.

For a connected graph on n vertices,

    sum over edges uv of 1 / (|N(u) & N(v)| + 2)  >=  (n - 1) / 2

with equality exactly for block graphs. Replacing |N(u) & N(v)| by the number
P(uv, l) of internally disjoint u-v detours of length 2..l gives the bound
(n - 1) / l for the sum of 1 / (P(uv, l) + l).

All arithmetic here is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceError, UsageError
from .graph import Graph, _check_pair, common_neighbors, is_block_graph, require_connected

DEFAULT_PATH_CAP = 100_000


@dataclass(frozen=True)
class TheoremReport:
    sum: Fraction
    bound: Fraction
    holds: bool
    equality: bool
    block_graph: bool
    consistent: bool | None
    ell: int = 2


def common_neighbor_sum(g: Graph) -> Fraction:
    return sum((Fraction(1, len(common_neighbors(g, u, v)) + 2) for u, v in g.edges()), Fraction(0))


def _report(total: Fraction, bound: Fraction, block: bool, ell: int) -> TheoremReport:
    equality = total == bound
    consistent = (equality == block) if ell == 2 else None
    return TheoremReport(total, bound, total >= bound, equality, block, consistent, ell)


def verify_theorem1(g: Graph) -> TheoremReport:
    """Compare the common-neighbour sum with (n-1)/2 and check the equality case."""
    require_connected(g)
    if g.n < 1:
        raise UsageError("theorem needs at least one vertex")
    return _report(common_neighbor_sum(g), Fraction(g.n - 1, 2), is_block_graph(g), 2)


def caro_wei_sum(g: Graph) -> Fraction:
    return sum((Fraction(1, g.degree(v) + 1) for v in range(g.n)), Fraction(0))


# ---------------------------------------------------------------------------
# bounded-length disjoint paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathPacking:
    u: int
    v: int
    ell: int
    value: int
    witness: tuple[tuple[int, ...], ...]

    def check(self, g: Graph) -> None:
        """Raise AssertionError unless the witness is a valid packing of size ``value``."""
        assert len(self.witness) == self.value
        used: set[int] = set()
        for path in self.witness:
            assert path[0] == self.u and path[-1] == self.v, path
            assert 2 <= len(path) - 1 <= self.ell, path
            assert len(set(path)) == len(path), path
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:])), path
            inner = set(path[1:-1])
            assert not (inner & used), path
            used |= inner


def enumerate_detours(g: Graph, u: int, v: int, ell: int, path_cap: int = DEFAULT_PATH_CAP) -> list[tuple[int, ...]]:
    """All simple u-v paths with 2..ell edges, in lexicographic order."""
    found: list[tuple[int, ...]] = []
    path = [u]
    on_path = {u}

    def extend() -> None:
        x = path[-1]
        for w in g.adj[x]:
            if w == v:
                if len(path) >= 2:
                    if len(found) >= path_cap:
                        raise ResourceError(f"more than path_cap={path_cap} paths between {u} and {v}")
                    found.append(tuple(path) + (v,))
                continue
            # a path through w needs at least one more edge to reach v
            if w in on_path or len(path) + 1 > ell:
                continue
            path.append(w)
            on_path.add(w)
            extend()
            path.pop()
            on_path.discard(w)

    extend()
    return found


def _max_disjoint(masks: list[int]) -> list[int]:
    """Indices of a maximum family of pairwise disjoint bitmasks (branch and bound)."""
    order = sorted(range(len(masks)), key=lambda i: (bin(masks[i]).count("1"), i))

    # greedy lower bound
    best: list[int] = []
    taken = 0
    for i in order:
        if not masks[i] & taken:
            best.append(i)
            taken |= masks[i]

    def bound(cands: list[int]) -> int:
        if not cands:
            return 0
        union = 0
        for i in cands:
            union |= masks[i]
        smallest = bin(masks[cands[0]]).count("1")
        return min(len(cands), bin(union).count("1") // smallest)

    def search(cands: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(chosen) + bound(cands) <= len(best):
            return
        first, rest = cands[0], cands[1:]
        chosen.append(first)
        search([i for i in rest if not masks[i] & masks[first]], chosen)
        chosen.pop()
        search(rest, chosen)

    search(order, [])
    return sorted(best)


def path_packing(g: Graph, u: int, v: int, ell: int, path_cap: int = DEFAULT_PATH_CAP) -> PathPacking:
    """Maximum number P(uv, ell) of internally disjoint u-v paths of length 2..ell.

    The direct edge uv is never counted. Exact: all qualifying paths are enumerated
    (up to ``path_cap``) and a maximum disjoint family is found by branch and bound.
    """
    _check_pair(g, u, v)
    if ell < 2:
        raise UsageError(f"ell must be at least 2, got {ell}")
    paths = enumerate_detours(g, u, v, ell, path_cap)
    masks = []
    for p in paths:
        mask = 0
        for x in p[1:-1]:
            mask |= 1 << x
        masks.append(mask)
    # a path whose interior contains another path's interior is never needed
    keep: dict[int, int] = {}
    for i, mask in enumerate(masks):
        keep.setdefault(mask, i)
    distinct = sorted(keep, key=lambda mk: (bin(mk).count("1"), keep[mk]))
    minimal: list[int] = []
    for mk in distinct:
        if not any(other & mk == other for other in minimal):
            minimal.append(mk)
    chosen = _max_disjoint(minimal)
    witness = tuple(sorted(paths[keep[minimal[i]]] for i in chosen))
    return PathPacking(u, v, ell, len(witness), witness)


def generalized_sum(g: Graph, ell: int, path_cap: int = DEFAULT_PATH_CAP) -> Fraction:
    """Sum over edges of 1 / (P(uv, ell) + ell), in sorted edge order."""
    if ell < 2:
        raise UsageError(f"ell must be at least 2, got {ell}")
    return sum(
        (Fraction(1, path_packing(g, u, v, ell, path_cap).value + ell) for u, v in g.edges()),
        Fraction(0),
    )


def verify_generalized(g: Graph, ell: int, path_cap: int = DEFAULT_PATH_CAP) -> TheoremReport:
    """Compare the path-packing sum with (n-1)/ell.

    ``block_graph`` is informational; ``consistent`` is only defined for ell == 2.
    """
    require_connected(g)
    if g.n < 1:
        raise UsageError("theorem needs at least one vertex")
    total = generalized_sum(g, ell, path_cap)
    return _report(total, Fraction(g.n - 1, ell), is_block_graph(g), ell)
