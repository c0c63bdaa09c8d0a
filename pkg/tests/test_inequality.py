import itertools
from fractions import Fraction

import networkx as nx
import pytest

from cnineq.errors import DomainError, ResourceError, UsageError
from cnineq.graph import Graph, common_neighbors
from cnineq.harness.generators import GenSpec, gen_graph
from cnineq.inequality import (
    caro_wei_sum,
    common_neighbor_sum,
    enumerate_detours,
    generalized_sum,
    path_packing,
    verify_generalized,
    verify_theorem1,
)

from conftest import C4, C5, DIAMOND, K4, P3, TRIANGLE, path


def brute_sum(g):
    total = Fraction(0)
    for u, v in itertools.combinations(range(g.n), 2):
        if g.has_edge(u, v):
            k = sum(1 for w in range(g.n) if g.has_edge(u, w) and g.has_edge(v, w))
            total += Fraction(1, k + 2)
    return total


def brute_packing(g, u, v, ell):
    """Largest family of internally disjoint u-v paths of length 2..ell, by subsets."""
    ref = nx.Graph(g.edges())
    ref.add_nodes_from(range(g.n))
    paths = [p for p in nx.all_simple_paths(ref, u, v, cutoff=ell) if len(p) >= 3]
    for size in range(len(paths), 0, -1):
        for combo in itertools.combinations(paths, size):
            inner = [x for p in combo for x in p[1:-1]]
            if len(inner) == len(set(inner)):
                return size
    return 0


def test_sum_examples():
    assert common_neighbor_sum(P3) == 1
    assert common_neighbor_sum(C4) == 2
    assert brute_sum(DIAMOND) == Fraction(19, 12)
    assert common_neighbor_sum(DIAMOND) == Fraction(19, 12)


def test_sum_of_edgeless_graph_is_zero():
    assert common_neighbor_sum(Graph.empty(3)) == 0


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_theorem1_on_trees(n):
    rep = verify_theorem1(path(n))
    assert rep.sum == rep.bound == Fraction(n - 1, 2)
    assert rep.equality and rep.block_graph and rep.consistent and rep.holds


def test_theorem1_k4():
    rep = verify_theorem1(K4)
    assert rep.sum == Fraction(3, 2) == rep.bound
    assert rep.equality and rep.block_graph


def test_theorem1_c4():
    rep = verify_theorem1(C4)
    assert rep.sum == 2 and rep.bound == Fraction(3, 2)
    assert rep.holds and not rep.equality and not rep.block_graph and rep.consistent


def test_theorem1_rejects_disconnected():
    with pytest.raises(DomainError):
        verify_theorem1(Graph.empty(2))


def test_caro_wei_examples():
    assert caro_wei_sum(Graph.empty(1)) == 1
    assert caro_wei_sum(TRIANGLE) == 1
    assert caro_wei_sum(C5) == Fraction(5, 3)


def test_packing_examples():
    assert path_packing(C4, 0, 1, 2).value == 0
    p = path_packing(C4, 0, 1, 3)
    assert p.value == 1 == brute_packing(C4, 0, 1, 3)
    assert p.witness == ((0, 3, 2, 1),)
    assert path_packing(K4, 0, 1, 2).value == 2 == brute_packing(K4, 0, 1, 2)


def test_packing_never_counts_the_direct_edge():
    g = Graph.from_edges(2, [(0, 1)])
    assert path_packing(g, 0, 1, 5).value == 0
    assert enumerate_detours(g, 0, 1, 5) == []


def test_packing_errors():
    with pytest.raises(UsageError):
        path_packing(K4, 0, 0, 2)
    with pytest.raises(UsageError):
        path_packing(K4, 0, 1, 1)
    with pytest.raises(ResourceError, match="path_cap=3"):
        path_packing(Graph.from_edges(8, itertools.combinations(range(8), 2)), 0, 1, 4, path_cap=3)


def test_packing_against_brute_force():
    for i in range(40):
        g = gen_graph(GenSpec("erdos_renyi", n=7, p=0.45, seed=1000 + i))
        for u, v in g.edges()[:4]:
            for ell in (2, 3, 4):
                p = path_packing(g, u, v, ell)
                p.check(g)
                assert p.value == brute_packing(g, u, v, ell), (g, u, v, ell)


def test_packing_ell2_counts_common_neighbours(named):
    for g in named.values():
        for u, v in g.edges():
            assert path_packing(g, u, v, 2).value == len(common_neighbors(g, u, v))


def test_generalized_sum_examples():
    for ell in (2, 3, 5):
        assert generalized_sum(path(6), ell) == Fraction(5, ell)
    assert generalized_sum(TRIANGLE, 2) == 1
    assert generalized_sum(C4, 3) == 1


def test_verify_generalized_examples():
    rep = verify_generalized(C5, 4)
    assert rep.sum == rep.bound == 1 and rep.holds and rep.equality
    assert rep.consistent is None
    rep = verify_generalized(K4, 3)
    # each K4 edge: two length-2 detours and two length-3 detours, at most 2 disjoint
    assert all(brute_packing(K4, u, v, 3) == 2 for u, v in K4.edges())
    assert rep.sum == Fraction(6, 5) and rep.bound == 1 and rep.holds


def test_verify_generalized_ell2_matches_theorem1(named):
    for g in named.values():
        assert verify_generalized(g, 2) == verify_theorem1(g)


def test_verify_generalized_rejects_disconnected():
    with pytest.raises(DomainError):
        verify_generalized(Graph.empty(3), 3)
