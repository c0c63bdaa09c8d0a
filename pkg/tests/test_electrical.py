import itertools
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
import sympy

from cnineq.electrical import (
    ResistanceMatrix,
    check_bound_eq1,
    effective_resistance,
    forster_check,
    laplacian,
    resistance_upper_bound,
    resistance_via_spanning_trees,
    spanning_tree_count,
    theorem3_resistance_bound,
)
from cnineq.errors import DomainError, UsageError
from cnineq.graph import Graph
from cnineq.harness.generators import GenSpec, gen_graph

from conftest import C4, DIAMOND, EDGE, K4, P3, STAR, TRIANGLE, complete, cycle, path


def pinv_resistance(g, u, v):
    """Reference: (e_u - e_v)^T L^+ (e_u - e_v) with a sympy pseudo-inverse."""
    L = sympy.Matrix(laplacian(g))
    Lp = L.pinv()
    e = sympy.zeros(g.n, 1)
    e[u], e[v] = 1, -1
    val = sympy.nsimplify((e.T * Lp * e)[0, 0])
    return Fraction(int(val.p), int(val.q))


def test_laplacian_examples():
    assert laplacian(EDGE) == [[1, -1], [-1, 1]]
    L = laplacian(TRIANGLE)
    assert [L[i][i] for i in range(3)] == [2, 2, 2]
    assert all(L[i][j] == -1 for i in range(3) for j in range(3) if i != j)
    L = laplacian(P3)
    assert [L[i][i] for i in range(3)] == [1, 2, 1] and L[0][2] == 0


def test_laplacian_invariants(named):
    for g in named.values():
        L = np.array(laplacian(g))
        assert (L == L.T).all()
        assert (L.sum(axis=1) == 0).all()
        eig = np.linalg.eigvalsh(L.astype(float))
        assert eig.min() > -1e-9
        assert (eig < 1e-9).sum() == 1


@pytest.mark.parametrize(
    "g, u, v, expected",
    [
        (EDGE, 0, 1, Fraction(1)),
        (TRIANGLE, 0, 1, Fraction(2, 3)),
        (C4, 0, 1, Fraction(3, 4)),
        (P3, 0, 2, Fraction(2)),
        (K4, 0, 1, Fraction(1, 2)),
    ],
)
def test_resistance_examples(g, u, v, expected):
    assert pinv_resistance(g, u, v) == expected
    assert effective_resistance(g, u, v) == expected
    assert effective_resistance(g, u, v, "exact") == expected
    assert effective_resistance(g, u, v, "floating") == pytest.approx(float(expected), abs=1e-12)
    assert resistance_via_spanning_trees(g, u, v) == expected


def test_resistance_matches_pinv_on_random_graphs():
    for i in range(15):
        g = gen_graph(GenSpec("erdos_renyi", n=6, p=0.5, seed=i))
        R = ResistanceMatrix(g)
        for u, v in itertools.combinations(range(g.n), 2):
            assert R(u, v) == pinv_resistance(g, u, v) == effective_resistance(g, u, v)


def test_grounding_invariance():
    g = gen_graph(GenSpec("erdos_renyi", n=8, p=0.4, seed=5))
    ref = ResistanceMatrix(g)
    for ground in range(g.n):
        R = ResistanceMatrix(g, "exact", ground=ground)
        assert all(R(u, v) == ref(u, v) for u, v in itertools.combinations(range(g.n), 2))


def test_resistance_errors():
    with pytest.raises(DomainError):
        effective_resistance(Graph.empty(2), 0, 1)
    with pytest.raises(UsageError):
        effective_resistance(TRIANGLE, 1, 1)
    with pytest.raises(UsageError):
        effective_resistance(TRIANGLE, 0, 1, "approximate")
    with pytest.raises(DomainError):
        resistance_via_spanning_trees(Graph.empty(2), 0, 1)


def test_forster_examples():
    for g in (path(6), STAR):
        rep = forster_check(g)
        assert all(r == 1 for r in rep.per_edge.values())
        assert rep.total == g.n - 1 == rep.expected_total and rep.holds
    rep = forster_check(TRIANGLE)
    assert set(rep.per_edge.values()) == {Fraction(2, 3)} and rep.total == 2
    rep = forster_check(K4)
    assert set(rep.per_edge.values()) == {Fraction(1, 2)} and rep.total == 3
    assert rep.backend == "exact" and rep.residual == 0


def test_forster_floating():
    g = gen_graph(GenSpec("erdos_renyi", n=30, p=0.3, seed=9))
    rep = forster_check(g, "floating")
    assert rep.backend == "floating" and rep.residual < 1e-9 and rep.holds


def test_backend_default_switches_at_64():
    big = path(65)
    assert ResistanceMatrix(big).backend == "floating"
    assert ResistanceMatrix(path(64)).backend == "exact"


def test_upper_bound_examples():
    assert resistance_upper_bound(P3, 0, 1) == 1
    assert resistance_upper_bound(K4, 0, 1) == Fraction(1, 2)
    assert resistance_upper_bound(TRIANGLE, 0, 1) == Fraction(2, 3)
    with pytest.raises(UsageError):
        resistance_upper_bound(P3, 0, 2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_eq1_tight_on_cliques(n):
    rep = check_bound_eq1(complete(n))
    assert all(row.resistance == row.bound for row in rep.per_edge)
    assert rep.all_hold and not rep.any_strict


def test_eq1_tight_on_trees():
    rep = check_bound_eq1(STAR)
    assert all(row.resistance == row.bound == 1 for row in rep.per_edge)


def test_eq1_strict_on_c4():
    rep = check_bound_eq1(C4)
    assert all(row.strict and row.resistance == Fraction(3, 4) for row in rep.per_edge)
    assert rep.any_strict and not rep.block_graph


def test_eq1_diamond():
    rep = check_bound_eq1(DIAMOND)
    assert rep.any_strict


def test_theorem3_bound_examples():
    b = theorem3_resistance_bound(P3, 0, 1, 5)
    assert b.bound == 1 == b.resistance and b.holds
    b = theorem3_resistance_bound(K4, 0, 1, 2)
    assert b.bound == Fraction(1, 2) == b.resistance and b.packing == 2
    b = theorem3_resistance_bound(C4, 0, 1, 3)
    assert b.bound == Fraction(3, 4) == b.resistance and b.packing == 1


def test_spanning_tree_counts():
    assert spanning_tree_count(TRIANGLE) == 3
    assert spanning_tree_count(C4) == 4
    assert spanning_tree_count(K4) == 16
    assert spanning_tree_count(complete(6)) == 6 ** 4
    assert spanning_tree_count(Graph.empty(1)) == 1
    assert spanning_tree_count(Graph.empty(0)) == 1
    assert spanning_tree_count(Graph.empty(3)) == 0
    for i in range(10):
        g = gen_graph(GenSpec("erdos_renyi", n=7, p=0.5, seed=i))
        ref = nx.Graph(g.edges())
        assert spanning_tree_count(g) == round(nx.number_of_spanning_trees(ref))


def test_contraction_examples():
    # triangle with 0 = 1 identified: a doubled edge, 2 spanning trees; tau(triangle) = 3
    assert resistance_via_spanning_trees(TRIANGLE, 0, 1) == Fraction(2, 3)
    assert resistance_via_spanning_trees(P3, 0, 2) == 2
    assert resistance_via_spanning_trees(cycle(6), 0, 3) == Fraction(9, 6)
