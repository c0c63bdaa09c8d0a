"""Property fuzzer over seeded random graphs.

Each property takes a connected graph and a 64-bit seed (used for any random
orderings it needs) and returns ``None`` when it holds, or a short detail string
describing the violation. Resource-cap errors are collected separately from
violations: they mean "instance too big", not "theorem false".
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .. import electrical as el
from .. import good_pairs as gp
from .. import inequality as iq
from ..errors import ResourceError, UsageError
from ..graph import (
    Graph,
    bridges,
    common_neighbors,
    find_cycle,
    is_block_graph,
    is_connected,
    parse_edge_list,
    to_edge_list,
)
from .generators import GenSpec, gen_graph
from .oracles import independence_number
from .rng import derive_seed

Property = Callable[[Graph, int], "str | None"]

RANDOM_ORDERINGS = 32


def _orderings(g: Graph, seed: int, exhaustive_up_to: int = 0):
    if g.n <= exhaustive_up_to:
        for seq in itertools.permutations(range(g.n)):
            yield gp.Ordering.from_sequence(seq)
    else:
        for k in range(RANDOM_ORDERINGS):
            yield gp.random_ordering(g.n, derive_seed(seed, k))


def prop_theorem1(g: Graph, seed: int) -> str | None:
    rep = iq.verify_theorem1(g)
    if not rep.holds:
        return f"sum {rep.sum} < bound {rep.bound}"
    if not rep.consistent:
        return f"equality={rep.equality} but block_graph={rep.block_graph}"
    return None


def prop_lemma2a_connected(g: Graph, seed: int) -> str | None:
    for pi in _orderings(g, seed, exhaustive_up_to=5):
        if not is_connected(gp.good_pair_graph(g, pi)):
            return f"G^pi disconnected for ordering {pi}"
    return None


def prop_lemma2b_tree_iff_block(g: Graph, seed: int) -> str | None:
    block = is_block_graph(g)
    if g.n <= 6:
        rep = gp.all_orderings_report(g)
        if rep.always_tree != block:
            return f"always_tree={rep.always_tree} but block_graph={block}"
        return None
    if block:
        for pi in _orderings(g, seed):
            if find_cycle(gp.good_pair_graph(g, pi)) is not None:
                return f"block graph but G^pi has a cycle for ordering {pi}"
        return None
    if gp.cycle_witness_ordering(g) is None:
        return "non-block graph but no cycle witness"
    return None


def prop_construction_equiv(g: Graph, seed: int) -> str | None:
    for pi in _orderings(g, seed):
        target = gp.good_pair_graph(g, pi)
        for policy in gp.TIE_BREAKS:
            if gp.good_pair_graph_by_deletion(g, pi, policy) != target:
                return f"deletion ({policy}) differs from G^pi for ordering {pi}"
        tree = gp.min_weight_spanning_tree(g, pi)
        if len(tree.edges) != g.n - 1 or not is_connected(Graph.from_edges(g.n, tree.edges)):
            return f"minimum-weight tree is not spanning for ordering {pi}"
        if not set(tree.edges) <= set(target.edges()):
            return f"minimum-weight tree edge outside G^pi for ordering {pi}"
    return None


def prop_forster(g: Graph, seed: int) -> str | None:
    try:
        el.forster_check(g, "exact")
    except AssertionError as exc:
        return str(exc)
    rep = el.forster_check(g, "floating")
    if not rep.holds:
        return f"floating residual {rep.residual:.3e}"
    return None


def prop_eq1_bound(g: Graph, seed: int) -> str | None:
    R = el.ResistanceMatrix(g, "exact")
    for u, v in g.edges():
        bound = el.resistance_upper_bound(g, u, v)
        if R(u, v) > bound:
            return f"edge ({u}, {v}): R = {R(u, v)} > {bound}"
    return None


def prop_strictness_iff_nonblock(g: Graph, seed: int) -> str | None:
    R = el.ResistanceMatrix(g, "exact")
    strict = [e for e in g.edges() if R(*e) < el.resistance_upper_bound(g, *e)]
    block = is_block_graph(g)
    if bool(strict) == block:
        return f"strict edges {strict} but block_graph={block}"
    return None


def prop_rayleigh(g: Graph, seed: int) -> str | None:
    R = el.ResistanceMatrix(g, "exact")
    bridge_set = set(bridges(g))
    for e in g.edges():
        if e in bridge_set:
            continue
        R2 = el.ResistanceMatrix(g.without_edge(*e), "exact")
        for a, b in itertools.combinations(range(g.n), 2):
            if R2(a, b) < R(a, b):
                return f"removing {e} lowered R({a}, {b}) from {R(a, b)} to {R2(a, b)}"
    return None


def prop_theorem3(g: Graph, seed: int) -> str | None:
    base = iq.verify_theorem1(g)
    previous: dict = {}
    for ell in (2, 3, 4):
        rep = iq.verify_generalized(g, ell)
        if not rep.holds:
            return f"ell={ell}: sum {rep.sum} < bound {rep.bound}"
        if ell == 2 and rep != base:
            return f"ell=2 report {rep} differs from {base}"
        for u, v in g.edges():
            packing = iq.path_packing(g, u, v, ell)
            try:
                packing.check(g)
            except AssertionError:
                return f"ell={ell}: invalid packing witness for ({u}, {v})"
            if ell == 2 and packing.value != len(common_neighbors(g, u, v)):
                return f"P(({u}, {v}), 2) = {packing.value} != common neighbours"
            if packing.value < previous.get((u, v), 0):
                return f"P(({u}, {v}), ell) decreased at ell={ell}"
            previous[(u, v)] = packing.value
            b = el.theorem3_resistance_bound(g, u, v, ell)
            if not b.holds:
                return f"ell={ell}, edge ({u}, {v}): R = {b.resistance} > {b.bound}"
    return None


def prop_caro_wei(g: Graph, seed: int) -> str | None:
    s, alpha = iq.caro_wei_sum(g), independence_number(g)
    if s > alpha:
        return f"Caro-Wei sum {s} > independence number {alpha}"
    return None


def prop_expectation_avg(g: Graph, seed: int) -> str | None:
    exact = gp.exact_expected_good_edges(g)
    if exact != 2 * iq.common_neighbor_sum(g):
        return f"expected edge count {exact} != 2 x common-neighbour sum"
    if g.n <= 7:
        avg = gp.all_orderings_average(g)
        if avg != exact:
            return f"all-orderings average {avg} != {exact}"
    return None


def prop_resistance_oracle(g: Graph, seed: int) -> str | None:
    R = el.ResistanceMatrix(g, "exact")
    F = el.ResistanceMatrix(g, "floating")
    for a, b in itertools.combinations(range(g.n), 2):
        via_trees = el.resistance_via_spanning_trees(g, a, b)
        if via_trees != R(a, b):
            return f"R({a}, {b}): solve gives {R(a, b)}, spanning trees give {via_trees}"
        if abs(float(R(a, b)) - F(a, b)) >= el.FLOAT_TOL:
            return f"R({a}, {b}): exact {R(a, b)} vs floating {F(a, b)}"
    return None


PROPERTIES: dict[str, Property] = {
    "theorem1": prop_theorem1,
    "lemma2a_connected": prop_lemma2a_connected,
    "lemma2b_tree_iff_block": prop_lemma2b_tree_iff_block,
    "construction_equiv": prop_construction_equiv,
    "forster": prop_forster,
    "eq1_bound": prop_eq1_bound,
    "strictness_iff_nonblock": prop_strictness_iff_nonblock,
    "rayleigh": prop_rayleigh,
    "theorem3": prop_theorem3,
    "caro_wei": prop_caro_wei,
    "expectation_avg": prop_expectation_avg,
    "resistance_oracle": prop_resistance_oracle,
}


@dataclass(frozen=True)
class Failure:
    trial: int
    seed: int
    property: str
    detail: str
    graph: str


@dataclass
class FuzzReport:
    trials: int
    master_seed: int
    failures: list[Failure] = field(default_factory=list)
    errors: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "trials": self.trials,
            "master_seed": self.master_seed,
            "failures": [vars(f) for f in self.failures],
            "errors": [vars(f) for f in self.errors],
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def check_property(name: str, g: Graph, seed: int) -> str | None:
    """Run one property; an AssertionError raised inside counts as a violation."""
    try:
        prop = PROPERTIES[name]
    except KeyError:
        raise UsageError(f"unknown property {name!r}") from None
    try:
        return prop(g, seed)
    except AssertionError as exc:
        return f"assertion: {exc}"


def fuzz_run(models: Sequence[GenSpec], trials: int, properties: Sequence[str], master_seed: int) -> FuzzReport:
    """Trial i draws a graph from ``models[i % len(models)]`` with seed derive_seed(master, i)."""
    if not properties:
        raise UsageError("no properties given")
    if not models:
        raise UsageError("no generator models given")
    unknown = [p for p in properties if p not in PROPERTIES]
    if unknown:
        raise UsageError(f"unknown properties: {', '.join(unknown)}")
    start = time.perf_counter()
    report = FuzzReport(trials, master_seed)
    for i in range(trials):
        seed = derive_seed(master_seed, i)
        spec = models[i % len(models)].with_seed(seed)
        try:
            g = gen_graph(spec)
        except ResourceError as exc:
            report.errors.append(Failure(i, seed, "generate", str(exc), ""))
            continue
        text = to_edge_list(g)
        for name in properties:
            try:
                detail = check_property(name, g, seed)
            except ResourceError as exc:
                report.errors.append(Failure(i, seed, name, str(exc), text))
                continue
            if detail is not None:
                report.failures.append(Failure(i, seed, name, detail, text))
    report.elapsed = time.perf_counter() - start
    return report


def replay(failure: Failure) -> str | None:
    return check_property(failure.property, parse_edge_list(failure.graph), failure.seed)
