import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import graphs, naive_contains, rand_graph
from linforest.constructions import apex_cliques, base_plus_k4, path_union
from linforest.errors import SizeGuardError
from linforest.forest import LinearForest, parse
from linforest.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    join,
    path_graph,
)
from linforest.paths import (
    ForestWitness,
    contains_linear_forest,
    has_hamiltonian_path,
    has_path_of_order,
    has_strong_dominating_path,
    longest_path_order,
)


def brute_longest(g):
    best = min(g.n, 1)
    for k in range(2, g.n + 1):
        for tup in itertools.permutations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in zip(tup, tup[1:])):
                best = k
                break
    return best


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_longest_path_matches_brute(g):
    p = longest_path_order(g)
    assert p == brute_longest(g)
    assert has_hamiltonian_path(g) == (p == g.n)
    for k in range(1, g.n + 1):
        path = has_path_of_order(g, k)
        assert (path is not None) == (k <= p)
        if path:
            assert len(set(path)) == k and all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_longest_path_examples():
    assert longest_path_order(apex_cliques(5, 3)) == 9
    assert has_hamiltonian_path(path_graph(6))
    assert not has_hamiltonian_path(join(complete_graph(1), empty_graph(3)))
    with pytest.raises(SizeGuardError):
        longest_path_order(cycle_graph(40).remove_edge(0, 1).add_edge(0, 20).add_edge(5, 30))


def test_containment_examples():
    assert contains_linear_forest(path_union((7, 5)), parse("5+5")) is not None
    assert contains_linear_forest(path_union((7, 4)), parse("5+5")) is None
    assert contains_linear_forest(path_union((7, 3)), parse("5+5")) is None
    w = contains_linear_forest(path_graph(4), parse("2+2"))
    assert w is not None and w.validate(path_graph(4), parse("2+2"))


def test_containment_matches_naive_oracle():
    rng = random.Random(11)
    checked = 0
    for _ in range(400):
        n = rng.randint(1, 7)
        g = rand_graph(rng, n, rng.random())
        orders = [rng.choice([2, 3, 4, 5, 6]) for _ in range(rng.randint(1, 3))]
        if sum(orders) > 7:
            continue
        f = LinearForest(orders)
        for fast in (True, False):
            w = contains_linear_forest(g, f, fast=fast)
            assert (w is not None) == naive_contains(g, f.orders)
            if w is not None:
                assert w.validate(g, f)
        checked += 1
    assert checked > 150


def test_path_union_fast_route_matches_general():
    for a in range(1, 12):
        for b in range(0, a + 1):
            host = path_union((a, b))
            for text in ("5+5", "4+4", "5+4", "7+5", "2+2+2", "6+2"):
                f = parse(text)
                assert (contains_linear_forest(host, f, fast=True) is None) == \
                       (contains_linear_forest(host, f, fast=False) is None)


def test_witness_validation_negative():
    g = path_graph(4)
    f = parse("2+2")
    assert not ForestWitness(((0, 1), (1, 2))).validate(g, f)
    assert not ForestWitness(((0, 2), (1, 3))).validate(g, f)
    assert not ForestWitness(((0, 1),)).validate(g, f)


def test_exceptional_families_are_free():
    for ell, forests in [(5, ["6+5", "7+5", "5+5+2", "5+5"]), (4, ["4+4", "5+4"]), (6, ["6+6", "7+6"])]:
        for t in range(1, 13):
            if 1 + t * (ell - 1) > 64:
                break
            g = apex_cliques(ell, t)
            for text in forests:
                assert contains_linear_forest(g, parse(text)) is None
    for t in range(1, 16):
        for base in ("K2", "E2"):
            assert contains_linear_forest(base_plus_k4(base, t), parse("5+5+5")) is None


def brute_strong_dominating(g):
    for k in range(1, g.n + 1):
        for tup in itertools.permutations(range(g.n), k):
            if any(not g.has_edge(a, b) for a, b in zip(tup, tup[1:])):
                continue
            on = set(tup)
            if all(set(g.neighbors(v)) <= on for v in range(g.n) if v not in on):
                return True
    return False


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_strong_dominating_matches_brute(g):
    p = has_strong_dominating_path(g)
    assert (p is not None) == brute_strong_dominating(g)
    if p is not None:
        on = set(p)
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
        assert all(set(g.neighbors(v)) <= on for v in range(g.n) if v not in on)


def test_strong_dominating_examples():
    assert has_strong_dominating_path(join(complete_graph(1), empty_graph(5))) is not None
    p = has_strong_dominating_path(join(complete_graph(3), empty_graph(4)))
    assert p is not None and set(p) == {0, 1, 2}
    assert has_strong_dominating_path(from_edges(6, [(0, 1), (2, 3), (4, 5)])) is None
