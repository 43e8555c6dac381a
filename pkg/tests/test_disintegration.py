import random
from dataclasses import replace

from hypothesis import given, settings, strategies as st

from conftest import BATTERY, graphs, rand_graph
from linforest.cliques import binom, count_cliques
from linforest.disintegration import Step, core_mask, disintegrate, verify_step_bound, verify_telescoping
from linforest.forest import delta_f, parse
from linforest.graph import complete_graph, empty_graph, join, min_degree, path_graph


def test_examples():
    tr = disintegrate(path_graph(5), parse("4+2"), 2)
    assert tr.core_order == 0 and len(tr.steps) == 5
    tr = disintegrate(complete_graph(5), parse("5+5"), 3)
    assert tr.core_order == 5 and tr.steps == () and tr.core == complete_graph(5)
    g = join(complete_graph(3), empty_graph(7))
    tr = disintegrate(g, parse("4+4"), 2)
    assert tr.core == g and tr.steps == ()
    star = join(complete_graph(1), empty_graph(9))
    tr = disintegrate(star, parse("2+2"), 2)
    assert tr.core == star and verify_step_bound(tr, parse("2+2"), 2)


def test_lowest_index_tie_break():
    tr = disintegrate(path_graph(5), parse("4+2"), 2)
    assert [st.vertex for st in tr.steps] == [0, 1, 2, 3, 4]
    assert [st.degree for st in tr.steps] == [1, 1, 1, 1, 0]


def test_forged_loss_is_rejected():
    f = parse("5+5")
    s = 3
    tr = disintegrate(path_graph(6), f, s)
    assert verify_step_bound(tr, f, s)
    bad = Step(tr.steps[0].vertex, tr.steps[0].degree, binom(delta_f(f) - 1, s - 1) + 1)
    forged = replace(tr, steps=(bad,) + tr.steps[1:])
    assert not verify_step_bound(forged, f, s)
    assert not verify_telescoping(forged)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12), st.sampled_from(BATTERY), st.integers(1, 6))
def test_trace_invariants(g, text, s):
    f = parse(text)
    d = delta_f(f)
    tr = disintegrate(g, f, s)
    assert all(st.degree < d for st in tr.steps)
    assert all(st.destroyed <= binom(st.degree, s - 1) <= binom(d - 1, s - 1) for st in tr.steps)
    assert tr.core_order == 0 or min_degree(tr.core) >= d
    assert verify_step_bound(tr, f, s)
    assert verify_telescoping(tr)
    assert tr.initial_count == count_cliques(g, s)
    again = disintegrate(tr.core, f, s)
    assert again.steps == () and again.core == tr.core


def test_core_is_independent_of_tie_break():
    rng = random.Random(2024)
    for _ in range(10_000):
        n = rng.randint(0, 30)
        g = rand_graph(rng, n, rng.choice((0.1, 0.3, 0.5)))
        k = rng.randint(1, 6)
        assert core_mask(g, k) == core_mask(g, k, reverse=True)
