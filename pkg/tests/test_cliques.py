from fractions import Fraction
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import BATTERY, graphs, to_nx
from linforest.cliques import (
    binom,
    clique_vector,
    count_cliques,
    count_cliques_in,
    count_cliques_parallel,
    gf_formula,
    luo_bound,
    odd_pair_value,
    path_turan_lower,
    theorem_value,
    threshold_n,
    threshold_value,
)
from linforest.constructions import apex_over_cliques, build_gf, clique_union
from linforest.errors import HypothesisError, LinforestError
from linforest.forest import delta_f, parse
from linforest.graph import complete_graph, path_graph


def nx_count(g, s):
    return sum(1 for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == s)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=11), st.integers(1, 6))
def test_count_matches_networkx(g, s):
    assert count_cliques(g, s) == nx_count(g, s)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_vector_and_subsets(g):
    vec = clique_vector(g)
    assert vec[0] == 1
    for s in range(1, g.n + 1):
        want = sum(1 for c in itertools.combinations(range(g.n), s)
                   if all(g.has_edge(a, b) for a, b in itertools.combinations(c, 2)))
        assert vec[s] == want


def test_count_examples():
    assert count_cliques(complete_graph(5), 3) == 10
    assert count_cliques(path_graph(5), 2) == 4
    assert count_cliques(path_graph(5), 3) == 0
    assert count_cliques_in(complete_graph(4), 0, 0) == 1
    with pytest.raises(LinforestError):
        count_cliques(path_graph(3), 0)


def test_parallel_count_equals_serial():
    g = build_gf(parse("5+5+5"), 30)
    for s in (2, 3, 4):
        assert count_cliques_parallel(g, s, workers=2) == count_cliques(g, s)


def test_gf_formula_examples():
    assert gf_formula(parse("4+4"), 10, 2) == 24
    assert gf_formula(parse("5+5"), 10, 2) == 25
    assert gf_formula(parse("5+5"), 10, 4) == 10


@pytest.mark.parametrize("text", BATTERY)
def test_gf_formula_matches_count(text):
    f = parse(text)
    d = delta_f(f)
    for n in range(d + 2, 40, 3):
        g = build_gf(f, n)
        for s in range(1, d + 2):
            assert gf_formula(f, n, s) == count_cliques(g, s)


def test_luo_and_path_lower():
    assert luo_bound(4, 2, 9) == 9
    assert luo_bound(4, 2, 10) == Fraction(10)
    assert luo_bound(4, 5, 10) == 0
    assert path_turan_lower(4, 2, 9) == 9
    assert path_turan_lower(5, 3, 13) == 12  # 3 * C(4,3) + C(1,3)
    assert path_turan_lower(2, 2, 17) == 0
    for ell in range(2, 8):
        for n in range(1, 30):
            for s in range(1, ell + 1):
                assert path_turan_lower(ell, s, n) == count_cliques(clique_union(ell, n), s)
                assert path_turan_lower(ell, s, n) <= luo_bound(ell, s, n)


def test_theorem_value_examples():
    f = parse("5+5")
    assert theorem_value(f, 10, 4) == 10
    assert theorem_value(f, 12, 4) == 11
    assert theorem_value(f, 10, 2) == gf_formula(f, 10, 2)
    assert theorem_value(parse("2+2"), 16, 2, path_turan=0) == 15
    with pytest.raises(LinforestError):
        theorem_value(parse("4+4"), 20, 2)
    with pytest.raises(HypothesisError):
        theorem_value(f, 20, 5)


def test_odd_pair_value_matches_apex_construction():
    # K_1 + (q K_{l-1} u K_r) with n - 1 = q(l-1) + r
    for ell in (5, 7):
        for n in range(ell, 40):
            q, r = divmod(n - 1, ell - 1)
            g = apex_over_cliques([ell - 1] * q + ([r] if r else []))
            assert count_cliques(g, ell - 1) == odd_pair_value(ell, n)


def test_threshold_examples():
    assert threshold_n(parse("2+2"), 2) == 16
    assert threshold_value(parse("2+2"), 2) == Fraction(16)
    assert threshold_n(parse("5+5"), 2) == 243
    # C(|F|-1, s) = 0 leaves only delta_F
    f = parse("2+2")
    assert threshold_value(f, 2) - delta_f(f) == Fraction(5 * binom(3, 2) ** 2, 3)
    assert binom(3, 5) == 0 and binom(-1, 0) == 0
