import itertools

import pytest
from hypothesis import given, strategies as st

from linforest.errors import HypothesisError, LinforestError
from linforest.forest import (
    LinearForest,
    all_odd,
    case_one_parameter,
    delta_f,
    has_even_component,
    parse,
    require_valid,
    total_order,
    valid_forests,
)


def test_parse_examples():
    assert parse("5+5").orders == (5, 5)
    assert parse("2+4").orders == (4, 2)
    with pytest.raises(LinforestError):
        parse("5+1")
    with pytest.raises(LinforestError):
        parse("5,5")


def test_delta_examples():
    assert delta_f(parse("5+5")) == 3
    assert delta_f(parse("5+5+5")) == 5
    assert delta_f(parse("7+5")) == 4
    assert delta_f(parse("2+2")) == 1


def test_order_and_parity_examples():
    f = parse("5+5")
    assert total_order(f) == 10 and all_odd(f)
    assert has_even_component(parse("4+2"))
    g = parse("7+5+2")
    assert total_order(g) == 14 and has_even_component(g)


@given(st.lists(st.integers(2, 12), min_size=1, max_size=6))
def test_forest_invariants(orders):
    f = LinearForest(orders)
    assert list(f.orders) == sorted(orders, reverse=True)
    assert parse(str(f)) == f
    assert delta_f(f) == sum(x // 2 for x in orders) - 1
    assert all_odd(f) != has_even_component(f)
    assert f.valid == (len(orders) >= 2 and 3 not in orders)


def test_require_valid():
    require_valid(parse("5+5"))
    with pytest.raises(HypothesisError):
        require_valid(parse("5+3"))
    with pytest.raises(HypothesisError):
        require_valid(LinearForest([6]))


def test_valid_forests_against_brute_partitions():
    want = set()
    for k in range(2, 9):
        for combo in itertools.combinations_with_replacement([x for x in range(2, 17) if x != 3], k):
            if sum(combo) <= 16:
                want.add(tuple(sorted(combo, reverse=True)))
    got = [f.orders for f in valid_forests(16)]
    assert len(got) == len(set(got))
    assert set(got) == want


def test_case_one_parameter():
    assert case_one_parameter(parse("4+4")) == 4
    assert case_one_parameter(parse("5+4")) == 4
    assert case_one_parameter(parse("6+5")) == 5
    assert case_one_parameter(parse("7+5")) == 5
    assert case_one_parameter(parse("5+5+2")) == 5
    assert case_one_parameter(parse("5+5")) is None
    assert case_one_parameter(parse("8+6")) is None
    assert case_one_parameter(parse("6+6+2")) is None
