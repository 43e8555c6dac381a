import pytest

from linforest.enumeration import enumerate_graphs
from linforest.errors import SizeGuardError
from linforest.forest import parse, valid_forests
from linforest.graph import complete_graph, cycle_graph, disjoint_union, from_edges, join, empty_graph
from linforest.lemmas import (
    chvatal_erdos_holds,
    claw2_check,
    claw_check,
    dirac_holds,
    lemma_check,
    middle_host_free,
    property_sweep,
    short_host_free,
)


def test_predicted_lists():
    free = {str(f) for f in valid_forests(16) if short_host_free(f)}
    assert free == {"2+2", "4+4", "5+4", "5+5", "6+5", "7+5", "6+6", "5+5+2", "7+6",
                    "7+7", "8+7", "9+7", "8+8", "7+7+2"}
    assert short_host_free(parse("5+5+5+5+5"))
    assert not short_host_free(parse("8+6"))  # l = 6 is even
    assert {str(f) for f in valid_forests(16) if middle_host_free(f)} == {"5+5", "7+7"}


def test_claw_sweeps_pass_on_both_routes():
    for fast in (True, False):
        assert claw_check(16, fast)["mismatches"] == []
        assert claw2_check(16, fast)["mismatches"] == []


def test_five_p5_beyond_the_sweep():
    # |F| = 25: checked on its own since the sweep stops at 16
    from linforest.lemmas import host
    from linforest.paths import contains_linear_forest

    f = parse("5+5+5+5+5")
    assert contains_linear_forest(host(f, 0), f) is None
    assert contains_linear_forest(host(f, 2), f) is not None


def test_sweep_guard():
    with pytest.raises(SizeGuardError):
        claw_check(40)
    with pytest.raises(SizeGuardError):
        property_sweep("dirac", 12)


def test_dirac_and_chvatal_erdos_examples():
    assert dirac_holds(cycle_graph(9))
    assert dirac_holds(join(complete_graph(2), empty_graph(5)))
    # alpha = 3 > kappa + 1 = 2: the lemma makes no claim; K_{2,5} has no hamiltonian path
    assert chvatal_erdos_holds(join(empty_graph(2), empty_graph(5)))
    assert chvatal_erdos_holds(disjoint_union(complete_graph(3), complete_graph(3)))


def test_property_sweeps_small():
    for which in ("dirac", "chvatal-erdos"):
        rep = lemma_check(which, 7)
        assert rep["verdict"] == "PASS"
        assert rep["graphs"] == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_unknown_check():
    with pytest.raises(ValueError):
        lemma_check("nope", 3)
