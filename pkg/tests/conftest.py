import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from linforest.graph import Graph, from_edges

BATTERY = ["2+2", "4+2", "4+4", "5+5", "5+4", "7+5", "5+5+5", "5+5+2"]


def rand_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_contains(g: Graph, orders) -> bool:
    """Try every ordered tuple of distinct vertices, cut into consecutive runs."""
    total = sum(orders)
    for tup in itertools.permutations(range(g.n), total):
        k = 0
        ok = True
        for length in orders:
            seg = tup[k:k + length]
            k += length
            if any(not g.has_edge(a, b) for a, b in zip(seg, seg[1:])):
                ok = False
                break
        if ok:
            return True
    return False


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
