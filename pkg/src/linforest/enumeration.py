"""Isomorph-free generation of graphs on a fixed vertex set.

Canonical edge augmentation: start from the empty graph and add one edge at a
time. A child ``C = P + uv`` is kept only when ``uv`` lies in the automorphism
orbit of the canonical deletion edge of ``C``, so every isomorphism class is
produced exactly once. The deletion edge is the edge with the largest
(larger endpoint degree, smaller endpoint degree) pair; ties are broken by
canonical positions. The degree test is cheap and rejects most children
before any labelling is done.

Pruning by F-containment is sound because containment is monotone under
edge addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .canon import Labeling, canonical_labeling, pair_in_orbit, pair_orbits
from .errors import BudgetExceeded, LinforestError
from .forest import LinearForest
from .graph import Graph, bit_tuple, is_connected
from .paths import contains_linear_forest

UNFILTERED_MAX = 10
SHARD_DEPTH = 3


@dataclass(frozen=True)
class EnumFilter:
    connected: bool | None = None
    min_degree: int | None = None
    f_free: LinearForest | None = None
    max_edges: int | None = None

    def accepts(self, g: Graph) -> bool:
        """Output-side checks; F-freeness and the edge cap are enforced during generation."""
        if self.min_degree is not None and g.n and min(g.degrees()) < self.min_degree:
            return False
        if self.connected is not None and is_connected(g) != self.connected:
            return False
        return True


@dataclass
class Found:
    graph: Graph
    certificate: bytes
    edge_maximal: bool  # every missing edge would create F (or break the edge cap)


def _deletion_key_ok(adj: list[int], u: int, v: int) -> bool:
    """Whether uv carries the largest degree pair among all edges of ``adj``."""
    deg = [a.bit_count() for a in adj]
    top = max(deg)
    du, dv = deg[u], deg[v]
    if du < dv:
        du, dv = dv, du
    if du != top:
        return False
    best = 0
    for w, d in enumerate(deg):
        if d == top:
            for x in bit_tuple(adj[w]):
                if deg[x] > best:
                    best = deg[x]
    return dv == best


def _deletion_edge(adj: tuple[int, ...], lab: Labeling) -> tuple[int, int]:
    """Canonical deletion edge: largest degree pair, then smallest canonical positions."""
    deg = [a.bit_count() for a in adj]
    pos = lab.position
    best = None
    best_edge = (0, 0)
    for a in range(len(adj)):
        for b in bit_tuple(adj[a] >> (a + 1)):
            b += a + 1
            da, db = deg[a], deg[b]
            pa, pb = pos[a], pos[b]
            key = (max(da, db), min(da, db), -min(pa, pb), -max(pa, pb))
            if best is None or key > best:
                best, best_edge = key, (a, b)
    return best_edge


def _ties(adj: list[int], u: int, v: int) -> bool:
    """True when some other edge shares uv's degree pair (labelling then needed)."""
    deg = [a.bit_count() for a in adj]
    key = (max(deg[u], deg[v]), min(deg[u], deg[v]))
    for a in range(len(adj)):
        for b in bit_tuple(adj[a] >> (a + 1)):
            b += a + 1
            if (a, b) != (u, v) and (max(deg[a], deg[b]), min(deg[a], deg[b])) == key:
                return True
    return False


class _Generator:
    def __init__(self, n: int, flt: EnumFilter, budget: int | None):
        self.n = n
        self.flt = flt
        # a forest with more vertices than the host can never appear
        self.prune = flt.f_free if flt.f_free is not None and sum(flt.f_free.orders) <= n else None
        self.budget = budget
        self.visited = 0
        self.out: list[Found] = []

    def _tick(self) -> None:
        self.visited += 1
        if self.budget is not None and self.visited > self.budget:
            raise BudgetExceeded(self.budget, self.visited, "enumeration")

    def children(self, g: Graph, lab: Labeling) -> tuple[list[tuple[Graph, Labeling]], bool]:
        """Accepted children of ``g`` and whether ``g`` is edge-maximal under the filter."""
        n = self.n
        flt = self.flt
        non_edges = [(a, b) for a in range(n) for b in range(a + 1, n) if not (g.adj[a] >> b) & 1]
        if not non_edges:
            return [], True
        if flt.max_edges is not None and g.num_edges >= flt.max_edges:
            return [], True
        reps = pair_orbits(n, lab.generators, non_edges)
        kids: list[tuple[Graph, Labeling]] = []
        maximal = True
        for u, v in reps:
            adj = list(g.adj)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if self.prune is not None:
                child = Graph._trusted(n, tuple(adj))
                if contains_linear_forest(child, self.prune) is not None:
                    continue
                maximal = False
            else:
                maximal = False
            if not _deletion_key_ok(adj, u, v):
                continue
            child = Graph._trusted(n, tuple(adj))
            clab = canonical_labeling(child)
            if _ties(adj, u, v):
                e = _deletion_edge(child.adj, clab)
                if not pair_in_orbit(clab.generators, e, (u, v)):
                    continue
            kids.append((child, clab))
        return kids, maximal

    def walk(self, g: Graph, lab: Labeling) -> None:
        stack = [(g, lab)]
        while stack:
            cur, clab = stack.pop()
            self._tick()
            kids, maximal = self.children(cur, clab)
            if self.flt.accepts(cur):
                self.out.append(Found(clab.canonical_graph(), clab.certificate(), maximal))
            stack.extend(reversed(kids))

    def frontier(self, depth: int) -> list[tuple[Graph, Labeling]]:
        """Nodes at ``depth`` edges; shallower nodes are emitted directly."""
        level = [(Graph._trusted(self.n, (0,) * self.n), canonical_labeling(Graph._trusted(self.n, (0,) * self.n)))]
        for _ in range(depth):
            nxt = []
            for cur, clab in level:
                self._tick()
                kids, maximal = self.children(cur, clab)
                if self.flt.accepts(cur):
                    self.out.append(Found(clab.canonical_graph(), clab.certificate(), maximal))
                nxt.extend(kids)
            level = nxt
        return level


def _check(n: int, flt: EnumFilter, budget: int | None) -> None:
    if n < 0 or n > 64:
        raise LinforestError(f"n={n} out of range 0..64")
    if n > UNFILTERED_MAX and (flt.f_free is None or budget is None):
        raise LinforestError(f"n={n} > {UNFILTERED_MAX} needs an f_free filter and a budget")


def _run_shard(task: tuple[int, EnumFilter, int | None, bytes]) -> tuple[list[Found], int]:
    from .formats import from_graph6

    n, flt, budget, g6 = task
    gen = _Generator(n, flt, budget)
    g = from_graph6(g6)
    gen.walk(g, canonical_labeling(g))
    return gen.out, gen.visited


def enumerate_found(
    n: int, flt: EnumFilter | None = None, budget: int | None = None, workers: int = 1
) -> list[Found]:
    """All classes passing ``flt``, sorted by certificate, with edge-maximality flags."""
    flt = flt or EnumFilter()
    _check(n, flt, budget)
    if n == 0:
        g = Graph._trusted(0, ())
        return [Found(g, canonical_labeling(g).certificate(), True)] if flt.accepts(g) else []
    gen = _Generator(n, flt, budget)
    if workers <= 1:
        empty = Graph._trusted(n, (0,) * n)
        gen.walk(empty, canonical_labeling(empty))
        out = gen.out
    else:
        from .formats import to_graph6
        from .parallel import run_ordered

        shards = gen.frontier(SHARD_DEPTH)
        # shards start from canonical graphs, so their generators must be recomputed there
        tasks = [(n, flt, budget, to_graph6(lab.canonical_graph())) for _, lab in shards]
        out = gen.out
        total = gen.visited
        for found, visited in run_ordered(_run_shard, tasks, workers):
            out.extend(found)
            total += visited
        if budget is not None and total > budget:
            raise BudgetExceeded(budget, total, "enumeration")
    out.sort(key=lambda f: f.certificate)
    return out


def enumerate_graphs(
    n: int, flt: EnumFilter | None = None, budget: int | None = None, workers: int = 1
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class passing the filter."""
    for f in enumerate_found(n, flt, budget, workers):
        yield f.graph


def labelled_dedup(n: int, keep: Callable[[Graph], bool] | None = None) -> set[bytes]:
    """Reference oracle: certificates of all 2^C(n,2) labelled graphs, deduplicated."""
    from itertools import combinations

    pairs = list(combinations(range(n), 2))
    seen: set[bytes] = set()
    for m in range(1 << len(pairs)):
        adj = [0] * n
        for i, (a, b) in enumerate(pairs):
            if (m >> i) & 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        g = Graph._trusted(n, tuple(adj))
        if keep is None or keep(g):
            seen.add(canonical_labeling(g).certificate())
    return seen
