"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit row per vertex, so a vertex set is a
single machine-word mask and neighbourhood intersection is a bitwise ``&``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphOrderError, LinforestError

MAX_ORDER = 64

# A vertex set is a plain int mask; bit i set means vertex i is a member.
VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


_SMALL = 1 << 12
_SMALL_BITS: list[tuple[int, ...]] = [()] * _SMALL
for _m in range(1, _SMALL):
    _low = (_m & -_m).bit_length() - 1
    _SMALL_BITS[_m] = (_low,) + _SMALL_BITS[_m & (_m - 1)]


def bit_tuple(mask: int) -> tuple[int, ...]:
    """Same as ``tuple(bits(mask))``; table lookup for masks below 2**12."""
    if mask < _SMALL:
        return _SMALL_BITS[mask]
    return tuple(bits(mask))


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_order(n: int) -> None:
    if n < 0:
        raise LinforestError(f"negative vertex count {n}")
    if n > MAX_ORDER:
        raise GraphOrderError(f"graph order {n} exceeds the cap of {MAX_ORDER}")


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the neighbour mask of ``v``. Instances are validated on
    construction and never mutated afterwards.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise LinforestError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise LinforestError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise LinforestError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise LinforestError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # hot-path constructor for rows already known to be valid
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    # -- basic queries -------------------------------------------------
    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise LinforestError(f"invalid edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, adj)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for u in bits(self.adj[v]):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph._trusted(self.n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    _check_order(n)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise LinforestError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise LinforestError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise LinforestError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the null graph."""
    return min((row.bit_count() for row in g.adj), default=0)


def max_degree(g: Graph) -> int:
    return max((row.bit_count() for row in g.adj), default=0)


def component_of(g: Graph, v: int, within: VertexSet | None = None) -> VertexSet:
    """Vertex mask of the component containing ``v`` inside ``within``."""
    allowed = g.vertex_mask if within is None else within
    seen = 1 << v
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components_within(g: Graph, within: VertexSet) -> list[VertexSet]:
    out = []
    rest = within
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, v, within)
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    """Connected components as masks, ordered by their lowest vertex."""
    return components_within(g, g.vertex_mask)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_of(g, 0) == g.vertex_mask


def induced(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled in increasing vertex order."""
    keep = list(bits(s & g.vertex_mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for u in bits(g.adj[v] & s):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(len(keep), rows)


def delete(g: Graph, s: VertexSet) -> Graph:
    """``G - S`` with order-preserving compaction of the survivors."""
    return induced(g, g.vertex_mask & ~s)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_order(g.n + h.n)
    shift = g.n
    return Graph._trusted(g.n + h.n, list(g.adj) + [row << shift for row in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    """``G + H``: disjoint union plus every edge between the two parts."""
    _check_order(g.n + h.n)
    gm = g.vertex_mask
    hm = h.vertex_mask << g.n
    rows = [row | hm for row in g.adj] + [(row << g.n) | gm for row in h.adj]
    return Graph._trusted(g.n + h.n, rows)


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty_graph(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def is_complete(g: Graph, within: VertexSet | None = None) -> bool:
    s = g.vertex_mask if within is None else within
    return all((g.adj[v] | (1 << v)) & s == s for v in bits(s))


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


# -- structural parameters --------------------------------------------------


def independence_number(g: Graph) -> int:
    """Exact alpha(G) by branch and bound over candidate masks."""
    adj = g.adj
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            # vertices of degree <= 1 inside cand can always be taken
            pick = -1
            hub, hub_deg = -1, -1
            for v in bits(cand):
                d = (adj[v] & cand).bit_count()
                if d <= 1:
                    pick = v
                    break
                if d > hub_deg:
                    hub, hub_deg = v, d
            if pick >= 0:
                cand &= ~(adj[pick] | (1 << pick))
                size += 1
                continue
            grow(cand & ~(adj[hub] | (1 << hub)), size + 1)
            cand &= ~(1 << hub)
        best = max(best, size)

    grow(g.vertex_mask, 0)
    return best


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    # vertex splitting: v_in = 2v, v_out = 2v+1, unit capacities
    cap: dict[tuple[int, int], int] = {}
    nbrs: dict[int, set[int]] = {}

    def arc(a: int, b: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)

    for v in range(g.n):
        if v not in (s, t):
            arc(2 * v, 2 * v + 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v)
        arc(2 * v + 1, 2 * u)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {src: src}
        queue = deque([src])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(nbrs.get(a, ())):
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != src:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def connectivity(g: Graph) -> int:
    """Vertex connectivity kappa(G); kappa(K_n) = n - 1 and kappa = 0 if disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    best = n - 1
    for i in range(n):
        if i > best:
            break
        for j in range(n):
            if j != i and not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j))
    return best


def has_separator_smaller_than(g: Graph, k: int) -> bool:
    """True iff some vertex set of size < k disconnects G (or leaves <= 1 vertex).

    Equivalent to ``connectivity(g) < k`` but enumerates candidate separators
    smallest-first, which is fast when either kappa or k is small.
    """
    n = g.n
    if k > n - 1:
        return True
    full = g.vertex_mask
    for size in range(0, k):
        for sep in combinations(range(n), size):
            m = mask_of(sep)
            rest = full & ~m
            v = (rest & -rest).bit_length() - 1
            if component_of(g, v, rest) != rest:
                return True
    return False


def sigma3(g: Graph) -> float | int:
    """Minimum degree sum over independent triples; ``math.inf`` if none exist."""
    deg = g.degrees()
    full = g.vertex_mask
    best: float | int = math.inf
    for u in range(g.n):
        non_u = full & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(non_u):
            common = non_u & ~g.adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                dw = min(deg[w] for w in bits(common))
                best = min(best, deg[u] + deg[v] + dw)
    return best
