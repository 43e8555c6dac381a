"""Canonical labelling by partition refinement and individualisation.

The search is a small nauty-style tree: refine an ordered partition to an
equitable one, branch on the vertices of the smallest non-singleton cell,
and keep the lexicographically largest relabelled adjacency at the leaves.
Leaves that reproduce the first or the best leaf yield automorphisms, which
prune sibling branches lying in a known orbit. Twin transpositions are seeded
as automorphisms up front since they are free to detect.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formats import to_graph6
from .graph import Graph, bit_tuple, bits

Perm = tuple[int, ...]


def refine(adj: tuple[int, ...] | list[int], cells: list[int]) -> list[int]:
    """Coarsest equitable ordered partition finer than ``cells``.

    Cells are vertex masks. A cell is split by the vector of neighbour counts
    into every current cell; fragments are ordered by that vector, so the
    result depends only on the graph and the input ordering.
    """
    while True:
        out: list[int] = []
        changed = False
        for x in cells:
            if x & (x - 1) == 0:
                out.append(x)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in bit_tuple(x):
                key = tuple(map(int.bit_count, map(adj[v].__and__, cells)))
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) == 1:
                out.append(x)
            else:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
        if not changed:
            return out
        cells = out


def degree_partition(g: Graph) -> list[int]:
    return refine(g.adj, [g.vertex_mask]) if g.n else []


def _twin_generators(g: Graph) -> list[Perm]:
    """Transpositions of true twins (equal closed nbhds) and false twins (equal open nbhds)."""
    n = g.n
    gens: list[Perm] = []
    for closed in (False, True):
        seen: dict[int, int] = {}
        for v in range(n):
            key = g.adj[v] | (1 << v) if closed else g.adj[v]
            if key in seen:
                u = seen[key]
                p = list(range(n))
                p[u], p[v] = v, u
                gens.append(tuple(p))
            seen[key] = v
    return gens


def _relabelled_rows(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for u in bit_tuple(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def _orbit_ids(n: int, gens: list[Perm]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for i, j in enumerate(p):
            a, b = find(i), find(j)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(i) for i in range(n)]


@dataclass
class Labeling:
    """Result of a canonical labelling.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``generators`` generate the full automorphism group.
    """

    order: tuple[int, ...]
    rows: tuple[int, ...]
    generators: list[Perm] = field(default_factory=list)

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def canonical_graph(self) -> Graph:
        return Graph._trusted(len(self.rows), self.rows)

    def certificate(self) -> bytes:
        return to_graph6(self.canonical_graph())


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.n = g.n
        self.first: tuple[list[int], tuple[int, ...]] | None = None
        self.best: tuple[list[int], tuple[int, ...]] | None = None
        self.gens: list[Perm] = _twin_generators(g)

    def _leaf(self, cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        rows = _relabelled_rows(self.adj, order)
        if self.first is None:
            self.first = self.best = (order, rows)
            return
        for ref_order, ref_rows in (self.first, self.best):
            if rows == ref_rows:
                p = [0] * self.n
                for a, b in zip(ref_order, order):
                    p[a] = b
                perm = tuple(p)
                if perm not in self.gens:
                    self.gens.append(perm)
                return
        if rows > self.best[1]:
            self.best = (order, rows)

    def run(self, cells: list[int], prefix: list[int]) -> None:
        cells = refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        # smallest non-singleton cell, first in order among ties
        target = -1
        size = self.n + 1
        for idx, c in enumerate(cells):
            k = c.bit_count()
            if 1 < k < size:
                target, size = idx, k
        cell = cells[target]
        explored: list[int] = []
        seen_gens = -1
        orbit: list[int] = []
        for v in bits(cell):
            if explored:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    fixing = [p for p in self.gens if all(p[w] == w for w in prefix)]
                    orbit = _orbit_ids(self.n, fixing)
                if any(orbit[v] == orbit[w] for w in explored):
                    continue
            child = cells[:target] + [1 << v, cell ^ (1 << v)] + cells[target + 1:]
            self.run(child, prefix + [v])
            explored.append(v)


def canonical_labeling(g: Graph) -> Labeling:
    """Canonical order, canonical adjacency rows and automorphism generators."""
    n = g.n
    if n == 0:
        return Labeling((), (), [])
    cells = refine(g.adj, [g.vertex_mask])
    if len(cells) == n:
        order = [c.bit_length() - 1 for c in cells]
        return Labeling(tuple(order), _relabelled_rows(g.adj, order), [])
    search = _Search(g)
    search.run(cells, [])
    assert search.best is not None
    order, rows = search.best
    return Labeling(tuple(order), rows, search.gens)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism certificate: graph6 bytes of the canonically relabelled graph."""
    return canonical_labeling(g).certificate()


def canonical_graph(g: Graph) -> Graph:
    return canonical_labeling(g).canonical_graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labeling(g).rows == canonical_labeling(h).rows


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (smallest member) for every vertex."""
    return _orbit_ids(g.n, canonical_labeling(g).generators)


def pair_orbits(n: int, gens: list[Perm], pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One representative (the first listed) from each generator orbit of ``pairs``."""
    if not gens:
        return list(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for i, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            j = index.get((x, y) if x < y else (y, x))
            if j is None:
                continue
            ri, rj = find(i), find(j)
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj
    return [p for i, p in enumerate(pairs) if find(i) == i]


def pair_in_orbit(gens: list[Perm], start: tuple[int, int], target: tuple[int, int]) -> bool:
    """Whether the unordered pair ``target`` lies in the generator orbit of ``start``."""
    norm = lambda a, b: (a, b) if a < b else (b, a)  # noqa: E731
    s, t = norm(*start), norm(*target)
    if s == t:
        return True
    seen = {s}
    stack = [s]
    while stack:
        a, b = stack.pop()
        for p in gens:
            q = norm(p[a], p[b])
            if q == t:
                return True
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return False
