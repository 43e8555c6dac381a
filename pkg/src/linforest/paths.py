"""Exact path-structure algorithms and the linear-forest containment decider."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import SizeGuardError
from .forest import LinearForest
from .graph import Graph, bits, components, components_within, is_connected

LONGEST_PATH_GUARD = 24
STRONG_DOMINATING_GUARD = 20
_CAP_EXACT_LIMIT = 12
_MEMO_LIMIT = 2_000_000


@dataclass(frozen=True)
class ForestWitness:
    """Vertex sequences, one per path of the forest, in the forest's order."""

    paths: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph, f: LinearForest) -> bool:
        if len(self.paths) != f.k:
            return False
        seen: set[int] = set()
        for seq, want in zip(self.paths, f.orders):
            if len(seq) != want:
                return False
            for v in seq:
                if not 0 <= v < g.n or v in seen:
                    return False
                seen.add(v)
            if any(not g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                return False
        return True

    def as_lists(self) -> list[list[int]]:
        return [list(p) for p in self.paths]


# -- longest paths -----------------------------------------------------------


def _path_levels(adj: tuple[int, ...], comp: int, stop_at: int | None = None) -> list[dict[int, int]]:
    """Subset DP: ``levels[k][mask]`` = endpoints of paths covering exactly ``mask``."""
    level = {1 << v: 1 << v for v in bits(comp)}
    levels = [{}, level]
    size = comp.bit_count()
    target = size if stop_at is None else min(stop_at, size)
    while len(levels) - 1 < target:
        nxt: dict[int, int] = {}
        for mask, ends in level.items():
            free = comp & ~mask
            for v in bits(ends):
                for u in bits(adj[v] & free):
                    m2 = mask | (1 << u)
                    nxt[m2] = nxt.get(m2, 0) | (1 << u)
        if not nxt:
            break
        levels.append(nxt)
        level = nxt
    return levels


def _greedy_path(adj: tuple[int, ...], comp: int) -> int:
    """Order of some path found by a low-degree-first walk from each start."""
    best = 1
    size = comp.bit_count()
    for s in bits(comp):
        used = 1 << s
        v = s
        length = 1
        while True:
            cand = adj[v] & comp & ~used
            if not cand:
                break
            v = min(bits(cand), key=lambda u: ((adj[u] & comp & ~used).bit_count(), u))
            used |= 1 << v
            length += 1
        best = max(best, length)
        if best == size:
            break
    return best


def _component_longest(adj: tuple[int, ...], comp: int) -> int:
    size = comp.bit_count()
    if size <= 2:
        return size
    if _greedy_path(adj, comp) == size:
        return size
    return len(_path_levels(adj, comp)) - 1


def longest_path_order(g: Graph) -> int:
    """p(G): order of a longest path, by subset DP per component."""
    if g.n > LONGEST_PATH_GUARD:
        raise SizeGuardError(f"longest_path_order is exact only for |G| <= {LONGEST_PATH_GUARD}")
    return max((_component_longest(g.adj, c) for c in components(g)), default=0)


def has_path_of_order(g: Graph, k: int) -> tuple[int, ...] | None:
    """A path with exactly ``k`` vertices, or None; DFS with a failure memo."""
    if k <= 0:
        return ()
    if k > g.n:
        return None
    adj = g.adj
    failed: set[tuple[int, int]] = set()
    path: list[int] = []

    def extend(v: int, used: int) -> bool:
        if len(path) == k:
            return True
        key = (used, v)
        if key in failed:
            return False
        cand = adj[v] & ~used
        for u in sorted(bits(cand), key=lambda u: ((adj[u] & ~used).bit_count(), u)):
            path.append(u)
            if extend(u, used | (1 << u)):
                return True
            path.pop()
        failed.add(key)
        return False

    for comp in components(g):
        if comp.bit_count() < k:
            continue
        for s in sorted(bits(comp), key=lambda u: (adj[u].bit_count(), u)):
            path[:] = [s]
            if extend(s, 1 << s):
                return tuple(path)
    return None


def has_hamiltonian_path(g: Graph) -> bool:
    """True iff p(G) = |G|."""
    if g.n > LONGEST_PATH_GUARD:
        raise SizeGuardError(f"has_hamiltonian_path is exact only for |G| <= {LONGEST_PATH_GUARD}")
    if g.n <= 1:
        return True
    if not is_connected(g):
        return False
    return has_path_of_order(g, g.n) is not None


# -- strong dominating paths ---------------------------------------------------


def has_strong_dominating_path(g: Graph) -> tuple[int, ...] | None:
    """A path P such that every vertex off P has all its neighbours on P.

    Equivalently the complement of V(P) is independent. Shortest such paths
    are found first (level-wise subset DP), so the answer is deterministic.
    """
    if g.n > STRONG_DOMINATING_GUARD:
        raise SizeGuardError(f"has_strong_dominating_path is limited to |G| <= {STRONG_DOMINATING_GUARD}")
    if g.n == 0:
        return None
    adj = g.adj
    full = g.vertex_mask
    best: tuple[int, ...] | None = None
    for comp in components(g):
        levels = _path_levels(adj, comp)
        found = None
        for k in range(1, len(levels)):
            if best is not None and k >= len(best):
                break
            for mask in sorted(levels[k]):
                outside = full & ~mask
                if all(not adj[v] & outside for v in bits(outside)):
                    end = (levels[k][mask] & -levels[k][mask]).bit_length() - 1
                    found = _rebuild(adj, levels, mask, end)
                    break
            if found is not None:
                break
        if found is not None and (best is None or len(found) < len(best)):
            best = found
    return best


def _rebuild(adj: tuple[int, ...], levels: list[dict[int, int]], mask: int, end: int) -> tuple[int, ...]:
    seq = [end]
    k = mask.bit_count()
    while k > 1:
        prev_mask = mask & ~(1 << end)
        ends = levels[k - 1][prev_mask] & adj[end]
        end = (ends & -ends).bit_length() - 1
        seq.append(end)
        mask = prev_mask
        k -= 1
    return tuple(reversed(seq))


# -- containment ---------------------------------------------------------------


def _twin_classes(g: Graph) -> list[int]:
    """Class id per vertex; vertices share an id iff they are true or false twins."""
    cls = list(range(g.n))
    for closed in (False, True):
        first: dict[int, int] = {}
        for v in range(g.n):
            key = g.adj[v] | (1 << v) if closed else g.adj[v]
            if key in first:
                cls[v] = cls[first[key]]
            else:
                first[key] = v
    return cls


def _pack_segments(hosts: Sequence[int], demands: Sequence[int]) -> list[int] | None:
    """Assign each demand to a host so per-host totals fit; host index per demand."""
    order = sorted(range(len(demands)), key=lambda j: -demands[j])
    free = list(hosts)
    assign = [-1] * len(demands)
    failed: set[tuple] = set()

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        key = (idx, tuple(sorted(free)))
        if key in failed:
            return False
        d = demands[order[idx]]
        tried: set[int] = set()
        for h in range(len(free)):
            if free[h] >= d and free[h] not in tried:
                tried.add(free[h])
                free[h] -= d
                assign[order[idx]] = h
                if place(idx + 1):
                    return True
                free[h] += d
        failed.add(key)
        return False

    return assign if place(0) else None


def path_union_components(g: Graph) -> list[tuple[int, ...]] | None:
    """If every component of ``g`` is a path, return each as a vertex sequence."""
    out = []
    for comp in components(g):
        size = comp.bit_count()
        degs = [(g.adj[v] & comp).bit_count() for v in bits(comp)]
        if max(degs) > 2 or sum(degs) != 2 * (size - 1):
            return None
        ends = [v for v in bits(comp) if (g.adj[v] & comp).bit_count() <= 1]
        seq = [ends[0]]
        prev = -1
        while len(seq) < size:
            cur = seq[-1]
            nxt = [u for u in bits(g.adj[cur]) if u != prev][0]
            prev = cur
            seq.append(nxt)
        out.append(tuple(seq))
    return out


def contains_in_path_union(host: Sequence[tuple[int, ...]], f: LinearForest) -> ForestWitness | None:
    """Containment when the host is a disjoint union of paths given as sequences.

    Subpaths of a path are its segments, so F embeds iff the path orders can
    be packed into the host paths by length.
    """
    assign = _pack_segments([len(p) for p in host], f.orders)
    if assign is None:
        return None
    offset = [0] * len(host)
    paths = []
    for j, want in enumerate(f.orders):
        h = assign[j]
        paths.append(tuple(host[h][offset[h]:offset[h] + want]))
        offset[h] += want
    return ForestWitness(tuple(paths))


class _Packer:
    """Backtracking search for vertex-disjoint paths of prescribed orders.

    Symmetry is handled through twin classes: members of one class are
    interchangeable, and whole classes with equal size, twin type and outside
    neighbourhood are interchangeable too. Failed states are memoised up to
    that symmetry.
    """

    def __init__(self, g: Graph, demands: tuple[int, ...]):
        self.g = g
        self.adj = g.adj
        self.demands = demands
        cls = _twin_classes(g)
        self.cls = cls
        members: dict[int, int] = {}
        for v, c in enumerate(cls):
            members[c] = members.get(c, 0) | (1 << v)
        self.members = members
        single = 0
        groups: dict[tuple, list[int]] = {}
        for c, m in members.items():
            if not m & (m - 1):
                single |= m
                continue
            v = (m & -m).bit_length() - 1
            closed = bool(g.adj[v] & m)
            outside = g.adj[v] & ~m
            groups.setdefault((m.bit_count(), closed, outside), []).append(c)
        self.singletons = single
        self.group_of: dict[int, int] = {}
        self.groups: list[list[int]] = []
        for gid, cs in enumerate(groups.values()):
            self.groups.append(cs)
            for c in cs:
                self.group_of[c] = gid
        self.failed: set[tuple] = set()
        self.caps: dict[int, int] = {}
        self.paths: list[list[int]] = []
        # suffix sums of demands
        self.suffix = [sum(demands[i:]) for i in range(len(demands) + 1)]

    def _key(self, i: int, r: int, end: int, used: int) -> tuple:
        end_cls = -1 if end < 0 else self.cls[end]
        parts = []
        for cs in self.groups:
            parts.append(tuple(sorted(
                (used & self.members[c]).bit_count() for c in cs if c != end_cls
            )))
        if end < 0:
            tag: tuple = (-1,)
        elif end_cls in self.group_of:
            tag = (self.group_of[end_cls], (used & self.members[end_cls]).bit_count())
        else:
            tag = (-2, end)
        return (i, r, tag, used & self.singletons, tuple(parts))

    def _cap(self, comp: int) -> int:
        c = self.caps.get(comp)
        if c is None:
            size = comp.bit_count()
            c = _component_longest(self.adj, comp) if size <= _CAP_EXACT_LIMIT else size
            self.caps[comp] = c
        return c

    def _feasible(self, i: int, r: int, end: int, used: int) -> bool:
        free = self.g.vertex_mask & ~used
        need = r + self.suffix[i + 1] if end >= 0 else self.suffix[i]
        if need > free.bit_count():
            return False
        comps = components_within(self.g, free)
        sizes = [(c.bit_count(), self._cap(c), c) for c in comps]
        later = list(self.demands[i + 1:] if end >= 0 else self.demands[i:])
        if end >= 0 and r > 0:
            reach = self.adj[end] & free
            if not any(cap >= r for size, cap, c in sizes if c & reach):
                return False
            later.append(r)
        # paths of order >= x each need x vertices inside one component whose longest path reaches x
        for x in set(later):
            want = sum(1 for d in later if d >= x)
            have = sum(size // x for size, cap, _ in sizes if cap >= x)
            if want > have:
                return False
        return True

    def _branch(self, cand: int, used: int, end: int) -> list[int]:
        adj = self.adj
        end_cls = -1 if end < 0 else self.cls[end]
        seen: set = set()
        out = []
        for v in sorted(bits(cand), key=lambda u: ((adj[u] & ~used).bit_count(), u)):
            c = self.cls[v]
            if c == end_cls or c not in self.group_of:
                sig: tuple = ("c", c)
            else:
                sig = ("g", self.group_of[c], (used & self.members[c]).bit_count())
            if sig in seen:
                continue
            seen.add(sig)
            out.append(v)
        return out

    def search(self, i: int, r: int, end: int, used: int) -> bool:
        """Place paths ``i..`` where the current path still needs ``r`` vertices after ``end``."""
        if end >= 0 and r == 0:
            i, end = i + 1, -1
            if i < len(self.demands):
                r = self.demands[i]
        if i == len(self.demands):
            return True
        key = self._key(i, r, end, used)
        if key in self.failed:
            return False
        if not self._feasible(i, r, end, used):
            if len(self.failed) < _MEMO_LIMIT:
                self.failed.add(key)
            return False
        if end < 0:
            cand = self.g.vertex_mask & ~used
            for v in self._branch(cand, used, end):
                self.paths.append([v])
                if self.search(i, r - 1, v, used | (1 << v)):
                    return True
                self.paths.pop()
        else:
            cand = self.adj[end] & ~used
            for v in self._branch(cand, used, end):
                self.paths[-1].append(v)
                if self.search(i, r - 1, v, used | (1 << v)):
                    return True
                self.paths[-1].pop()
        if len(self.failed) < _MEMO_LIMIT:
            self.failed.add(key)
        return False


def contains_linear_forest(g: Graph, f: LinearForest, fast: bool = True) -> ForestWitness | None:
    """Vertex-disjoint paths of orders ``l_1, ..., l_k`` in ``g``, or None.

    With ``fast`` set, hosts that are themselves unions of paths are decided
    by segment packing instead of search.
    """
    if g.n < sum(f.orders):
        return None
    if fast:
        host = path_union_components(g)
        if host is not None:
            return contains_in_path_union(host, f)
    packer = _Packer(g, f.orders)
    if packer.search(0, f.orders[0], -1, 0):
        return ForestWitness(tuple(tuple(p) for p in packer.paths))
    return None


def is_f_free(g: Graph, f: LinearForest) -> bool:
    return contains_linear_forest(g, f) is None
