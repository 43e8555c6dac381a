"""Classification of F-free connected graphs with large minimum degree.

A graph meeting the hypotheses (connected, min degree >= delta_F,
n >= 2|F|, F-free) should be a subgraph of G_F(n) or belong to one of three
exceptional families. :func:`classify` reports the first family that fits,
with a witness that :func:`witness_ok` re-checks from scratch.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .constructions import apex_mixed
from .enumeration import EnumFilter, enumerate_found
from .forest import (
    LinearForest,
    all_odd,
    case_one_parameter,
    delta_f,
    format_forest,
    is_two_equal_odd,
    total_order,
)
from .formats import to_graph6
from .graph import (
    Graph,
    bit_tuple,
    bits,
    components,
    components_within,
    delete,
    is_complete,
    is_connected,
    min_degree,
)
from .paths import contains_linear_forest

SUBGRAPH_OF_GF = "SUBGRAPH_OF_GF"
APEX_CLIQUES = "APEX_CLIQUES"
APEX_MIXED = "APEX_MIXED"
THREE_P5_EXCEPTION = "THREE_P5_EXCEPTION"
HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"
UNCLASSIFIED = "UNCLASSIFIED"
VERDICTS = (SUBGRAPH_OF_GF, APEX_CLIQUES, APEX_MIXED, THREE_P5_EXCEPTION, HYPOTHESIS_FAIL, UNCLASSIFIED)


@dataclass(frozen=True)
class ClassificationVerdict:
    case: str
    witness: dict = field(default_factory=dict)
    reasons: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"case": self.case, "witness": self.witness, "reasons": list(self.reasons)}


def _edge_count(adj: tuple[int, ...], alive: int) -> int:
    return sum((adj[v] & alive).bit_count() for v in bit_tuple(alive)) // 2


def _cover(adj: tuple[int, ...], alive: int, k: int, allow: int) -> int | None:
    """A set (mask) of at most k vertices leaving at most ``allow`` edges in ``alive``."""
    # forced picks: a vertex of degree > k + allow must be taken
    forced = 0
    while True:
        hit = 0
        for v in bit_tuple(alive):
            if (adj[v] & alive).bit_count() > k + allow:
                hit = 1 << v
                break
        if not hit:
            break
        if k == 0:
            return None
        forced |= hit
        alive &= ~hit
        k -= 1
    m = _edge_count(adj, alive)
    if m <= allow:
        return forced
    # every remaining degree is <= k + allow, so k picks cover at most k(k + allow) edges
    if m > k * (k + allow) + allow:
        return None
    if k == 0:
        return None
    u = v = -1
    for x in bit_tuple(alive):
        nb = adj[x] & alive
        if nb:
            u, v = x, (nb & -nb).bit_length() - 1
            break
    for pick in (u, v):
        got = _cover(adj, alive & ~(1 << pick), k - 1, allow)
        if got is not None:
            return forced | got | (1 << pick)
    if allow:
        # uv is the one edge left uncovered; everything else must be covered
        a2 = list(adj)
        a2[u] &= ~(1 << v)
        a2[v] &= ~(1 << u)
        got = _cover(tuple(a2), alive, k, 0)
        if got is not None:
            return forced | got
    return None


def is_subgraph_of_gf(g: Graph, f: LinearForest) -> int | None:
    """S with |S| = delta_F such that G - S has no edge (at most one if all paths are odd)."""
    d = delta_f(f)
    if g.n < d:
        return None
    allow = 1 if all_odd(f) else 0
    s = _cover(g.adj, g.vertex_mask, d, allow)
    if s is None:
        return None
    for v in range(g.n):
        if s.bit_count() >= d:
            break
        s |= 1 << v
    return s


def _apex_clique_split(g: Graph, size: int) -> int | None:
    """An apex vertex v of degree n-1 such that G - v is a disjoint union of K_size."""
    if size < 1 or (g.n - 1) % size:
        return None
    for v in range(g.n):
        if g.degree(v) != g.n - 1:
            continue
        rest = g.vertex_mask & ~(1 << v)
        comps = components_within(g, rest)
        if all(c.bit_count() == size and is_complete(g, c) for c in comps):
            return v
    return None


def _base_k4_split(g: Graph) -> tuple[int, int, str] | None:
    """Base pair {a, b} joined to everything else, with G - {a, b} = tK_4."""
    n = g.n
    if n < 6 or (n - 2) % 4:
        return None
    full = g.vertex_mask
    cands = [v for v in range(n) if g.degree(v) >= n - 2]
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            base = (1 << a) | (1 << b)
            rest = full & ~base
            if any(g.adj[x] & rest != rest for x in (a, b)):
                continue
            comps = components_within(g, rest)
            if all(c.bit_count() == 4 and is_complete(g, c) for c in comps):
                return a, b, ("K2" if g.has_edge(a, b) else "E2")
    return None


def _pack_exact(sizes: list[int], big: int, small: int, total: int) -> tuple[int, int, list[list[int]]] | None:
    """Split component orders into bins of capacity big/small, every bin filled exactly.

    Bins must cover ``total`` exactly (t1*big + t2*small == total). Returns
    (t1, t2, bins) with bins listing component indices.
    """
    order = sorted(range(len(sizes)), key=lambda i: -sizes[i])
    for t1 in range(total // big, -1, -1):
        rest = total - t1 * big
        if rest % small:
            continue
        t2 = rest // small
        caps = [big] * t1 + [small] * t2
        load = [0] * len(caps)
        members: list[list[int]] = [[] for _ in caps]

        def place(j: int) -> bool:
            if j == len(order):
                return all(l == c for l, c in zip(load, caps))
            i = order[j]
            tried = set()
            for b, c in enumerate(caps):
                key = (c, load[b])
                if key in tried or load[b] + sizes[i] > c:
                    continue
                tried.add(key)
                load[b] += sizes[i]
                members[b].append(i)
                if place(j + 1):
                    return True
                load[b] -= sizes[i]
                members[b].pop()
            return False

        if place(0):
            return t1, t2, members
    return None


def apex_mixed_witness(g: Graph, ell: int) -> dict | None:
    """Apex v and an exact packing of the components of G - v into bins of
    capacity l-1 and l-2 whose capacities sum to n - 1."""
    for v in range(g.n):
        rest = g.vertex_mask & ~(1 << v)
        comps = components_within(g, rest)
        sizes = [c.bit_count() for c in comps]
        if max(sizes, default=0) > ell - 1:
            continue
        packed = _pack_exact(sizes, ell - 1, ell - 2, g.n - 1)
        if packed is None:
            continue
        t1, t2, members = packed
        bins = [sorted(v2 for i in m for v2 in bits(comps[i])) for m in members]
        return {"apex": v, "t1": t1, "t2": t2, "bins": bins}
    return None


def weak_apex(g: Graph, ell: int) -> int | None:
    """Some v with every component of G - v of order at most l-1."""
    for v in range(g.n):
        rest = g.vertex_mask & ~(1 << v)
        if all(c.bit_count() <= ell - 1 for c in components_within(g, rest)):
            return v
    return None


def hypothesis_failures(g: Graph, f: LinearForest, check_free: bool = True) -> list[str]:
    out = []
    if not f.valid:
        out.append("forest must have k >= 2 and no path of order 3")
    if not is_connected(g):
        out.append("graph is not connected")
    d = delta_f(f)
    if g.n == 0 or min_degree(g) < d:
        out.append(f"min degree below delta_F = {d}")
    if g.n < 2 * total_order(f):
        out.append(f"n = {g.n} is below 2|F| = {2 * total_order(f)}")
    if check_free and not out and contains_linear_forest(g, f) is not None:
        out.append("graph contains F")
    return out


def classify(g: Graph, f: LinearForest, check_free: bool = True) -> ClassificationVerdict:
    """First matching family in the order SUBGRAPH_OF_GF, APEX_CLIQUES, APEX_MIXED,
    THREE_P5_EXCEPTION; HYPOTHESIS_FAIL when a hypothesis is violated."""
    fails = hypothesis_failures(g, f, check_free)
    if fails:
        return ClassificationVerdict(HYPOTHESIS_FAIL, {}, tuple(fails))
    s = is_subgraph_of_gf(g, f)
    if s is not None:
        return ClassificationVerdict(SUBGRAPH_OF_GF, {"cover": list(bits(s))})
    odd_pair = is_two_equal_odd(f)
    ell = case_one_parameter(f)
    if ell is None and odd_pair:
        ell = f.longest
    if ell is not None:
        v = _apex_clique_split(g, ell - 1)
        if v is not None:
            return ClassificationVerdict(APEX_CLIQUES, {"apex": v, "ell": ell, "t": (g.n - 1) // (ell - 1)})
    if odd_pair:
        w = apex_mixed_witness(g, f.longest)
        if w is not None:
            return ClassificationVerdict(APEX_MIXED, w)
    if f.orders == (5, 5, 5):
        split = _base_k4_split(g)
        if split is not None:
            a, b, base = split
            return ClassificationVerdict(THREE_P5_EXCEPTION, {"base": [a, b], "type": base, "t": (g.n - 2) // 4})
    return ClassificationVerdict(UNCLASSIFIED, {"graph6": to_graph6(g).decode()})


def witness_ok(g: Graph, f: LinearForest, v: ClassificationVerdict) -> bool:
    """Re-check a verdict's witness directly against the definitions."""
    w = v.witness
    if v.case == SUBGRAPH_OF_GF:
        cover = w["cover"]
        rest = g.vertex_mask
        for x in cover:
            rest &= ~(1 << x)
        return len(set(cover)) == delta_f(f) and _edge_count(g.adj, rest) <= (1 if all_odd(f) else 0)
    if v.case == APEX_CLIQUES:
        a, size = w["apex"], w["ell"] - 1
        if g.degree(a) != g.n - 1:
            return False
        comps = components(delete(g, 1 << a))
        return all(c.bit_count() == size and is_complete(delete(g, 1 << a), c) for c in comps)
    if v.case == APEX_MIXED:
        ell = f.longest
        a = w["apex"]
        owner = {}
        for i, b in enumerate(w["bins"]):
            if len(b) not in (ell - 1, ell - 2):
                return False
            for x in b:
                owner[x] = i
        if sorted(owner) != [x for x in range(g.n) if x != a]:
            return False
        # an edge of G - apex inside one bin is allowed; across bins is not
        return all(owner[x] == owner[y] for x, y in g.edges() if a not in (x, y))
    if v.case == THREE_P5_EXCEPTION:
        a, b = w["base"]
        if g.has_edge(a, b) != (w["type"] == "K2"):
            return False
        return _base_k4_split(g) is not None
    return v.case in (HYPOTHESIS_FAIL, UNCLASSIFIED)


@dataclass
class AuditReport:
    forest: str
    n: int
    in_hypothesis: bool
    total: int = 0
    counts: dict = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    weak_apex: int | None = None  # 2P_l (l odd): graphs passing the weaker apex test
    strict_apex: int | None = None

    def as_dict(self) -> dict:
        return {
            "forest": self.forest,
            "n": self.n,
            "in_hypothesis": self.in_hypothesis,
            "total": self.total,
            "counts": self.counts,
            "counterexamples": self.counterexamples,
            "weak_apex": self.weak_apex,
            "strict_apex": self.strict_apex,
        }


def audit_theorem1(f: LinearForest, n: int, budget: int | None = None, workers: int = 1) -> AuditReport:
    """Classify every connected F-free graph on n vertices with min degree >= delta_F."""
    flt = EnumFilter(connected=True, min_degree=delta_f(f), f_free=f)
    rep = AuditReport(format_forest(f), n, n >= 2 * total_order(f))
    counts: Counter = Counter()
    odd_pair = is_two_equal_odd(f)
    weak = strict = 0
    for found in enumerate_found(n, flt, budget, workers):
        g = found.graph
        rep.total += 1
        v = classify(g, f, check_free=False)
        counts[v.case] += 1
        if v.case == UNCLASSIFIED:
            rep.counterexamples.append(found.certificate.decode())
        if odd_pair:
            weak += weak_apex(g, f.longest) is not None
            strict += apex_mixed_witness(g, f.longest) is not None
    rep.counts = {k: counts.get(k, 0) for k in VERDICTS}
    if odd_pair:
        rep.weak_apex, rep.strict_apex = weak, strict
    return rep


def sample_apex_mixed(ell: int, t1: int, t2: int, rng: random.Random, removals: int) -> Graph:
    """K_1+(t1 K_{l-1} u t2 K_{l-2}) with up to ``removals`` random edges deleted,
    keeping min degree >= l-2 and connectivity."""
    g = apex_mixed(ell, t1, t2)
    edges = g.edges()
    rng.shuffle(edges)
    done = 0
    for a, b in edges:
        if done >= removals:
            break
        if g.degree(a) <= ell - 2 or g.degree(b) <= ell - 2:
            continue
        h = g.remove_edge(a, b)
        if is_connected(h):
            g = h
            done += 1
    return g


def sampling_audit(ell: int, n: int, samples: int, seed: int = 0) -> dict:
    """Classify random edge-deleted members of the mixed apex family for F = 2P_l."""
    f = LinearForest((ell, ell))
    rng = random.Random(seed)
    shapes = [(t1, (n - 1 - t1 * (ell - 1)) // (ell - 2))
              for t1 in range((n - 1) // (ell - 1) + 1)
              if (n - 1 - t1 * (ell - 1)) % (ell - 2) == 0]
    counts: Counter = Counter()
    bad = []
    for _ in range(samples):
        t1, t2 = rng.choice(shapes)
        g = sample_apex_mixed(ell, t1, t2, rng, rng.randint(0, 3 * n))
        v = classify(g, f)
        counts[v.case] += 1
        if v.case not in (APEX_MIXED, APEX_CLIQUES, SUBGRAPH_OF_GF) or not witness_ok(g, f, v):
            bad.append(to_graph6(g).decode())
    return {"forest": format_forest(f), "n": n, "samples": samples, "seed": seed,
            "counts": {k: counts.get(k, 0) for k in VERDICTS}, "failures": bad}
