"""Builders for the explicit graph families.

Vertex order is canonical so that graph6 output is reproducible: clique or
apex vertices first, then attached edges, then the independent part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

from .errors import ConstraintError, GraphOrderError, LinforestError
from .forest import LinearForest, all_odd, delta_f
from .graph import (
    MAX_ORDER,
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
    path_graph,
    union_all,
)

# e_j endpoint (0 or 1) -> clique vertex, one entry per cross edge
Attachment = Sequence[Sequence[tuple[int, int]]]


def _fits(n: int) -> None:
    if n > MAX_ORDER:
        raise GraphOrderError(f"construction needs {n} vertices, cap is {MAX_ORDER}")


def build_gf(f: LinearForest, n: int) -> Graph:
    """``K_d + E_{n-d}``, or ``K_d + (K_2 u E_{n-d-2})`` when every path is odd."""
    d = delta_f(f)
    if n < d + 2:
        raise LinforestError(f"n={n} is below delta_F + 2 = {d + 2}")
    _fits(n)
    rest = empty_graph(n - d)
    if all_odd(f):
        rest = rest.add_edge(0, 1)
    return join(complete_graph(d), rest)


def default_attachment(k: int, i: int) -> list[list[tuple[int, int]]]:
    """Disjoint clique pairs while they last, then single cross edges."""
    d = 2 * k - 1
    out: list[list[tuple[int, int]]] = []
    nxt = 0
    singles = 0
    for _ in range(i):
        if nxt + 1 < d:
            out.append([(0, nxt), (1, nxt + 1)])
            nxt += 2
        elif nxt < d and singles < 2:
            out.append([(0, nxt)])
            nxt += 1
            singles += 1
        else:
            out.append([])
    return out


def _has_two_independent(cross: Sequence[tuple[int, int]]) -> bool:
    ends0 = {c for e, c in cross if e == 0}
    ends1 = {c for e, c in cross if e == 1}
    return any(a != b for a in ends0 for b in ends1)


def validate_attachment(k: int, i: int, attachment: Attachment) -> None:
    """Raise :class:`ConstraintError` unless both construction rules hold.

    Rule 1: every added edge except at most two has two independent cross
    edges to the clique. Rule 2: every clique vertex has neighbours in at
    most one added edge.
    """
    d = 2 * k - 1
    if len(attachment) != i:
        raise ConstraintError(f"attachment lists {len(attachment)} edges, expected {i}")
    owner: dict[int, int] = {}
    lacking = 0
    for j, cross in enumerate(attachment):
        for end, c in cross:
            if end not in (0, 1):
                raise ConstraintError(f"edge e_{j + 1}: endpoint index must be 0 or 1, got {end}")
            if not 0 <= c < d:
                raise ConstraintError(f"edge e_{j + 1}: clique vertex {c} out of range 0..{d - 1}")
            if owner.setdefault(c, j) != j:
                raise ConstraintError(
                    f"clique vertex {c} has neighbours in both e_{owner[c] + 1} and e_{j + 1}"
                )
        if not _has_two_independent(cross):
            lacking += 1
    if lacking > 2:
        raise ConstraintError(f"{lacking} added edges lack two independent cross edges (at most 2 allowed)")


def build_gf_i(k: int, n: int, i: int, attachment: Attachment | None = None) -> Graph:
    """The family member for ``F = kP_5`` with ``i`` added independent edges."""
    if k < 1:
        raise LinforestError("k must be >= 1")
    if i > k or i < 0:
        raise ConstraintError(f"i={i} must lie in 0..k={k}")
    d = 2 * k - 1
    if n < d + 2 * i:
        raise LinforestError(f"n={n} too small for delta={d} and i={i}")
    _fits(n)
    if attachment is None:
        attachment = default_attachment(k, i)
    validate_attachment(k, i, attachment)
    edges = [(a, b) for a in range(d) for b in range(a + 1, d)]
    for v in range(d + 2 * i, n):
        edges.extend((c, v) for c in range(d))
    for j, cross in enumerate(attachment):
        a = d + 2 * j
        edges.append((a, a + 1))
        edges.extend((c, a + end) for end, c in cross)
    return from_edges(n, edges)


def apex_over_cliques(sizes: Sequence[int]) -> Graph:
    """``K_1 + (K_{a_1} u K_{a_2} u ...)`` with the apex as vertex 0."""
    _fits(1 + sum(sizes))
    return join(complete_graph(1), union_all(complete_graph(a) for a in sizes))


def apex_cliques(ell: int, t: int) -> Graph:
    """``K_1 + tK_{l-1}``."""
    if ell < 2:
        raise LinforestError("need l >= 2")
    return apex_over_cliques([ell - 1] * t)


def apex_mixed(ell: int, t1: int, t2: int) -> Graph:
    """``K_1 + (t1 K_{l-1} u t2 K_{l-2})``."""
    if ell < 3:
        raise LinforestError("need l >= 3")
    return apex_over_cliques([ell - 1] * t1 + [ell - 2] * t2)


def base_plus_k4(base: Literal["K2", "E2"], t: int) -> Graph:
    """``K_2 + tK_4`` or ``E_2 + tK_4`` with the two base vertices first."""
    if base not in ("K2", "E2"):
        raise LinforestError(f"base must be 'K2' or 'E2', got {base!r}")
    _fits(2 + 4 * t)
    b = complete_graph(2) if base == "K2" else empty_graph(2)
    return join(b, union_all([complete_graph(4)] * t))


def clique_union(ell: int, n: int) -> Graph:
    """floor(n/(l-1)) copies of K_{l-1} plus one K_{n mod (l-1)}."""
    if ell < 2:
        raise LinforestError("need l >= 2")
    _fits(n)
    q, r = divmod(n, ell - 1)
    return union_all([complete_graph(ell - 1)] * q + [complete_graph(r)])


def path_union(orders: LinearForest | Sequence[int]) -> Graph:
    """Disjoint union of paths of the given orders (orders of 1 allowed)."""
    ords = orders.orders if isinstance(orders, LinearForest) else tuple(orders)
    if any(x < 0 for x in ords):
        raise LinforestError("path orders must be non-negative")
    _fits(sum(ords))
    out = empty_graph(0)
    for x in ords:
        out = disjoint_union(out, path_graph(x))
    return out


TAGS = ("GF", "GF_I", "APEX_CLIQUES", "APEX_MIXED", "BASE_PLUS_K4", "CLIQUE_UNION", "PATH_UNION")


@dataclass(frozen=True)
class ConstructionId:
    """A family tag plus its integer parameters."""

    tag: str
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        p = self.params
        if self.tag == "GF":
            return build_gf(p["forest"], p["n"])
        if self.tag == "GF_I":
            return build_gf_i(p["k"], p["n"], p["i"], p.get("attachment"))
        if self.tag == "APEX_CLIQUES":
            return apex_cliques(p["ell"], p["t"])
        if self.tag == "APEX_MIXED":
            return apex_mixed(p["ell"], p["t1"], p["t2"])
        if self.tag == "BASE_PLUS_K4":
            return base_plus_k4(p["base"], p["t"])
        if self.tag == "CLIQUE_UNION":
            return clique_union(p["ell"], p["n"])
        if self.tag == "PATH_UNION":
            return path_union(p["orders"])
        raise LinforestError(f"unknown construction tag {self.tag!r}")
