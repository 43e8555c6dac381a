"""Exact clique counts and the closed-form count/threshold formulas.

All arithmetic is on Python integers or :class:`fractions.Fraction`; nothing
here goes through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import HypothesisError, LinforestError
from .forest import LinearForest, all_odd, delta_f, is_two_equal_odd, require_valid, total_order
from .graph import Graph, bits


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class CountReport:
    s: int
    value: int
    source: Literal["ENUMERATED", "FORMULA"]
    forest: str | None = None
    n: int | None = None


def _is_clique(adj: tuple[int, ...], cand: int) -> bool:
    for v in bits(cand):
        if (adj[v] | (1 << v)) & cand != cand:
            return False
    return True


def clique_vector(g: Graph, max_size: int | None = None, within: int | None = None) -> list[int]:
    """``out[s]`` = number of s-cliques for ``0 <= s <= max_size``.

    Recursion over vertices in increasing order, carrying the mask of later
    common neighbours. When the candidate mask is itself a clique the rest of
    the subtree is counted by binomials.
    """
    top = g.n if max_size is None else max_size
    out = [0] * (top + 1)
    out[0] = 1
    adj = g.adj
    cand0 = g.vertex_mask if within is None else within

    def rec(cand: int, depth: int) -> None:
        # depth = size of the clique built so far
        if _is_clique(adj, cand):
            c = cand.bit_count()
            for j in range(1, min(c, top - depth) + 1):
                out[depth + j] += math.comb(c, j)
            return
        if depth + 1 > top:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            out[depth + 1] += 1
            nxt = adj[v] & cand
            if nxt and depth + 2 <= top:
                rec(nxt, depth + 1)

    if top >= 1 and cand0:
        rec(cand0, 0)
    return out


def count_cliques(g: Graph, s: int) -> int:
    """Exact number of vertex subsets of size ``s`` inducing a complete graph."""
    if s < 1:
        raise LinforestError("clique order s must be >= 1")
    if s > g.n:
        return 0
    return clique_vector(g, s)[s]


def count_cliques_in(g: Graph, s: int, within: int) -> int:
    """s-cliques of the subgraph induced by the vertex mask ``within``; s = 0 gives 1."""
    if s < 0:
        return 0
    if s == 0:
        return 1
    if s > within.bit_count():
        return 0
    return clique_vector(g, s, within)[s]


def count_cliques_parallel(g: Graph, s: int, workers: int = 1) -> int:
    """Same as :func:`count_cliques`, split over top-level vertex branches.

    Branch ``v`` counts the s-cliques whose smallest vertex is ``v``; the
    branch totals are summed in vertex order, so the result does not depend on
    scheduling.
    """
    if workers <= 1 or g.n < 2:
        return count_cliques(g, s)
    from .parallel import run_ordered

    full = g.vertex_mask
    tasks = [(g, s, v, g.adj[v] & (full ^ ((1 << (v + 1)) - 1))) for v in range(g.n)]
    return sum(run_ordered(_branch_count, tasks, workers))


def _branch_count(task: tuple[Graph, int, int, int]) -> int:
    g, s, _v, later = task
    return count_cliques_in(g, s - 1, later)


# -- formulas ---------------------------------------------------------------


def gf_formula(f: LinearForest, n: int, s: int) -> int:
    """Number of s-cliques of the extremal construction on ``n`` vertices."""
    d = delta_f(f)
    if n < d + 2:
        raise LinforestError(f"n={n} is below delta_F + 2 = {d + 2}")
    return binom(d, s) + (n - d) * binom(d, s - 1) + (binom(d, s - 2) if all_odd(f) else 0)


def luo_bound(ell: int, s: int, n: int) -> Fraction:
    """Upper bound n/(l-1) * C(l-1, s) on s-cliques in a P_l-free graph."""
    if ell < 2 or s < 1:
        raise LinforestError("need l >= 2 and s >= 1")
    return Fraction(n, ell - 1) * binom(ell - 1, s)


def path_turan_lower(ell: int, s: int, n: int) -> int:
    """s-cliques in disjoint copies of K_{l-1} plus one smaller clique."""
    if ell < 2:
        raise LinforestError("need l >= 2")
    q, r = divmod(n, ell - 1)
    return q * binom(ell - 1, s) + binom(r, s)


def odd_pair_value(ell: int, n: int) -> int:
    """floor((n-1)/(l-1)) * l + mu, with mu = 1 iff n-1 = l-2 (mod l-1)."""
    q, r = divmod(n - 1, ell - 1)
    return q * ell + (1 if r == ell - 2 else 0)


def theorem_value(f: LinearForest, n: int, s: int, path_turan: int | None = None) -> int:
    """Closed-form value of the generalized Turan number for linear forests.

    ``path_turan`` is the exact ex(n, K_s, P_{l_1}); it is required except in
    the ``2P_l`` (l odd) branch, which does not use it.
    """
    require_valid(f)
    d = delta_f(f)
    if not 1 <= s <= d + 1:
        raise HypothesisError(f"s={s} outside 1..delta_F+1={d + 1}")
    if is_two_equal_odd(f):
        if s == d + 1:
            return odd_pair_value(f.longest, n)
        return gf_formula(f, n, s)
    if path_turan is None:
        raise LinforestError("path_turan (exact ex(n, K_s, P_l1)) is required for this forest")
    return max(gf_formula(f, n, s), path_turan)


def threshold_value(f: LinearForest, s: int) -> Fraction:
    """The exact rational right-hand side of the large-n hypothesis."""
    d = delta_f(f)
    if not 1 <= s <= d + 1:
        raise HypothesisError(f"s={s} outside 1..delta_F+1={d + 1}")
    m = total_order(f) - 1
    return Fraction(5 * binom(m, s) ** 2, m * binom(d, s - 1)) + d


def threshold_n(f: LinearForest, s: int) -> int:
    """Smallest integer n meeting the large-n hypothesis."""
    return math.ceil(threshold_value(f, s))
