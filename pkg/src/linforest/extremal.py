"""Exact generalized Turan numbers by exhaustive search, and reconciliation
with the closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cliques import count_cliques, gf_formula, theorem_value, threshold_n
from .enumeration import EnumFilter, enumerate_found
from .forest import LinearForest, delta_f, format_forest
from .formats import from_graph6
from .graph import components, is_complete


@dataclass(frozen=True)
class ExtremalRecord:
    forest: LinearForest
    n: int
    s: int
    value: int
    extremal_graphs: tuple[bytes, ...]
    formula_value: int | None = None
    threshold: int | None = None
    agrees: bool | None = None  # only set when n >= threshold
    below_threshold: bool | None = None
    matches_formula: bool | None = None  # informational at every n

    def as_dict(self) -> dict:
        return {
            "forest": format_forest(self.forest),
            "n": self.n,
            "s": self.s,
            "brute": self.value,
            "formula": self.formula_value,
            "threshold": self.threshold,
            "agrees": self.agrees,
            "below_threshold": self.below_threshold,
            "matches_formula": self.matches_formula,
            "extremal_graph6": [g.decode() for g in self.extremal_graphs],
        }


@dataclass
class _Best:
    value: int = -1
    graphs: list[bytes] = field(default_factory=list)


def _search(n: int, s: int, f: LinearForest, budget: int | None, workers: int) -> _Best:
    best = _Best()
    # N_s only grows with edges, so edge-maximal F-free graphs carry the maximum
    for found in enumerate_found(n, EnumFilter(f_free=f), budget, workers):
        if not found.edge_maximal:
            continue
        c = count_cliques(found.graph, s) if s <= n else 0
        if c > best.value:
            best.value, best.graphs = c, [found.certificate]
        elif c == best.value:
            best.graphs.append(found.certificate)
    return best


def brute_force_ex(
    n: int, s: int, f: LinearForest, budget: int | None = None, workers: int = 1
) -> ExtremalRecord:
    """ex(n, K_s, F) with every edge-maximal maximizer up to isomorphism."""
    if s < 1:
        raise ValueError("s must be >= 1")
    best = _search(n, s, f, budget, workers)
    return ExtremalRecord(f, n, s, best.value, tuple(best.graphs))


def brute_force_path_ex(n: int, s: int, ell: int, budget: int | None = None, workers: int = 1) -> int:
    """ex(n, K_s, P_l) by the same search with a single forbidden path."""
    return _search(n, s, LinearForest((ell,)), budget, workers).value


def reconcile(
    n_range, s: int, f: LinearForest, budget: int | None = None, workers: int = 1
) -> list[ExtremalRecord]:
    """Brute force vs the closed form, row by row."""
    th = threshold_n(f, s)
    d = delta_f(f)
    rows = []
    for n in n_range:
        rec = brute_force_ex(n, s, f, budget, workers)
        formula = None
        if n >= d + 2:
            pt = brute_force_path_ex(n, s, f.longest, budget, workers)
            formula = theorem_value(f, n, s, path_turan=pt)
        below = n < th
        matches = None if formula is None else rec.value == formula
        rows.append(
            ExtremalRecord(
                f, n, s, rec.value, rec.extremal_graphs,
                formula_value=formula,
                threshold=th,
                agrees=None if below else matches,
                below_threshold=below,
                matches_formula=matches,
            )
        )
    return rows


def sandwich_ok(rec: ExtremalRecord) -> bool:
    """The construction lower bound gf_formula never exceeds the exact value."""
    if rec.n < delta_f(rec.forest) + 2:
        return True
    return gf_formula(rec.forest, rec.n, rec.s) <= rec.value


def odd_pair_components_ok(n: int, ell: int, budget: int | None = None) -> tuple[int, list[bytes]]:
    """For F = 2P_l (l odd): disconnected F-free graphs with min degree >= delta_F
    must have every component but a largest one equal to K_{l-1}.

    Returns the number of graphs checked and the certificates of violators.
    """
    f = LinearForest((ell, ell))
    flt = EnumFilter(connected=False, min_degree=delta_f(f), f_free=f)
    checked = 0
    bad: list[bytes] = []
    for found in enumerate_found(n, flt, budget):
        checked += 1
        g = found.graph
        comps = sorted(components(g), key=lambda c: -c.bit_count())
        for c in comps[1:]:
            if c.bit_count() != ell - 1 or not is_complete(g, c):
                bad.append(found.certificate)
                break
    return checked, bad


def record_graphs(rec: ExtremalRecord):
    return [from_graph6(g) for g in rec.extremal_graphs]
