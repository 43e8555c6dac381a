"""Executable checks of the containment dichotomies and the classical path lemmas."""

from __future__ import annotations

from .constructions import path_union
from .enumeration import enumerate_graphs
from .errors import SizeGuardError
from .forest import LinearForest, delta_f, format_forest, valid_forests
from .formats import to_graph6
from .graph import Graph, has_separator_smaller_than, independence_number, is_connected, min_degree
from .paths import contains_linear_forest, has_hamiltonian_path, has_path_of_order

SWEEP_GUARD = 24  # forests with |F| above this make the host paths too long to sweep
SWEEP_ORDER_GUARD = 10


def short_host_free(f: LinearForest) -> bool:
    """Predicted F-freeness of P_{2d+1} u P_d: 5P_5, 2P_l, P_{l+1} u P_l, and for odd l
    also P_{l+2} u P_l and 2P_l u P_2."""
    o = f.orders
    if o == (5, 5, 5, 5, 5):
        return True
    if len(o) == 2:
        a, b = o
        return a - b in (0, 1) or (a - b == 2 and b % 2 == 1)
    if len(o) == 3:
        return o[0] == o[1] and o[0] % 2 == 1 and o[2] == 2
    return False


def middle_host_free(f: LinearForest) -> bool:
    """Predicted F-freeness of P_{2d+1} u P_{d+1}: only 2P_l with l odd."""
    o = f.orders
    return len(o) == 2 and o[0] == o[1] and o[0] % 2 == 1


def host(f: LinearForest, extra: int) -> Graph:
    d = delta_f(f)
    return path_union((2 * d + 1, d + extra))


def _sweep(max_total: int, extra: int, predict, fast: bool) -> dict:
    if max_total > SWEEP_GUARD:
        raise SizeGuardError(f"|F| bound {max_total} exceeds sweep guard {SWEEP_GUARD}")
    rows = []
    mismatches = []
    for f in valid_forests(max_total):
        free = contains_linear_forest(host(f, extra), f, fast=fast) is None
        want = predict(f)
        rows.append({"forest": format_forest(f), "delta": delta_f(f), "free": free, "predicted": want})
        if free != want:
            mismatches.append(format_forest(f))
    return {"rows": rows, "mismatches": mismatches}


def claw_check(max_total: int = 16, fast: bool = True) -> dict:
    """Sweep every valid forest against P_{2d+1} u P_d."""
    out = _sweep(max_total, 0, short_host_free, fast)
    out.update(which="claw", bound=max_total, verdict="PASS" if not out["mismatches"] else "FAIL")
    return out


def claw2_check(max_total: int = 16, fast: bool = True) -> dict:
    """Sweep against P_{2d+1} u P_{d+1} (free iff 2P_l, l odd) and P_{2d+1} u P_{d+2} (never free)."""
    mid = _sweep(max_total, 1, middle_host_free, fast)
    top = _sweep(max_total, 2, lambda f: False, fast)
    bad = mid["mismatches"] + [m + " (d+2 host)" for m in top["mismatches"]]
    return {
        "which": "claw2",
        "bound": max_total,
        "rows": mid["rows"],
        "rows_d_plus_2": top["rows"],
        "mismatches": bad,
        "verdict": "PASS" if not bad else "FAIL",
    }


def dirac_holds(g: Graph) -> bool:
    """Connected G has a path on min(n, 2 delta + 1) vertices."""
    if not is_connected(g) or g.n == 0:
        return True
    return has_path_of_order(g, min(g.n, 2 * min_degree(g) + 1)) is not None


def chvatal_erdos_holds(g: Graph) -> bool:
    """alpha(G) <= kappa(G) + 1 forces a hamiltonian path."""
    if g.n <= 1:
        return True
    a = independence_number(g)
    # kappa >= a - 1 exactly when no separator has fewer than a - 1 vertices
    if not is_connected(g) or has_separator_smaller_than(g, a - 1):
        return True
    return has_hamiltonian_path(g)


def property_sweep(which: str, max_order: int, graphs_by_n=None) -> dict:
    if max_order > SWEEP_ORDER_GUARD:
        raise SizeGuardError(f"order {max_order} exceeds sweep guard {SWEEP_ORDER_GUARD}")
    test = dirac_holds if which == "dirac" else chvatal_erdos_holds
    per_n = {}
    violations = []
    for n in range(1, max_order + 1):
        stream = graphs_by_n[n] if graphs_by_n is not None else enumerate_graphs(n)
        count = 0
        for g in stream:
            count += 1
            if not test(g):
                violations.append(to_graph6(g).decode())
        per_n[n] = count
    return {
        "which": which,
        "max_order": max_order,
        "graphs": per_n,
        "violations": violations,
        "verdict": "PASS" if not violations else "FAIL",
    }


def lemma_check(which: str, bound: int) -> dict:
    if which == "claw":
        return claw_check(bound)
    if which == "claw2":
        return claw2_check(bound)
    if which in ("dirac", "chvatal-erdos"):
        return property_sweep(which, bound)
    raise ValueError(f"unknown lemma check {which!r}")
