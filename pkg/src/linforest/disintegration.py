"""Peeling low-degree vertices down to the core, with clique-loss accounting."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cliques import binom, clique_vector, count_cliques
from .forest import LinearForest, delta_f
from .graph import Graph, bits, induced


@dataclass(frozen=True)
class Step:
    vertex: int  # label in the original graph
    degree: int  # degree at the moment of deletion
    destroyed: int  # s-cliques through the vertex at that moment


@dataclass(frozen=True)
class DisintegrationTrace:
    threshold: int
    s: int
    steps: tuple[Step, ...]
    core: Graph
    core_vertices: tuple[int, ...]
    initial_count: int
    core_count: int

    @property
    def core_order(self) -> int:
        return self.core.n

    @property
    def m(self) -> int:
        return self.core.n


@dataclass
class PeelRecord:
    """Deletion order of a peel plus full clique-loss vectors per step."""

    order: list[int] = field(default_factory=list)
    degrees: list[int] = field(default_factory=list)
    # losses[j][s] = s-cliques through the j-th deleted vertex at deletion time
    losses: list[list[int]] = field(default_factory=list)
    remaining: int = 0


def peel(g: Graph, threshold: int, max_s: int | None = None, reverse: bool = False) -> PeelRecord:
    """Repeatedly delete a vertex of current degree < ``threshold``.

    The lowest-indexed qualifying vertex goes first (highest-indexed with
    ``reverse``). When ``max_s`` is given, each step also records the number of
    s-cliques through the deleted vertex for ``1 <= s <= max_s``, computed as
    (s-1)-cliques inside its current neighbourhood.
    """
    adj = g.adj
    alive = g.vertex_mask
    deg = [a.bit_count() for a in adj]
    low = 0  # alive vertices whose current degree is below the threshold
    for v in range(g.n):
        if deg[v] < threshold:
            low |= 1 << v
    rec = PeelRecord()
    while low:
        pick = low.bit_length() - 1 if reverse else (low & -low).bit_length() - 1
        nb = adj[pick] & alive
        rec.order.append(pick)
        rec.degrees.append(deg[pick])
        if max_s is not None:
            inner = clique_vector(g, max_s - 1, nb) if max_s >= 1 else [1]
            rec.losses.append([0] + inner[:max_s] + [0] * (max_s - len(inner)))
        alive &= ~(1 << pick)
        low &= ~(1 << pick)
        for u in bits(nb):
            deg[u] -= 1
            if deg[u] < threshold:
                low |= 1 << u
    rec.remaining = alive
    return rec


def core_mask(g: Graph, threshold: int, reverse: bool = False) -> int:
    return peel(g, threshold, reverse=reverse).remaining


def disintegrate(g: Graph, f: LinearForest, s: int) -> DisintegrationTrace:
    """Delete vertices of degree < delta_F until none is left; trace the process."""
    if s < 1:
        raise ValueError("s must be >= 1")
    d = delta_f(f)
    rec = peel(g, d, max_s=s)
    core = induced(g, rec.remaining)
    steps = tuple(
        Step(v, deg, loss[s]) for v, deg, loss in zip(rec.order, rec.degrees, rec.losses)
    )
    return DisintegrationTrace(
        threshold=d,
        s=s,
        steps=steps,
        core=core,
        core_vertices=tuple(bits(rec.remaining)),
        initial_count=count_cliques(g, s),
        core_count=count_cliques(core, s),
    )


def verify_step_bound(trace: DisintegrationTrace, f: LinearForest, s: int) -> bool:
    """Per-step loss bound C(d-1, s-1) and the telescoped total bound."""
    d = delta_f(f)
    cap = binom(d - 1, s - 1)
    for st in trace.steps:
        if st.degree >= d:
            return False
        if st.destroyed > binom(st.degree, s - 1) or st.destroyed > cap:
            return False
    removed = len(trace.steps)
    return trace.initial_count <= trace.core_count + removed * cap


def verify_telescoping(trace: DisintegrationTrace) -> bool:
    """Recounted total equals core count plus the recorded per-step losses."""
    return trace.initial_count == trace.core_count + sum(st.destroyed for st in trace.steps)
