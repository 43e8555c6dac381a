"""Linear forests: vertex-disjoint unions of paths."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import HypothesisError, LinforestError

_TEXT = re.compile(r"^\s*\d+\s*(\+\s*\d+\s*)*$")


@dataclass(frozen=True, slots=True)
class LinearForest:
    """Path orders ``l_1 >= l_2 >= ... >= l_k``, each at least 2.

    Single-path forests and forests with a ``P_3`` component are allowed so
    that path baselines and recursions can be expressed; ``valid`` records
    whether the forest meets the main theorem's hypotheses.
    """

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int]):
        ords = tuple(sorted((int(x) for x in orders), reverse=True))
        if not ords:
            raise LinforestError("a linear forest needs at least one path")
        if ords[-1] < 2:
            raise LinforestError(f"path orders must be >= 2, got {ords[-1]}")
        object.__setattr__(self, "orders", ords)

    @property
    def k(self) -> int:
        return len(self.orders)

    @property
    def valid(self) -> bool:
        return self.k >= 2 and 3 not in self.orders

    @property
    def longest(self) -> int:
        return self.orders[0]

    def __str__(self) -> str:
        return "+".join(str(x) for x in self.orders)

    def pretty(self) -> str:
        """Compact name such as ``2P5 u P2``."""
        parts = []
        i = 0
        while i < self.k:
            j = i
            while j < self.k and self.orders[j] == self.orders[i]:
                j += 1
            mult = j - i
            parts.append(f"{mult if mult > 1 else ''}P{self.orders[i]}")
            i = j
        return " u ".join(parts)


def parse(text: str) -> LinearForest:
    """Parse the canonical text form, e.g. ``"5+5+2"``."""
    if not _TEXT.match(text or ""):
        raise LinforestError(f"malformed forest text {text!r}; expected e.g. '5+5+2'")
    return LinearForest(int(x) for x in text.split("+"))


def format_forest(f: LinearForest) -> str:
    return str(f)


def delta_f(f: LinearForest) -> int:
    return sum(x // 2 for x in f.orders) - 1


def total_order(f: LinearForest) -> int:
    return sum(f.orders)


def has_even_component(f: LinearForest) -> bool:
    return any(x % 2 == 0 for x in f.orders)


def all_odd(f: LinearForest) -> bool:
    return not has_even_component(f)


def odd_count(f: LinearForest) -> int:
    """Number of odd components, i.e. the sum of the odd-set indicator."""
    return sum(x % 2 for x in f.orders)


def is_two_equal_odd(f: LinearForest) -> bool:
    """True for ``F = 2P_l`` with ``l`` odd (the special branch of the theorem)."""
    return f.k == 2 and f.orders[0] == f.orders[1] and f.orders[0] % 2 == 1


def require_valid(f: LinearForest) -> None:
    if f.k < 2:
        raise HypothesisError(f"forest {f} has k={f.k}; the theorem needs k >= 2")
    if 3 in f.orders:
        raise HypothesisError(f"forest {f} has a P_3 component; the theorem excludes l_i = 3")


def valid_forests(max_total: int, min_total: int = 0) -> Iterator[LinearForest]:
    """All valid forests (k >= 2, orders >= 2 and != 3) with ``|F| <= max_total``.

    Yielded in increasing total order, then lexicographically descending parts.
    """

    def parts(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 1, -1):
            if first == 3:
                continue
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    for total in range(max(min_total, 4), max_total + 1):
        for p in parts(total, total):
            if len(p) >= 2:
                yield LinearForest(p)


def case_one_parameter(f: LinearForest) -> int | None:
    """The ``l`` for which ``F`` is one of the apex-clique exceptional forests.

    Returns ``l`` when F is ``P_{l+1} u P_l`` or ``2P_l`` (l even), or one of
    ``P_{l+2} u P_l``, ``P_{l+1} u P_l``, ``2P_l u P_2`` (l odd); else None.
    """
    o = f.orders
    if not f.valid:
        return None
    if f.k == 2:
        a, b = o
        if a == b and b % 2 == 0:
            return b
        if a == b + 1:
            return b
        if a == b + 2 and b % 2 == 1:
            return b
        return None
    if f.k == 3 and o[0] == o[1] and o[0] % 2 == 1 and o[2] == 2:
        return o[0]
    return None
