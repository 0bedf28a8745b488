"""Enumeration of closed subsets under a closure operator."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, FrozenSet, Hashable, Iterable, Iterator, List, Set


def closed_sets(
    bottom: FrozenSet,
    universe: Iterable[Hashable],
    close: Callable[[FrozenSet], FrozenSet],
) -> List[FrozenSet]:
    """All closed sets containing ``close(bottom)``, sorted by (size, elements).

    Every closed set C is reachable from close(bottom) by adding one element
    at a time and closing, so a breadth-first walk over single-element
    extensions finds them all without touching the power set.
    """
    universe = list(universe)
    start = close(frozenset(bottom))
    seen: Set[FrozenSet] = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for u in universe:
                if u in c:
                    continue
                d = close(c | {u})
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s, key=repr)))


def subsets_between(lower: FrozenSet, universe: Iterable[Hashable]) -> Iterator[FrozenSet]:
    """Brute-force: every set lower | extra with extra a subset of universe - lower."""
    free = [u for u in universe if u not in lower]
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield frozenset(lower) | frozenset(extra)
