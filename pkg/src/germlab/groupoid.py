"""Finite groupoids given by explicit source, range and product tables."""

from __future__ import annotations

import json
from itertools import product
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from . import _lattice
from .errors import InvalidGroupoid, NotComposable


class FiniteGroupoid:
    """Elements are indices; ``units`` flags the unit space.

    ``products`` maps each composable pair (a, b) with d(a) = r(b) to ab.
    The groupoid axioms are checked exhaustively on construction.
    """

    def __init__(
        self,
        labels: Sequence[str],
        units: Sequence[bool],
        source: Sequence[int],
        range_: Sequence[int],
        products: Dict[Tuple[int, int], int],
    ):
        n = len(labels)
        if not (len(units) == len(source) == len(range_) == n):
            raise InvalidGroupoid("labels, units, source and range must have equal length")
        self.labels = tuple(str(x) for x in labels)
        self.size = n
        self.units: FrozenSet[int] = frozenset(i for i, u in enumerate(units) if u)
        self.d = tuple(int(x) for x in source)
        self.r = tuple(int(x) for x in range_)
        self._prod = {(int(a), int(b)): int(c) for (a, b), c in products.items()}
        self._validate()
        self.inverse = tuple(self._find_inverse(g) for g in range(n))

    def _validate(self):
        n = self.size
        for g in range(n):
            if self.d[g] not in self.units or self.r[g] not in self.units:
                raise InvalidGroupoid(f"source/range of {self.labels[g]} is not a unit")
        for x in self.units:
            if self.d[x] != x or self.r[x] != x:
                raise InvalidGroupoid(f"unit {self.labels[x]} must be its own source and range")
        for a, b in product(range(n), range(n)):
            composable = self.d[a] == self.r[b]
            if composable != ((a, b) in self._prod):
                raise InvalidGroupoid(f"product of {self.labels[a]}, {self.labels[b]} defined wrongly")
            if composable:
                c = self._prod[(a, b)]
                if not 0 <= c < n:
                    raise InvalidGroupoid("product out of range")
                if self.d[c] != self.d[b] or self.r[c] != self.r[a]:
                    raise InvalidGroupoid(f"d/r of {self.labels[a]}{self.labels[b]} wrong")
        for g in range(n):
            if self._prod[(g, self.d[g])] != g or self._prod[(self.r[g], g)] != g:
                raise InvalidGroupoid(f"units do not act trivially on {self.labels[g]}")
        for (a, b), ab in self._prod.items():
            for c in range(n):
                if self.d[b] == self.r[c]:
                    if self._prod[(ab, c)] != self._prod[(a, self._prod[(b, c)])]:
                        raise InvalidGroupoid("product is not associative")

    def _find_inverse(self, g: int) -> int:
        for h in range(self.size):
            if (
                self.d[h] == self.r[g]
                and self.r[h] == self.d[g]
                and self._prod[(h, g)] == self.d[g]
                and self._prod[(g, h)] == self.r[g]
            ):
                return h
        raise InvalidGroupoid(f"{self.labels[g]} has no inverse")

    @property
    def elements(self) -> range:
        return range(self.size)

    def composable(self, a: int, b: int) -> bool:
        return self.d[a] == self.r[b]

    def mul(self, a: int, b: int) -> int:
        try:
            return self._prod[(a, b)]
        except KeyError:
            raise NotComposable(f"d({self.labels[a]}) != r({self.labels[b]})") from None

    def closure(self, gens: Iterable[int]) -> FrozenSet[int]:
        out = set(gens)
        out |= {self.inverse[g] for g in out}
        changed = True
        while changed:
            changed = False
            for a in list(out):
                for b in list(out):
                    if self.d[a] == self.r[b]:
                        c = self._prod[(a, b)]
                        if c not in out:
                            out.add(c)
                            out.add(self.inverse[c])
                            changed = True
        return frozenset(out)

    def is_subgroupoid(self, subset: Iterable[int]) -> bool:
        sub = frozenset(subset)
        return all(self.inverse[g] in sub for g in sub) and all(
            self._prod[(a, b)] in sub for a in sub for b in sub if self.d[a] == self.r[b]
        )

    def wide_subgroupoids(self) -> List[FrozenSet[int]]:
        return _lattice.closed_sets(self.units, self.elements, self.closure)

    def is_isomorphism(self, other: "FiniteGroupoid", phi: Sequence[int]) -> bool:
        """Whether g -> phi[g] is a bijective groupoid homomorphism onto ``other``."""
        if sorted(phi) != list(other.elements) or len(phi) != self.size:
            return False
        for a, b in product(self.elements, self.elements):
            if self.composable(a, b) != other.composable(phi[a], phi[b]):
                return False
            if self.composable(a, b) and phi[self.mul(a, b)] != other.mul(phi[a], phi[b]):
                return False
        return all(phi[self.inverse[g]] == other.inverse[phi[g]] for g in self.elements) and {
            phi[u] for u in self.units
        } == set(other.units)

    # -- serialization ------------------------------------------------------

    def to_document(self) -> dict:
        n = self.size
        return {
            "elements": list(self.labels),
            "units": [g in self.units for g in range(n)],
            "source": list(self.d),
            "range": list(self.r),
            "product": [[self._prod.get((a, b)) for b in range(n)] for a in range(n)],
        }

    def __repr__(self):
        return f"FiniteGroupoid(|G|={self.size}, |G0|={len(self.units)})"


def load_groupoid(doc: dict) -> FiniteGroupoid:
    try:
        table = doc["product"]
        prods = {
            (a, b): c
            for a, row in enumerate(table)
            for b, c in enumerate(row)
            if c is not None
        }
        return FiniteGroupoid(doc["elements"], doc["units"], doc["source"], doc["range"], prods)
    except (KeyError, TypeError) as exc:
        raise InvalidGroupoid(f"malformed groupoid document: {exc}") from None


def loads_groupoid(text: str) -> FiniteGroupoid:
    return load_groupoid(json.loads(text))


def from_operations(
    elements: Sequence[Hashable],
    is_unit: Callable[[Hashable], bool],
    source: Callable[[Hashable], Hashable],
    range_: Callable[[Hashable], Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    labels: Optional[Sequence[str]] = None,
) -> FiniteGroupoid:
    index = {g: i for i, g in enumerate(elements)}
    prods = {}
    for a in elements:
        for b in elements:
            if source(a) == range_(b):
                prods[(index[a], index[b])] = index[mul(a, b)]
    return FiniteGroupoid(
        labels or [str(g) for g in elements],
        [is_unit(g) for g in elements],
        [index[source(g)] for g in elements],
        [index[range_(g)] for g in elements],
        prods,
    )


def pair_groupoid(k: int) -> FiniteGroupoid:
    """{1..k}^2 with (i, j)(j, l) = (i, l); (i, j) has source j and range i."""
    pts = range(1, k + 1)
    elems = [(i, j) for i in pts for j in pts]
    return from_operations(
        elems,
        lambda g: g[0] == g[1],
        lambda g: (g[1], g[1]),
        lambda g: (g[0], g[0]),
        lambda a, b: (a[0], b[1]),
        [f"({i},{j})" for i, j in elems],
    )


def trivial_groupoid(k: int) -> FiniteGroupoid:
    """k units and nothing else."""
    elems = list(range(1, k + 1))
    return from_operations(elems, lambda g: True, lambda g: g, lambda g: g, lambda a, b: a,
                           [f"u{i}" for i in elems])


def group_bundle(order: int) -> FiniteGroupoid:
    """The cyclic group Z/order as a one-unit groupoid."""
    elems = list(range(order))
    return from_operations(elems, lambda g: g == 0, lambda g: 0, lambda g: 0,
                           lambda a, b: (a + b) % order, [f"g{i}" for i in elems])
