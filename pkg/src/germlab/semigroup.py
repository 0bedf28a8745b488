"""Finite inverse semigroups with zero, given by validated multiplication tables."""

from __future__ import annotations

import json
from itertools import product
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence

import numpy as np

from . import _lattice
from .errors import (
    CNotContained,
    IdempotentsDontCommute,
    InvalidTable,
    NoUniqueInverse,
    NoZero,
    NonAssociative,
)

Subset = FrozenSet[int]


class InverseSemigroup:
    """A finite inverse semigroup with zero.

    Elements are the indices ``0 .. size-1``; ``names`` are for display only.
    Construction validates the table exhaustively and computes ``star`` when
    it is not supplied.
    """

    def __init__(
        self,
        names: Sequence[str],
        mult: Sequence[Sequence[int]],
        zero: int,
        star: Optional[Sequence[int]] = None,
    ):
        n = len(names)
        if n == 0:
            raise InvalidTable("empty semigroup")
        if len(mult) != n or any(len(row) != n for row in mult):
            raise InvalidTable(f"multiplication table must be {n}x{n}")
        table = np.asarray(mult, dtype=np.int64)
        if table.min() < 0 or table.max() >= n:
            raise InvalidTable("table entry out of range")
        if not 0 <= zero < n:
            raise InvalidTable(f"zero index {zero} out of range")

        self.names = tuple(str(x) for x in names)
        self.size = n
        self.mult = tuple(tuple(int(v) for v in row) for row in mult)
        self.zero = int(zero)
        self._table = table

        self._check_associative()
        self._check_zero()
        self.star = self._check_star(star)
        self.idempotents: Subset = frozenset(e for e in range(n) if self.mult[e][e] == e)
        self._check_idempotents_commute()

    # -- validation ---------------------------------------------------------

    def _check_associative(self):
        m = self._table
        left = m[m]  # left[a, b, c] = (ab)c
        right = m[:, m]  # right[a, b, c] = a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = (int(v) for v in bad[0])
            raise NonAssociative(f"(s{a}*s{b})*s{c} != s{a}*(s{b}*s{c})")

    def _check_zero(self):
        z = self.zero
        for s in range(self.size):
            if self.mult[z][s] != z or self.mult[s][z] != z:
                raise NoZero(f"element {z} is not a zero: fails against {s}")

    def _inverse_candidates(self, s: int) -> List[int]:
        m = self.mult
        return [t for t in range(self.size) if m[m[s][t]][s] == s and m[m[t][s]][t] == t]

    def _check_star(self, star):
        computed = []
        for s in range(self.size):
            cands = self._inverse_candidates(s)
            if len(cands) != 1:
                raise NoUniqueInverse(f"element {s} has inverse candidates {cands}")
            computed.append(cands[0])
        if star is not None:
            star = [int(t) for t in star]
            if star != computed:
                s = next(i for i in range(self.size) if star[i] != computed[i])
                raise NoUniqueInverse(
                    f"supplied star[{s}] = {star[s]} but the unique inverse is {computed[s]}"
                )
        return tuple(computed)

    def _check_idempotents_commute(self):
        es = sorted(self.idempotents)
        for e, f in product(es, es):
            if self.mult[e][f] != self.mult[f][e]:
                raise IdempotentsDontCommute(f"idempotents {e} and {f} do not commute")

    # -- basic structure ----------------------------------------------------

    def mul(self, s: int, t: int) -> int:
        return self.mult[s][t]

    def prod(self, *elements: int) -> int:
        out = elements[0]
        for t in elements[1:]:
            out = self.mult[out][t]
        return out

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def unit(self) -> Optional[int]:
        for u in range(self.size):
            if all(self.mult[u][s] == s == self.mult[s][u] for s in range(self.size)):
                return u
        return None

    @property
    def is_semilattice(self) -> bool:
        return len(self.idempotents) == self.size

    def is_idempotent(self, s: int) -> bool:
        return self.mult[s][s] == s

    def source_idempotent(self, s: int) -> int:
        """s*s"""
        return self.mult[self.star[s]][s]

    def range_idempotent(self, s: int) -> int:
        """ss*"""
        return self.mult[s][self.star[s]]

    def by_name(self, name: str) -> int:
        return self.names.index(name)

    # -- order theory -------------------------------------------------------

    def leq(self, s: int, t: int) -> bool:
        """Natural partial order: s <= t iff t s* s = s."""
        return self.mult[t][self.source_idempotent(s)] == s

    def compatible(self, s: int, t: int) -> bool:
        m, st = self.mult, self.star
        return m[st[s]][t] in self.idempotents and m[s][st[t]] in self.idempotents

    def down(self, s: int) -> Subset:
        return frozenset(t for t in range(self.size) if self.leq(t, s))

    # -- subsets ------------------------------------------------------------

    def _check_subset(self, subset: Iterable[int]) -> Subset:
        sub = frozenset(int(s) for s in subset)
        if any(not 0 <= s < self.size for s in sub):
            raise InvalidTable(f"subset {sorted(sub)} has indices out of range")
        return sub

    def closure(self, generators: Iterable[int]) -> Subset:
        """Least subset containing ``generators`` closed under product and star."""
        out = set(self._check_subset(generators))
        out |= {self.star[s] for s in out}
        frontier = list(out)
        while frontier:
            new = []
            for a in frontier:
                for b in list(out):
                    for c in (self.mult[a][b], self.mult[b][a]):
                        if c not in out:
                            out.add(c)
                            new.append(c)
                            if self.star[c] not in out:
                                out.add(self.star[c])
                                new.append(self.star[c])
            frontier = new
        return frozenset(out)

    subsemigroup_closure = closure

    def is_subsemigroup(self, subset: Iterable[int]) -> bool:
        sub = self._check_subset(subset)
        return all(self.star[s] in sub for s in sub) and all(
            self.mult[s][t] in sub for s in sub for t in sub
        )

    def is_wide(self, subset: Iterable[int]) -> bool:
        return self.idempotents <= self._check_subset(subset)

    def wide_subsemigroups(self) -> List[Subset]:
        """All subsemigroups containing E(S)."""
        return _lattice.closed_sets(self.idempotents, self.elements, self.closure)

    def is_ideal(self, subset: Iterable[int]) -> bool:
        """Downward closed subset of E(S)."""
        sub = self._check_subset(subset)
        if not sub <= self.idempotents:
            return False
        return all(self.mult[e][f] in sub for e in sub for f in self.idempotents)

    def ideal_generated(self, idempotents: Iterable[int]) -> Subset:
        out = set()
        for e in self._check_subset(idempotents):
            out |= {self.mult[e][f] for f in self.idempotents}
        return frozenset(out)

    def is_cover(self, cover: Iterable[int], ideal: Iterable[int]) -> bool:
        """Every nonzero e of the ideal meets some c of the cover nontrivially."""
        c_set = self._check_subset(cover)
        j_set = self._check_subset(ideal)
        if not c_set <= j_set:
            raise CNotContained(f"{sorted(c_set - j_set)} not in the ideal")
        return all(
            any(self.mult[e][c] != self.zero for c in c_set) for e in j_set if e != self.zero
        )

    # -- serialization ------------------------------------------------------

    def to_document(self) -> dict:
        return {
            "names": list(self.names),
            "zero": self.zero,
            "mult": [list(row) for row in self.mult],
            "star": list(self.star),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document(), separators=(",", ":"))

    def __eq__(self, other):
        return isinstance(other, InverseSemigroup) and self.to_document() == other.to_document()

    def __hash__(self):
        return hash((self.names, self.mult, self.zero))

    def __repr__(self):
        return f"InverseSemigroup(size={self.size}, |E|={len(self.idempotents)})"


def load_semigroup(doc: dict) -> InverseSemigroup:
    try:
        names, mult, zero = doc["names"], doc["mult"], doc["zero"]
    except KeyError as exc:
        raise InvalidTable(f"semigroup document missing field {exc}") from None
    return InverseSemigroup(names, mult, zero, doc.get("star"))


def loads_semigroup(text: str) -> InverseSemigroup:
    return load_semigroup(json.loads(text))


def from_operation(
    elements: Sequence[Hashable],
    op: Callable[[Hashable, Hashable], Hashable],
    names: Optional[Sequence[str]] = None,
    zero: Optional[Hashable] = None,
) -> InverseSemigroup:
    """Tabulate ``op`` over ``elements``. The zero is located if not given."""
    index: Dict[Hashable, int] = {x: i for i, x in enumerate(elements)}
    mult = []
    for a in elements:
        row = []
        for b in elements:
            c = op(a, b)
            if c not in index:
                raise InvalidTable(f"product of {a!r} and {b!r} leaves the element set")
            row.append(index[c])
        mult.append(row)
    if zero is None:
        zeros = [
            i for i in range(len(elements))
            if all(mult[i][j] == i == mult[j][i] for j in range(len(elements)))
        ]
        if not zeros:
            raise NoZero("no zero element")
        z = zeros[0]
    else:
        z = index[zero]
    if names is None:
        names = [str(x) for x in elements]
    return InverseSemigroup(names, mult, z)


# -- standard examples -------------------------------------------------------


def _compose(f: tuple, g: tuple) -> tuple:
    """f after g for partial maps stored as sorted (x, y) tuples."""
    fd = dict(f)
    return tuple(sorted((x, fd[y]) for x, y in g if y in fd))


def partial_injections(n: int) -> List[tuple]:
    """All partial injections of {1..n}; idempotents first."""
    from itertools import combinations, permutations

    pts = range(1, n + 1)
    maps = []
    for k in range(n + 1):
        for dom in combinations(pts, k):
            for img in permutations(pts, k):
                maps.append(tuple(zip(dom, img)))
    is_id = lambda f: all(x == y for x, y in f)
    return sorted(maps, key=lambda f: (not is_id(f), len(f), f))


def partial_map_name(f: tuple, n: int) -> str:
    if not f:
        return "0"
    if len(f) == n and all(x == y for x, y in f):
        return "1"
    if all(x == y for x, y in f):
        return "e" + "".join(str(x) for x, _ in f)
    return "".join(str(x) for x, _ in f) + ">" + "".join(str(y) for _, y in f)


def symmetric_inverse_monoid(n: int) -> InverseSemigroup:
    """I_n: partial injections of {1..n} under composition (st = s after t).

    For n = 2 the elements are 0, e1, e2, 1, 1>2, 2>1, 12>21.
    """
    maps = partial_injections(n)
    return from_operation(maps, _compose, [partial_map_name(f, n) for f in maps], zero=())


def semilattice_from_meet(
    elements: Sequence[Hashable], meet: Callable, names: Optional[Sequence[str]] = None
) -> InverseSemigroup:
    s = from_operation(elements, meet, names)
    if not s.is_semilattice:
        raise InvalidTable("meet operation is not idempotent")
    return s


def orthogonal_semilattice(count: int, with_unit: bool = False) -> InverseSemigroup:
    """{0, p_1..p_N} with p_i p_j = 0 for i != j, optionally with a unit adjoined."""
    elements = ["0"] + [f"p{i}" for i in range(1, count + 1)] + (["1"] if with_unit else [])

    def meet(a, b):
        if a == b:
            return a
        if a == "1":
            return b
        if b == "1":
            return a
        return "0"

    return semilattice_from_meet(elements, meet, elements)


def two_point_semilattice() -> InverseSemigroup:
    return semilattice_from_meet(["0", "1"], lambda a, b: "1" if a == b == "1" else "0")
