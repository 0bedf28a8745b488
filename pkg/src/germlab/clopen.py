"""Compact-open subsets of the Cantor space of infinite words over {1..n}.

A compact open set is a finite union of cylinders C(w).  We keep it as a
reduced antichain of words: no word is a prefix of another and no complete
sibling family w1..wn occurs.  That representation is unique for each
set, so equality is structural.

Points are eventually periodic words ``pre . period^inf``, which are dense,
closed under prefix substitution, and make every predicate decidable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .errors import AlphabetMismatch, GermlabError

Word = Tuple[int, ...]
EMPTY: Word = ()


def is_prefix(u: Word, w: Word) -> bool:
    return len(u) <= len(w) and w[: len(u)] == u


def comparable(u: Word, w: Word) -> bool:
    return is_prefix(u, w) or is_prefix(w, u)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "e", "ε"):
        return EMPTY
    if not text.isdigit() or "0" in text:
        raise GermlabError(f"bad word {text!r}: letters are digits 1..9")
    return tuple(int(c) for c in text)


def format_word(w: Word, empty: str = "") -> str:
    return "".join(str(c) for c in w) if w else empty


def words_of_length(n: int, k: int) -> Iterator[Word]:
    if k == 0:
        yield EMPTY
        return
    for w in words_of_length(n, k - 1):
        for a in range(1, n + 1):
            yield w + (a,)


def words_up_to(n: int, k: int) -> Iterator[Word]:
    for i in range(k + 1):
        yield from words_of_length(n, i)


def _primitive_root(w: Word) -> Word:
    k = len(w)
    for d in range(1, k + 1):
        if k % d == 0 and w[:d] * (k // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class Point:
    """The infinite word ``pre + period + period + ...`` in canonical form."""

    pre: Word
    period: Word

    def __post_init__(self):
        if not self.period:
            raise GermlabError("period must be nonempty")
        pre, period = tuple(self.pre), _primitive_root(tuple(self.period))
        # absorb a trailing preperiod letter into a rotation of the period
        while pre and pre[-1] == period[-1]:
            pre = pre[:-1]
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "period", period)

    def letter(self, i: int) -> int:
        if i < len(self.pre):
            return self.pre[i]
        return self.period[(i - len(self.pre)) % len(self.period)]

    def prefix(self, k: int) -> Word:
        return tuple(self.letter(i) for i in range(k))

    def startswith(self, w: Word) -> bool:
        return all(self.letter(i) == c for i, c in enumerate(w))

    def shift(self, k: int) -> "Point":
        """Drop the first k letters."""
        if k <= len(self.pre):
            return Point(self.pre[k:], self.period)
        r = (k - len(self.pre)) % len(self.period)
        return Point(EMPTY, self.period[r:] + self.period[:r])

    def prepend(self, w: Word) -> "Point":
        return Point(tuple(w) + self.pre, self.period)

    def max_letter(self) -> int:
        return max(self.pre + self.period)

    def __str__(self):
        return f"{format_word(self.pre)}({format_word(self.period)})"


def parse_point(text: str) -> Point:
    """``"u(v)"`` denotes u v v v ..."""
    text = text.strip()
    if not text.endswith(")") or "(" not in text:
        raise GermlabError(f"bad point {text!r}: expected u(v)")
    pre, period = text[:-1].split("(", 1)
    return Point(parse_word(pre), parse_word(period))


def random_point(rng: random.Random, n: int, max_pre: int = 3, max_period: int = 3) -> Point:
    pre = tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_pre)))
    period = tuple(rng.randint(1, n) for _ in range(rng.randint(1, max_period)))
    return Point(pre, period)


def _canonical(n: int, words: Iterable[Word]) -> Tuple[Word, ...]:
    ws = set(tuple(w) for w in words)
    # antichain: drop any word having a proper prefix in the family
    ws = {w for w in ws if not any(w[:i] in ws for i in range(len(w)))}
    changed = True
    while changed:
        changed = False
        for w in sorted(ws, key=len, reverse=True):
            if not w or w not in ws:
                continue
            parent = w[:-1]
            sibs = [parent + (a,) for a in range(1, n + 1)]
            if all(s in ws for s in sibs):
                ws.difference_update(sibs)
                ws.add(parent)
                changed = True
    return tuple(sorted(ws))


class ClopenSet:
    """A compact open subset of the n-letter Cantor space."""

    __slots__ = ("n", "words")

    def __init__(self, n: int, words: Iterable[Word] = ()):
        if n < 1:
            raise GermlabError("alphabet size must be positive")
        words = [tuple(w) for w in words]
        for w in words:
            if any(not 1 <= c <= n for c in w):
                raise AlphabetMismatch(f"word {w} has letters outside 1..{n}")
        self.n = n
        self.words: Tuple[Word, ...] = _canonical(n, words)

    @classmethod
    def whole(cls, n: int) -> "ClopenSet":
        return cls(n, [EMPTY])

    @classmethod
    def empty(cls, n: int) -> "ClopenSet":
        return cls(n, [])

    def _same(self, other: "ClopenSet"):
        if self.n != other.n:
            raise AlphabetMismatch(f"alphabets {self.n} and {other.n} differ")

    def is_empty(self) -> bool:
        return not self.words

    def is_whole(self) -> bool:
        return self.words == (EMPTY,)

    def intersect(self, other: "ClopenSet") -> "ClopenSet":
        self._same(other)
        out = []
        for a in self.words:
            for b in other.words:
                if is_prefix(a, b):
                    out.append(b)
                elif is_prefix(b, a):
                    out.append(a)
        return ClopenSet(self.n, out)

    def union(self, other: "ClopenSet") -> "ClopenSet":
        self._same(other)
        return ClopenSet(self.n, self.words + other.words)

    def complement(self) -> "ClopenSet":
        ws = set(self.words)
        out: List[Word] = []
        stack = [EMPTY]
        while stack:
            w = stack.pop()
            if w in ws:
                continue
            if any(is_prefix(w, v) for v in ws):
                stack.extend(w + (a,) for a in range(1, self.n + 1))
            else:
                out.append(w)
        return ClopenSet(self.n, out)

    def difference(self, other: "ClopenSet") -> "ClopenSet":
        return self.intersect(other.complement())

    def is_subset(self, other: "ClopenSet") -> bool:
        return self.difference(other).is_empty()

    def contains(self, x: Point) -> bool:
        return any(x.startswith(w) for w in self.words)

    def depth(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def refine(self, depth: int) -> FrozenSet[Word]:
        """The same set as a family of words of length exactly ``depth``."""
        if depth < self.depth():
            raise GermlabError(f"depth {depth} below representation depth {self.depth()}")
        out = set()
        for w in self.words:
            for tail in words_of_length(self.n, depth - len(w)):
                out.add(w + tail)
        return frozenset(out)

    def to_strings(self) -> List[str]:
        return [format_word(w) for w in self.words]

    __and__ = intersect
    __or__ = union
    __sub__ = difference
    __invert__ = complement
    __le__ = is_subset

    def __contains__(self, x: Point) -> bool:
        return self.contains(x)

    def __eq__(self, other):
        return isinstance(other, ClopenSet) and self.n == other.n and self.words == other.words

    def __hash__(self):
        return hash((self.n, self.words))

    def __repr__(self):
        return f"ClopenSet(n={self.n}, {self.to_strings()})"


def cylinder(mu: Sequence[int], n: int) -> ClopenSet:
    return ClopenSet(n, [tuple(mu)])


def union_all(n: int, family: Iterable[ClopenSet]) -> ClopenSet:
    words: List[Word] = []
    for u in family:
        if u.n != n:
            raise AlphabetMismatch(f"alphabets {n} and {u.n} differ")
        words.extend(u.words)
    return ClopenSet(n, words)


def point_in(x: Point, u: ClopenSet) -> bool:
    return u.contains(x)


def covers(family: Sequence[ClopenSet], u: ClopenSet) -> bool:
    return u.is_subset(union_all(u.n, family))


def clopen_from_strings(n: int, words: Iterable[str]) -> ClopenSet:
    return ClopenSet(n, [parse_word(w) for w in words])


def random_clopen(rng: random.Random, n: int, max_words: int = 4, max_len: int = 4) -> ClopenSet:
    k = rng.randint(0, max_words)
    return ClopenSet(
        n,
        [tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len))) for _ in range(k)],
    )


@dataclass(frozen=True)
class FiniteSpace:
    """Discrete space {0..size-1}; subsets are frozensets of point indices."""

    size: int
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        if len(self.labels) != self.size:
            raise GermlabError("label count does not match space size")

    @property
    def points(self) -> range:
        return range(self.size)

    def subset(self, pts: Iterable[int]) -> FrozenSet[int]:
        out = frozenset(int(p) for p in pts)
        if any(not 0 <= p < self.size for p in out):
            raise GermlabError(f"points {sorted(out)} outside space of size {self.size}")
        return out
