"""The polycyclic monoid P_n with symbolic normal forms s_mu s_nu^*.

P_n is infinite, so nothing here is tabulated.  Set-level statements are
evaluated on the finite slice of pairs with |mu|, |nu| <= bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

from .clopen import ClopenSet, EMPTY, Word, covers, cylinder, format_word, is_prefix, parse_word, words_of_length, words_up_to
from .errors import BoundTooSmall, GermlabError, ZeroHasNoLevel


class Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (Zero, ())


ZERO = Zero()


@dataclass(frozen=True, order=True)
class Pair:
    """s_mu s_nu^*"""

    mu: Word
    nu: Word

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "nu", tuple(self.nu))

    @property
    def offset(self) -> int:
        return len(self.mu) - len(self.nu)

    def __repr__(self):
        return f"Pair({format_word(self.mu, 'e')}/{format_word(self.nu, 'e')})"


PolyElement = Union[Pair, Zero]
ONE = Pair(EMPTY, EMPTY)


def s(mu: Iterable[int] = (), nu: Iterable[int] = ()) -> Pair:
    return Pair(tuple(mu), tuple(nu))


def mul(a: PolyElement, b: PolyElement) -> PolyElement:
    """(s_mu s_nu*)(s_ka s_la*): mu ka' / la if ka = nu ka'; mu / la nu' if nu = ka nu'."""
    if a is ZERO or b is ZERO:
        return ZERO
    mu, nu, ka, la = a.mu, a.nu, b.mu, b.nu
    if is_prefix(nu, ka):
        return Pair(mu + ka[len(nu):], la)
    if is_prefix(ka, nu):
        return Pair(mu, la + nu[len(ka):])
    return ZERO


def star(a: PolyElement) -> PolyElement:
    return ZERO if a is ZERO else Pair(a.nu, a.mu)


def prod(*elements: PolyElement) -> PolyElement:
    out = elements[0]
    for b in elements[1:]:
        out = mul(out, b)
    return out


pn_mul = mul
pn_star = star


def is_idempotent(a: PolyElement) -> bool:
    return a is ZERO or a.mu == a.nu


def idempotent(mu: Iterable[int]) -> Pair:
    mu = tuple(mu)
    return Pair(mu, mu)


def level(a: PolyElement) -> Tuple[int, int]:
    if a is ZERO:
        raise ZeroHasNoLevel("0 belongs to no P_n^{k,l}")
    return len(a.mu), len(a.nu)


def in_Mn(a: PolyElement) -> bool:
    return a is ZERO or len(a.mu) == len(a.nu)


def in_Pnm(a: PolyElement, m: int) -> bool:
    if a is ZERO:
        return True
    k = a.offset
    return k == 0 if m == 0 else k % m == 0


def parse_element(text: str) -> PolyElement:
    """``"mu/nu"`` with ``e`` for the empty word; ``"0"`` for zero."""
    text = text.strip()
    if text == "0":
        return ZERO
    if "/" not in text:
        raise GermlabError(f"bad element {text!r}: expected mu/nu")
    mu, nu = text.split("/", 1)
    return Pair(parse_word(mu), parse_word(nu))


def format_element(a: PolyElement) -> str:
    if a is ZERO:
        return "0"
    return f"{format_word(a.mu, 'e')}/{format_word(a.nu, 'e')}"


def max_letter(a: PolyElement) -> int:
    if a is ZERO:
        return 0
    return max(a.mu + a.nu, default=0)


# -- slices -----------------------------------------------------------------


def level_set(n: int, k: int, l: int) -> FrozenSet[Pair]:
    """P_n^{k,l}"""
    return frozenset(Pair(mu, nu) for mu in words_of_length(n, k) for nu in words_of_length(n, l))


def elements_up_to(n: int, bound: int) -> List[Pair]:
    """Nonzero elements with |mu|, |nu| <= bound."""
    ws = list(words_up_to(n, bound))
    return [Pair(mu, nu) for mu in ws for nu in ws]


def idempotents_up_to(n: int, bound: int) -> List[Pair]:
    return [idempotent(w) for w in words_up_to(n, bound)]


def idempotent_scan(n: int, bound: int) -> Set[PolyElement]:
    """Idempotents of the slice found by testing a*a == a (cross-check of the normal form)."""
    return {a for a in elements_up_to(n, bound) if mul(a, a) == a} | {ZERO}


def truncation(n: int, bound: int, pred: Callable[[PolyElement], bool]) -> FrozenSet[Pair]:
    return frozenset(a for a in elements_up_to(n, bound) if pred(a))


def in_bound(a: PolyElement, bound: int) -> bool:
    return a is ZERO or (len(a.mu) <= bound and len(a.nu) <= bound)


# -- level product lemma ------------------------------------------------------


def expected_level(i: int, j: int, k: int, l: int) -> Tuple[int, int]:
    return (i + k - j, l) if k >= j else (i, j - k + l)


def verify_level_products(n: int, bound: int) -> dict:
    """Multiply P^{i,j} by P^{k,l} exhaustively for all i,j,k,l <= bound.

    The nonzero products must fill exactly the predicted level; 0 occurs
    only when both inner lengths j and k are positive, so the comparison is
    made after adjoining 0 to both sides.
    """
    cases = []
    for i, j, k, l in product(range(bound + 1), repeat=4):
        got = {mul(a, b) for a in level_set(n, i, j) for b in level_set(n, k, l)}
        ek, el = expected_level(i, j, k, l)
        want = set(level_set(n, ek, el))
        both = True
        if k == j:
            both = expected_level(i, j, k, l) == (i + k - j, l) == (i, j - k + l)
        zero_seen = ZERO in got
        cases.append(
            {
                "ijkl": [i, j, k, l],
                "expected_level": [ek, el],
                "equal": (got | {ZERO}) == (want | {ZERO}) and both,
                "zero_in_product": zero_seen,
                "zero_predicted": j > 0 and k > 0 and n >= 2,
            }
        )
    return {
        "theorem": "level products P^{i,j} P^{k,l}",
        "n": n,
        "bound": bound,
        "cases": cases,
        "case_count": len(cases),
        "verdict": all(c["equal"] and c["zero_in_product"] == c["zero_predicted"] for c in cases),
    }


# -- subsemigroups of P_n -----------------------------------------------------


@dataclass(frozen=True)
class PolySubsemigroup:
    """A wide subsemigroup of P_n given by a membership predicate.

    Supported kinds: ``"Pnm"`` (offset in m Z, with M_n = P_n^0), ``"closure"``
    (a truncated finite closure; membership is exact only within ``bound``),
    and ``"kernel"`` (kernel of a partial homomorphism).
    """

    n: int
    kind: str
    contains: Callable[[PolyElement], bool]
    label: str
    m: Optional[int] = None
    bound: Optional[int] = None
    generators: Tuple[PolyElement, ...] = ()

    def __call__(self, a: PolyElement) -> bool:
        return self.contains(a)

    def slice(self, bound: int) -> FrozenSet[Pair]:
        return truncation(self.n, bound, self.contains)


def Pnm(n: int, m: int) -> PolySubsemigroup:
    return PolySubsemigroup(n, "Pnm", lambda a: in_Pnm(a, m), f"P_{n}^{m}", m=m)


def Mn(n: int) -> PolySubsemigroup:
    return Pnm(n, 0)


def from_slice(n: int, members: FrozenSet[Pair], bound: int, generators=()) -> PolySubsemigroup:
    members = frozenset(members)
    return PolySubsemigroup(
        n, "closure", lambda a: a is ZERO or a in members,
        f"closure({', '.join(format_element(g) for g in generators)})@{bound}",
        bound=bound, generators=tuple(generators),
    )


def join_closure_slice(
    n: int, generators: Iterable[PolyElement], bound: int, contain_Mn: bool = True
) -> FrozenSet[Pair]:
    """The beta-join closure of E(P_n) and ``generators`` on the slice |mu|,|nu| <= bound.

    With ``contain_Mn`` (the default, as in the classification) all of M_n
    is included from the start.

    Alternates product/star closure inside the slice with the join step
    "add s when the cylinders D_f with s f in T cover D_{s*s} = C(nu)".
    Every added element lies in the true closure; products leaving the
    slice are discarded.
    """
    gens = [g for g in generators if g is not ZERO]
    for g in gens:
        if not in_bound(g, bound):
            raise BoundTooSmall(f"generator {format_element(g)} exceeds bound {bound}")
    universe = elements_up_to(n, bound)
    if contain_Mn:
        current: Set[Pair] = {a for a in universe if len(a.mu) == len(a.nu)}
    else:
        current = {a for a in universe if a.mu == a.nu}
    for g in gens:
        current |= {g, star(g)}
    frontier = list(current)
    while True:
        # product closure within the slice, semi-naive
        while frontier:
            new: List[Pair] = []
            snapshot = list(current)
            for a in frontier:
                for b in snapshot:
                    for c in (mul(a, b), mul(b, a)):
                        if c is not ZERO and c not in current and in_bound(c, bound):
                            current.add(c)
                            new.append(c)
                            sc = star(c)
                            if sc not in current:
                                current.add(sc)
                                new.append(sc)
            frontier = new
        # join step
        added = []
        for a in universe:
            if a in current:
                continue
            fam = [
                cylinder(a.nu + tail, n)
                for d in range(1, bound - max(len(a.mu), len(a.nu)) + 1)
                for tail in words_of_length(n, d)
                if Pair(a.mu + tail, a.nu + tail) in current
            ]
            if fam and covers(fam, cylinder(a.nu, n)):
                added.append(a)
        if not added:
            return frozenset(current)
        for a in added:
            current.add(a)
            current.add(star(a))
        frontier = list(added) + [star(a) for a in added]


def classify(n: int, generators: Iterable[PolyElement], bound: int = 4) -> dict:
    """Identify the beta-join closure of M_n and ``generators`` as some P_n^m.

    m is the least |offset| among closure elements outside M_n (0 if none).
    The report checks the slice against P_n^m and records the lemma
    properties observed on the slice.
    """
    gens = tuple(generators)
    closure = join_closure_slice(n, gens, bound)
    offsets = {abs(a.offset) for a in closure if a.offset != 0}
    m = min(offsets) if offsets else 0
    target = truncation(n, bound, lambda a: in_Pnm(a, m))

    levels = {(len(a.mu), len(a.nu)) for a in closure}
    full_levels = all(level_set(n, k, l) <= closure for k, l in levels)
    symmetric = all((l, k) in levels for k, l in levels)
    up_shift = all((k + 1, l + 1) in levels for k, l in levels if max(k, l) < bound)
    down_shift = all((k - 1, l - 1) in levels for k, l in levels if k > 0 and l > 0)
    return {
        "theorem": "classification of join closed subsemigroups containing M_n",
        "n": n,
        "generators": [format_element(g) for g in gens],
        "m": m,
        "equals_Pn": m == 1,
        "closure_size": len(closure),
        "slice_equals_Pnm": closure == target,
        "checks": {
            "levels_saturated": full_levels,
            "star_symmetric": symmetric,
            "up_shift": up_shift,
            "down_shift": down_shift,
        },
        "truncation": bound,
        "verdict": closure == target and full_levels and symmetric and up_shift and down_shift,
    }


# -- idempotent ideals --------------------------------------------------------


@dataclass(frozen=True)
class CylinderIdeal:
    """The ideal of E(P_n) generated by s_w s_w^* for w in ``generators``.

    Its members are 0 and s_u s_u^* with u extending some generator.
    """

    n: int
    generators: Tuple[Word, ...]

    def contains(self, e: PolyElement) -> bool:
        if e is ZERO:
            return True
        return e.mu == e.nu and any(is_prefix(g, e.mu) for g in self.generators)

    def members_up_to(self, depth: int) -> List[Pair]:
        return [idempotent(w) for w in words_up_to(self.n, depth) if self.contains(idempotent(w))]

    def domain(self) -> ClopenSet:
        """D(J) = union of the C(g)."""
        return ClopenSet(self.n, self.generators)


def is_cover_pn(cover: Iterable[Pair], ideal: CylinderIdeal) -> bool:
    """Decide whether ``cover`` is a cover of the (infinite) cylinder ideal.

    If some nonzero e of the ideal is orthogonal to every c of the cover,
    so is every e' <= e; hence it suffices to test the members at depth
    max(|c|, |g|), which is finite.
    """
    cover = [c for c in cover if c is not ZERO]
    for c in cover:
        if not ideal.contains(c):
            from .errors import CNotContained

            raise CNotContained(f"{format_element(c)} not in the ideal")
    depth = max([len(c.mu) for c in cover] + [len(g) for g in ideal.generators] + [0])
    for w in words_of_length(ideal.n, depth):
        e = idempotent(w)
        if not ideal.contains(e):
            continue
        if all(mul(e, c) is ZERO for c in cover):
            return False
    return True
