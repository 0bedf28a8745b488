"""Characters of semilattices, the spectral action, and tight spectra.

A character is stored as its support, a proper filter of E(S).  On a
finite semilattice the pointwise topology is discrete, so the closure of
the ultracharacters adds nothing: tight characters and ultracharacters
coincide there.  The two infinite examples that separate these notions are
only reachable as growth tables over finite truncations.
"""

from __future__ import annotations

from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from . import polycyclic as pc
from .action import FiniteAction, PolycyclicAction
from .clopen import Point
from .errors import GermlabError, HypothesisFailed, NotFiniteModel
from .germ import FiniteGermGroupoid
from .semigroup import InverseSemigroup, orthogonal_semilattice

Character = FrozenSet[int]


def is_proper_filter(S: InverseSemigroup, F: Iterable[int]) -> bool:
    F = frozenset(F)
    E = S.idempotents
    if not F or not F <= E or S.zero in F:
        return False
    if any(S.mul(e, f) not in F for e in F for f in F):
        return False
    return all(f in F for e in F for f in E if S.leq(e, f))


def characters(S: InverseSemigroup) -> List[Character]:
    """All proper filters of E(S).

    A finite filter contains the meet of its members, so it is the
    principal filter of a nonzero idempotent.
    """
    E = S.idempotents
    out = {frozenset(f for f in E if S.leq(e, f)) for e in E if e != S.zero}
    return sorted(out, key=lambda F: (len(F), sorted(F)))


def characters_bruteforce(S: InverseSemigroup) -> List[Character]:
    """Oracle: filter every subset of E(S)."""
    E = sorted(S.idempotents)
    out = []
    for r in range(1, len(E) + 1):
        for sub in combinations(E, r):
            if is_proper_filter(S, sub):
                out.append(frozenset(sub))
    return sorted(out, key=lambda F: (len(F), sorted(F)))


def homomorphism_supports(S: InverseSemigroup) -> List[Character]:
    """Oracle: supports of all nonzero homomorphisms E(S) -> {0, 1} sending 0 to 0."""
    E = sorted(S.idempotents)
    out = []
    for bits in range(1, 2 ** len(E)):
        xi = {e: (bits >> i) & 1 for i, e in enumerate(E)}
        if xi[S.zero] == 0 and all(xi[S.mul(e, f)] == xi[e] * xi[f] for e in E for f in E):
            out.append(frozenset(e for e in E if xi[e]))
    return sorted(out, key=lambda F: (len(F), sorted(F)))


def is_ultra(S: InverseSemigroup, xi: Character, chars: Optional[List[Character]] = None) -> bool:
    """No character strictly above xi."""
    chars = characters(S) if chars is None else chars
    return not any(xi < eta for eta in chars)


def ultracharacters(S: InverseSemigroup) -> List[Character]:
    chars = characters(S)
    return [xi for xi in chars if is_ultra(S, xi, chars)]


def tight_characters(S: InverseSemigroup) -> List[Character]:
    """Closure of the ultracharacters; the topology is discrete here."""
    ultra = ultracharacters(S)
    return list(ultra)


def character_names(S: InverseSemigroup, xi: Character) -> List[str]:
    return [S.names[e] for e in sorted(xi)]


# -- spectral action -----------------------------------------------------------


def spectral_action(S: InverseSemigroup) -> Tuple[FiniteAction, List[Character]]:
    """S acting on its characters by beta_s(xi)(e) = xi(s* e s)."""
    chars = characters(S)
    index = {xi: i for i, xi in enumerate(chars)}
    E = S.idempotents
    domains = {e: [i for i, xi in enumerate(chars) if e in xi] for e in E}
    maps = {}
    for s in S.elements:
        if s in E:
            continue
        top = S.source_idempotent(s)
        m = {}
        for i, xi in enumerate(chars):
            if top in xi:
                image = frozenset(e for e in E if S.prod(S.star[s], e, s) in xi)
                m[i] = index[image]
        maps[s] = m
    labels = ["{" + ",".join(character_names(S, xi)) + "}" for xi in chars]
    return FiniteAction(S, len(chars), domains, maps, labels), chars


def ultra_restriction(S: InverseSemigroup) -> Tuple[FiniteAction, List[Character]]:
    """The spectral action restricted to the (invariant) ultracharacters."""
    action, chars = spectral_action(S)
    ultra = ultracharacters(S)
    idx = [chars.index(xi) for xi in ultra]
    return action.restrict(idx), [chars[i] for i in sorted(idx)]


def ultra_invariant(S: InverseSemigroup) -> bool:
    action, chars = spectral_action(S)
    ultra = {chars.index(xi) for xi in ultracharacters(S)}
    return all(
        action.apply(s, i) in ultra
        for s in S.elements
        for i in ultra
        if i in action.source_domain(s)
    )


# -- characters of points --------------------------------------------------------


def _require(action: FiniteAction):
    if not action.is_strongly_tight():
        raise HypothesisFailed("the action is not strongly tight")
    if not action.domains_nonzero():
        raise HypothesisFailed("some nonzero idempotent has an empty domain")


def point_character(action: FiniteAction, x: int) -> Character:
    """xi_x(e) = 1 iff x in D_e, without checking any hypothesis."""
    S = action.semigroup
    return frozenset(e for e in S.idempotents if x in action.domain(e))


def xi_of_point(action, x, strict: bool = True):
    """The character of a point; on P_n an oracle answering xi_x(s_k s_k^*).

    With ``strict`` the hypotheses under which xi_x is an ultracharacter are
    enforced and a non-ultra result raises HypothesisFailed.
    """
    if isinstance(action, PolycyclicAction):
        return CharacterOracle(action, x)
    if strict:
        _require(action)
    xi = point_character(action, x)
    if strict and not is_ultra(action.semigroup, xi):
        raise HypothesisFailed(f"xi_{x} is not an ultracharacter")
    return xi


class CharacterOracle:
    """xi_x on E(P_n): s_k s_k^* maps to 1 iff x begins with k."""

    def __init__(self, action: PolycyclicAction, x: Point):
        self.action = action
        self.x = x

    def __call__(self, e: pc.PolyElement) -> int:
        if not pc.is_idempotent(e):
            raise GermlabError(f"{pc.format_element(e)} is not idempotent")
        if e is pc.ZERO:
            return 0
        return int(self.x.startswith(e.mu))

    def support(self, depth: int) -> List[pc.Pair]:
        return [e for e in pc.idempotents_up_to(self.action.n, depth) if self(e)]

    def is_ultra_to_depth(self, depth: int) -> bool:
        """Filter axioms and maximality, tested on idempotents with |k| <= depth.

        A filter F is maximal iff every f outside F is orthogonal to some
        member of F.
        """
        idems = pc.idempotents_up_to(self.action.n, depth) + [pc.ZERO]
        F = [e for e in idems if self(e)]
        if self(pc.ZERO):
            return False
        if any(not self(pc.mul(e, f)) for e in F for f in F):
            return False
        # upward closed: e <= f means ef = e
        if any(pc.mul(e, f) == e and not self(f) for e in F for f in idems):
            return False
        return all(
            any(pc.mul(e, f) is pc.ZERO for e in F) for f in idems if not self(f) and f is not pc.ZERO
        )


def verify_characterization(action: FiniteAction) -> dict:
    """x -> xi_x is a bijection onto the ultracharacters inducing a groupoid isomorphism."""
    if not isinstance(action, FiniteAction):
        raise NotFiniteModel("the characterization check needs a finite action")
    _require(action)
    S = action.semigroup
    xs = list(action.points)
    xi = {x: point_character(action, x) for x in xs}
    theta, ultra = ultra_restriction(S)
    pos = {F: i for i, F in enumerate(ultra)}
    all_ultra = all(F in pos for F in xi.values())
    injective = len(set(xi.values())) == len(xs)
    surjective = set(xi.values()) == set(ultra)
    phi = {x: pos.get(xi[x]) for x in xs}
    domains = all_ultra and all(
        {phi[x] for x in action.domain(e)} == set(theta.domain(e)) for e in S.idempotents
    )
    equivariant = all_ultra and all(
        phi[action.apply(s, x)] == theta.apply(s, phi[x])
        for s in S.elements
        for x in action.source_domain(s)
    )

    germ_iso = False
    if all_ultra and injective and surjective and domains:
        G = FiniteGermGroupoid(action)
        H = FiniteGermGroupoid(theta)
        img = {g: H.germ(g.rep, phi[g.base]) for g in G.elements}
        germ_iso = (
            len(set(img.values())) == len(G.elements) == len(H.elements)
            and all(
                img[G.mul(g, h)] == H.mul(img[g], img[h])
                for g in G.elements
                for h in G.elements
                if G.source(g) == G.range(h)
            )
            and all(img[G.inv(g)] == H.inv(img[g]) for g in G.elements)
            and {img[u] for u in G.units} == set(H.units)
            # well defined: every representative of a germ lands on the same image
            and all(
                H.germ(s, phi[x]) == img[G.germ(s, x)]
                for x in xs
                for s in S.elements
                if x in action.source_domain(s)
            )
        )
    checks = {
        "points_give_ultracharacters": all_ultra,
        "injective": injective,
        "surjective": surjective,
        "domains_match": domains,
        "equivariant": equivariant,
        "germ_isomorphism": germ_iso,
        "ultra_invariant": ultra_invariant(S),
    }
    return {
        "theorem": "strongly tight actions are spectral on ultracharacters",
        "instances": [repr(action)],
        "counts": {"points": len(xs), "ultracharacters": len(ultra), "characters": len(characters(S))},
        "checks": checks,
        "verdict": all(checks.values()),
        "truncation": None,
    }


# -- compactness and the orthogonal families --------------------------------------


def compactness_report(S: InverseSemigroup) -> dict:
    chars = characters(S)
    ultra = ultracharacters(S)
    tight = tight_characters(S)
    return {
        "characters": len(chars),
        "ultra": len(ultra),
        "tight": len(tight),
        "ultra_equals_tight": set(ultra) == set(tight),
        "ultra_compact": True,
        "note": "finite semilattice: the character space is discrete and compact",
    }


def family_table(max_count: int, with_unit: bool) -> dict:
    rows = []
    for N in range(1, max_count + 1):
        E = orthogonal_semilattice(N, with_unit)
        row = compactness_report(E)
        row.pop("note")
        row["N"] = N
        rows.append(row)
    return {
        "family": "orthogonal" + ("+unit" if with_unit else ""),
        "rows": rows,
        "note": "finite truncations only; the infinite-limit topology is out of reach",
    }
