"""The inverse semigroup of bisections of a finite groupoid and the action rho.

On a finite discrete groupoid every subset is open and compact, so I(G) is
the set of all bisections and every wide subgroupoid is open.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, FrozenSet, List

from . import germ as germ_mod
from .action import FiniteAction
from .errors import NotCompatible, TooLarge
from .germ import FiniteGermGroupoid
from .groupoid import FiniteGroupoid
from .semigroup import InverseSemigroup

Bisection = FrozenSet[int]

MAX_BISECTION_GROUPOID = 8
MAX_CORRESPONDENCE_GROUPOID = 6


def is_bisection(G: FiniteGroupoid, U) -> bool:
    U = list(U)
    return len({G.d[g] for g in U}) == len(U) == len({G.r[g] for g in U})


def product(G: FiniteGroupoid, U: Bisection, V: Bisection) -> Bisection:
    return frozenset(G.mul(a, b) for a in U for b in V if G.composable(a, b))


def inverse(G: FiniteGroupoid, U: Bisection) -> Bisection:
    return frozenset(G.inverse[g] for g in U)


class BisectionSemigroup:
    """I(G) as a validated table, with the index of each bisection."""

    def __init__(self, G: FiniteGroupoid, bisections: List[Bisection]):
        self.groupoid = G
        self.bisections = bisections
        self.index: Dict[Bisection, int] = {U: i for i, U in enumerate(bisections)}
        mult = [[self.index[product(G, U, V)] for V in bisections] for U in bisections]
        names = ["{" + ",".join(G.labels[g] for g in sorted(U)) + "}" for U in bisections]
        self.semigroup = InverseSemigroup(names, mult, self.index[frozenset()])
        self.order_is_inclusion = all(
            self.semigroup.leq(i, j) == (U <= V)
            for i, U in enumerate(bisections)
            for j, V in enumerate(bisections)
        )
        self.inverse_matches = all(
            bisections[self.semigroup.star[i]] == inverse(G, U) for i, U in enumerate(bisections)
        )

    def __len__(self):
        return len(self.bisections)

    def join(self, i: int, j: int) -> int:
        if not self.semigroup.compatible(i, j):
            raise NotCompatible(f"{self.semigroup.names[i]} and {self.semigroup.names[j]} are not compatible")
        U = self.bisections[i] | self.bisections[j]
        return self.index[U]

    def is_join_closed(self, T) -> bool:
        T = frozenset(T)
        S = self.semigroup
        return all(self.join(i, j) in T for i in T for j in T if S.compatible(i, j))


def all_bisections(G: FiniteGroupoid, limit: int = MAX_BISECTION_GROUPOID) -> BisectionSemigroup:
    if G.size > limit:
        raise TooLarge(f"|G| = {G.size} exceeds {limit}")
    bis = [
        frozenset(U)
        for r in range(G.size + 1)
        for U in combinations(G.elements, r)
        if is_bisection(G, U)
    ]
    return BisectionSemigroup(G, bis)


def join(G: FiniteGroupoid, U: Bisection, V: Bisection) -> Bisection:
    """U | V, which must again be a bisection."""
    W = frozenset(U) | frozenset(V)
    if not is_bisection(G, W):
        raise NotCompatible("the union is not a bisection")
    return W


def rho_action(B) -> FiniteAction:
    """rho_U(d(a)) = r(a) for a in U, on the unit space.  Accepts G or I(G)."""
    if isinstance(B, FiniteGroupoid):
        B = all_bisections(B)
    G = B.groupoid
    units = sorted(G.units)
    pt = {u: i for i, u in enumerate(units)}
    S = B.semigroup
    domains = {e: [pt[u] for u in B.bisections[e]] for e in S.idempotents}
    maps = {
        s: {pt[G.d[a]]: pt[G.r[a]] for a in B.bisections[s]}
        for s in S.elements
        if s not in S.idempotents
    }
    return FiniteAction(S, len(units), domains, maps, [G.labels[u] for u in units])


def reconstruction_iso(G: FiniteGroupoid) -> dict:
    """Compare G with the germ groupoid of rho via Phi(a) = [U_a, d(a)] and Psi([U, x]) = d|_U^{-1}(x)."""
    B = all_bisections(G)
    rho = rho_action(B)
    GG = FiniteGermGroupoid(rho)
    units = sorted(G.units)
    pt = {u: i for i, u in enumerate(units)}

    containing = {a: [i for i, U in enumerate(B.bisections) if a in U] for a in G.elements}
    phi_all = {a: {GG.germ(i, pt[G.d[a]]) for i in containing[a]} for a in G.elements}
    independent = all(len(v) == 1 for v in phi_all.values())
    phi = {a: min(v) for a, v in phi_all.items()}

    def psi(g):
        (a,) = [b for b in B.bisections[g.rep] if G.d[b] == units[g.base]]
        return a

    psi_map = {g: psi(g) for g in GG.elements}
    mutual = all(psi_map[phi[a]] == a for a in G.elements) and all(
        phi[psi_map[g]] == g for g in GG.elements
    )
    H, elems = GG.to_groupoid()
    index = {g: i for i, g in enumerate(elems)}
    iso = G.is_isomorphism(H, [index[phi[a]] for a in G.elements]) if mutual else False
    checks = {
        "phi_independent_of_bisection": independent,
        "mutually_inverse": mutual,
        "groupoid_isomorphism": iso,
        "rho_strongly_tight": rho.is_strongly_tight(),
        "order_is_inclusion": B.order_is_inclusion,
        "inverse_is_setwise": B.inverse_matches,
    }
    return {
        "theorem": "G is isomorphic to I(G) x|_rho G0",
        "counts": {"G": G.size, "germs": len(GG.elements), "bisections": len(B)},
        "checks": checks,
        "note": "finite discrete groupoid: open and compact are automatic",
        "verdict": all(checks.values()) and G.size == len(GG.elements),
        "truncation": None,
    }


def join_closed_correspondence(G: FiniteGroupoid, limit: int = MAX_CORRESPONDENCE_GROUPOID) -> dict:
    """Join closed vs rho-join closed on every wide subsemigroup, and the bijection with subgroupoids."""
    if G.size > limit:
        raise TooLarge(f"|G| = {G.size} exceeds {limit}")
    B = all_bisections(G)
    rho = rho_action(B)
    S = B.semigroup
    wide = S.wide_subsemigroups()
    verdicts = [(T, B.is_join_closed(T), germ_mod.is_alpha_join_closed(rho, T)) for T in wide]
    agree = all(j == r for _, j, r in verdicts)
    closed = [T for T, j, _ in verdicts if j]

    def union(T):
        out = set()
        for i in T:
            out |= B.bisections[i]
        return frozenset(out)

    subgroupoids = G.wide_subgroupoids()
    to_H = {T: union(T) for T in closed}
    trip_T = all(frozenset(i for i, U in enumerate(B.bisections) if U <= to_H[T]) == T for T in closed)
    trip_H = all(
        union(frozenset(i for i, U in enumerate(B.bisections) if U <= H)) == H for H in subgroupoids
    )
    bijective = set(to_H.values()) == set(subgroupoids) and len(closed) == len(subgroupoids)
    return {
        "theorem": "join closed wide subsemigroups of I(G) <-> wide subgroupoids of G",
        "counts": {
            "bisections": len(B),
            "wide_subsemigroups": len(wide),
            "join_closed": len(closed),
            "subgroupoids": len(subgroupoids),
        },
        "checks": {
            "join_closed_iff_rho_join_closed": agree,
            "round_trip_T": trip_T,
            "round_trip_H": trip_H,
            "bijective": bijective,
        },
        "verdict": agree and trip_T and trip_H and bijective,
        "truncation": None,
    }
