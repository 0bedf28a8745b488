import random

import pytest

from germlab import germ as gm
from germlab import polycyclic as pc
from germlab.action import PolycyclicAction, natural_action
from germlab.clopen import parse_point
from germlab.errors import (
    HypothesisFailed,
    NotComposable,
    NotFiniteModel,
    NotPartialHom,
    NotStronglyTight,
    NotWide,
)


def test_finite_germs(i2_action):
    G = gm.FiniteGermGroupoid(i2_action)
    S = i2_action.semigroup
    assert len(G.elements) == 4
    # [1, x] = [e_x, x]
    assert G.germ(S.unit, 0) == G.germ(S.by_name("e1"), 0)
    # the swap restricted to 1 is 1>2
    assert G.germ(S.by_name("12>21"), 0) == G.germ(S.by_name("1>2"), 0)
    g = G.germ(S.by_name("1>2"), 0)
    assert G.source(g) == 0 and G.range(g) == 1
    assert G.mul(G.inv(g), g) == G.unit(0)
    with pytest.raises(NotComposable):
        G.mul(g, g)


def test_correspondence_i2(i2_action):
    rep = gm.enumerate_correspondence(i2_action)
    assert rep["verdict"]
    assert rep["counts"] == {"subgroupoids": 2, "subsemigroups": 2, "germs": 4}


def test_correspondence_i3():
    rep = gm.enumerate_correspondence(natural_action(3))
    assert rep["verdict"]
    # wide subgroupoids of the pair groupoid on 3 points are equivalence relations
    assert rep["counts"]["subgroupoids"] == 5


def test_correspondence_requires_strong_tightness():
    from germlab.action import semilattice_action
    from germlab.semigroup import two_point_semilattice

    E = two_point_semilattice()
    A = semilattice_action(E, 2, {1: [0, 1]})
    with pytest.raises(NotStronglyTight):
        gm.enumerate_correspondence(A)


def test_alpha_join_closed_i2(i2_action):
    S = i2_action.semigroup
    E = S.idempotents
    a, b = S.by_name("1>2"), S.by_name("2>1")
    T = S.closure(E | {a})
    assert T == E | {a, b}
    # the swap is the join of 1>2 and 2>1 but is missing from T
    assert not gm.is_alpha_join_closed(i2_action, T)
    assert gm.alpha_join_closure(i2_action, [a]) == frozenset(S.elements)
    assert S.closure(E | {S.by_name("12>21")}) == frozenset(S.elements)
    assert gm.is_alpha_join_closed(i2_action, E)
    with pytest.raises(NotWide):
        gm.is_alpha_join_closed(i2_action, {S.zero})


def test_poly_germs_strip_common_tails():
    A = PolycyclicAction(2)
    G = gm.PolyGermGroupoid(A)
    x = parse_point("(12)")
    g = G.germ(pc.parse_element("21/1"), x)
    h = G.germ(pc.parse_element("212/12"), x)
    assert g == h
    assert G.germ(pc.parse_element("1/1"), x) == G.unit(x)
    assert G.equivalent(pc.parse_element("21/1"), pc.parse_element("212/12"), x)
    assert not G.equivalent(pc.parse_element("21/1"), pc.parse_element("22/1"), x)


def test_poly_germ_algebra():
    A = PolycyclicAction(2)
    G = gm.PolyGermGroupoid(A)
    rng = random.Random(0)
    for _ in range(100):
        g = G.random_germ(rng)
        assert G.mul(g, G.inv(g)) == G.unit(G.range(g))
        assert G.inv(G.inv(g)) == g
        assert G.range(g) == A.apply(g.element, g.base)


def test_membership_lemma_sample():
    A = PolycyclicAction(2)
    G = gm.PolyGermGroupoid(A)
    x = parse_point("1(2)")
    for text, T, expect in [("11/1", pc.Pnm(2, 1), True), ("11/1", pc.Mn(2), False), ("11/e", pc.Pnm(2, 2), True)]:
        a = pc.parse_element(text)
        g = G.germ(a, x)
        assert gm.membership(A, T, g) == expect
        assert gm.membership_via_ideal(A, T, g) == expect


def test_j_ideal_finite(i2_action):
    S = i2_action.semigroup
    E = S.idempotents
    swap = S.by_name("12>21")
    J = gm.j_ideal(i2_action, swap, E)
    assert J == {S.zero}
    J_all = gm.j_ideal(i2_action, swap, frozenset(S.elements))
    assert J_all == E


def test_cover_lemma_guard(empty_domain):
    S = empty_domain.semigroup
    with pytest.raises(HypothesisFailed):
        gm.cover_lemma(empty_domain, S.idempotents, [S.by_name("1")])


def test_closedness_finite_and_poly(i2_action):
    S = i2_action.semigroup
    assert gm.is_closed_subgroupoid(i2_action, S.idempotents)
    A = PolycyclicAction(2)
    rep = gm.is_closed_subgroupoid(A, pc.Pnm(2, 2), bound=3, report=True)
    assert rep["verdict"]
    assert rep["conditions"]["cocycle_preimage"] is True
    assert rep["truncation"] == 3


def test_kernel_of_length():
    A = PolycyclicAction(2)
    rep = gm.kernel_of_partial_hom(A, gm.length_hom(), bound=3, trials=100)
    assert rep["verdict"]
    assert rep["kernel"].slice(3) == pc.Mn(2).slice(3)
    rep2 = gm.kernel_of_partial_hom(A, gm.length_hom(3), bound=3, trials=100)
    assert rep2["kernel"].slice(3) == pc.Pnm(2, 3).slice(3)


def test_kernel_finite(i2_action):
    S = i2_action.semigroup
    trivial = gm.from_table(gm.cyclic(2), {s: 0 for s in S.elements}, "trivial")
    rep = gm.kernel_of_partial_hom(i2_action, trivial)
    assert rep["kernel"] == frozenset(S.elements)
    assert rep["verdict"]
    # a sign on the swap alone is not multiplicative: e1 * swap = 1>2
    values = {s: 0 for s in S.elements}
    values[S.by_name("12>21")] = 1
    with pytest.raises(NotPartialHom):
        gm.kernel_of_partial_hom(i2_action, gm.from_table(gm.cyclic(2), values, "sign"))


def test_not_partial_hom():
    A = PolycyclicAction(2)
    bad = gm.PartialHom(gm.integers(), lambda a: len(a.mu), "bad")
    with pytest.raises(NotPartialHom):
        gm.check_partial_hom(A, bad)


def test_t_sub_h_needs_finite_model():
    with pytest.raises(NotFiniteModel):
        gm.t_sub_h(PolycyclicAction(2), [])


def test_cocycle_preimage_gives_Pnm():
    A = PolycyclicAction(2)
    T = gm.cocycle_preimage(A, gm.length_hom(), lambda k: k % 3 == 0, "3Z")
    assert T.slice(3) == pc.Pnm(2, 3).slice(3)
    assert gm.is_alpha_join_closed(A, T, bound=3)


def test_cocycle_preimage_finite(i2_action):
    S = i2_action.semigroup
    G = gm.FiniteGermGroupoid(i2_action)
    trivial = gm.from_table(gm.cyclic(2), {s: 0 for s in S.elements})
    T = gm.cocycle_preimage(i2_action, trivial, lambda g: g == 0)
    c = gm.cocycle(i2_action, trivial)
    assert G.groupoid_of(T) == frozenset(g for g in G.elements if c(g) == 0)
    with pytest.raises(NotPartialHom):
        gm.cocycle_preimage(i2_action, trivial, lambda g: g == 1)
