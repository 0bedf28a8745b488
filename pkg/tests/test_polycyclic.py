from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from germlab import polycyclic as pc
from germlab.errors import BoundTooSmall, CNotContained, GermlabError, ZeroHasNoLevel

word = st.lists(st.integers(1, 2), max_size=4).map(tuple)
element = st.one_of(st.just(pc.ZERO), st.builds(pc.Pair, word, word))


def brute_mul(a, b):
    """Oracle: s_mu s_nu^* s_kappa s_lambda^* using s_i^* s_j = delta_ij only.

    The middle s_nu^* s_kappa cancels letters pairwise from the inside.
    """
    if a is pc.ZERO or b is pc.ZERO:
        return pc.ZERO
    nu, ka = list(a.nu), list(b.mu)
    while nu and ka:
        if nu.pop(0) != ka.pop(0):
            return pc.ZERO
    # leftovers: s_mu (s_nu')^* or s_mu s_kappa'
    return pc.Pair(a.mu + tuple(ka), b.nu + tuple(nu))


def test_normal_form_product_examples():
    s = pc.s
    assert pc.mul(s((1,)), pc.star(s((1,)))) == s((1,), (1,))
    assert pc.mul(pc.star(s((1,))), s((1,))) == pc.ONE
    assert pc.mul(pc.star(s((1,))), s((2,))) is pc.ZERO
    assert pc.mul(s((1,), (2,)), s((2, 1), (1,))) == s((1, 1), (1,))
    assert pc.mul(s((), (1, 2)), s((1,), ())) == s((), (2,))


@settings(max_examples=300, deadline=None)
@given(element, element)
def test_product_matches_cancellation_oracle(a, b):
    assert pc.mul(a, b) == brute_mul(a, b)


@settings(max_examples=300, deadline=None)
@given(element, element, element)
def test_associative(a, b, c):
    assert pc.mul(pc.mul(a, b), c) == pc.mul(a, pc.mul(b, c))


@settings(max_examples=300, deadline=None)
@given(element, element)
def test_star_antihomomorphism(a, b):
    assert pc.star(pc.mul(a, b)) == pc.mul(pc.star(b), pc.star(a))
    assert pc.prod(a, pc.star(a), a) == a


@settings(max_examples=200, deadline=None)
@given(element)
def test_format_parse_round_trip(a):
    assert pc.parse_element(pc.format_element(a)) == a


def test_parse_examples():
    assert pc.parse_element("0") is pc.ZERO
    assert pc.parse_element("e/e") == pc.ONE
    assert pc.parse_element("1/22") == pc.s((1,), (2, 2))
    assert pc.format_element(pc.s((1,), ())) == "1/e"
    with pytest.raises(GermlabError):
        pc.parse_element("1x/2")


def test_levels():
    assert pc.level(pc.s((1, 2), (1,))) == (2, 1)
    assert pc.s((1, 2), (1,)).offset == 1
    with pytest.raises(ZeroHasNoLevel):
        pc.level(pc.ZERO)
    assert len(pc.level_set(2, 1, 2)) == 8
    assert pc.in_Mn(pc.s((1,), (2,)))
    assert pc.in_Pnm(pc.s((1, 1), ()), 2)
    assert not pc.in_Pnm(pc.s((1,), ()), 2)


def test_level_products_exhaustive():
    rep = pc.verify_level_products(2, 2)
    assert rep["case_count"] == 81
    assert rep["verdict"]


def test_level_product_zero_only_when_both_inner_levels_positive():
    # j = 0 or k = 0 means the middle factor cancels trivially
    for i, j, k, l in product(range(3), repeat=4):
        prods = {pc.mul(a, b) for a in pc.level_set(2, i, j) for b in pc.level_set(2, k, l)}
        assert (pc.ZERO in prods) == (j > 0 and k > 0)


@pytest.mark.parametrize(
    "gens,m", [(["1/e"], 1), (["11/e"], 2), (["111/e"], 3), (["1/22"], 1), (["11/2"], 1), (["e/11", "1/111"], 2), (["e/11", "111/e"], 1)]
)
def test_classify_small_bound(gens, m):
    rep = pc.classify(2, [pc.parse_element(g) for g in gens], bound=3)
    assert rep["m"] == m
    assert rep["slice_equals_Pnm"]
    assert rep["equals_Pn"] == (m == 1)


def test_classify_without_generators_gives_Mn():
    rep = pc.classify(2, [], bound=3)
    assert rep["m"] == 0 and rep["slice_equals_Pnm"]


def test_classify_generator_beyond_bound():
    with pytest.raises(BoundTooSmall):
        pc.classify(2, [pc.parse_element("1111/e")], bound=3)


def test_closure_without_Mn_is_smaller():
    full = pc.join_closure_slice(2, [], 2, contain_Mn=True)
    small = pc.join_closure_slice(2, [], 2, contain_Mn=False)
    assert small < full
    assert all(pc.is_idempotent(a) for a in small)


def test_cylinder_ideal_covers():
    J = pc.CylinderIdeal(2, ((1,),))
    e = pc.idempotent
    assert pc.is_cover_pn([e((1,))], J)
    assert pc.is_cover_pn([e((1, 1)), e((1, 2))], J)
    assert not pc.is_cover_pn([e((1, 1))], J)
    assert not pc.is_cover_pn([], J)
    assert pc.is_cover_pn([], pc.CylinderIdeal(2, ()))
    with pytest.raises(CNotContained):
        pc.is_cover_pn([e((2,))], J)
