import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from germlab.clopen import (
    ClopenSet,
    Point,
    clopen_from_strings,
    covers,
    cylinder,
    parse_point,
    parse_word,
    point_in,
    union_all,
    words_of_length,
)
from germlab.errors import AlphabetMismatch, GermlabError

N = 2
words = st.lists(st.integers(1, N), max_size=4).map(tuple)
clopens = st.lists(words, max_size=5).map(lambda ws: ClopenSet(N, ws))
points = st.builds(
    Point,
    st.lists(st.integers(1, N), max_size=4).map(tuple),
    st.lists(st.integers(1, N), min_size=1, max_size=3).map(tuple),
)
DEPTH = 5


def as_words(U):
    """Oracle view: the set of length-DEPTH words inside U."""
    return U.refine(DEPTH)


def test_parse_word():
    assert parse_word("") == ()
    assert parse_word("e") == ()
    assert parse_word("ε") == ()
    assert parse_word("121") == (1, 2, 1)
    with pytest.raises(GermlabError):
        parse_word("1a")


def test_sibling_collapse():
    assert clopen_from_strings(2, ["1", "2"]).is_whole()
    assert clopen_from_strings(2, ["11", "12", "2"]).is_whole()
    assert clopen_from_strings(3, ["1", "2"]).to_strings() == ["1", "2"]
    assert ClopenSet(2, [(1,), (1, 2)]).to_strings() == ["1"]


def test_complement_examples():
    assert (~cylinder((1,), 2)).to_strings() == ["2"]
    assert (~cylinder((1, 1), 2)).to_strings() == ["12", "2"]
    assert (~ClopenSet.whole(3)).is_empty()
    assert (~ClopenSet.empty(3)).is_whole()


def test_alphabet_errors():
    with pytest.raises(AlphabetMismatch):
        ClopenSet(2, [(3,)])
    with pytest.raises(AlphabetMismatch):
        cylinder((1,), 2) | cylinder((1,), 3)


@settings(max_examples=200, deadline=None)
@given(clopens, clopens)
def test_boolean_operations_match_word_oracle(U, V):
    a, b = as_words(U), as_words(V)
    assert as_words(U | V) == a | b
    assert as_words(U & V) == a & b
    assert as_words(U - V) == a - b
    assert as_words(~U) == set(words_of_length(N, DEPTH)) - a
    assert (U <= V) == (a <= b)


@settings(max_examples=200, deadline=None)
@given(clopens, clopens)
def test_de_morgan(U, V):
    assert ~(U | V) == ~U & ~V
    assert ~(U & V) == ~U | ~V
    assert ~~U == U


@settings(max_examples=200, deadline=None)
@given(clopens)
def test_representation_is_canonical(U):
    again = ClopenSet(N, U.refine(U.depth() + 2))
    assert again == U
    assert again.words == U.words
    assert hash(again) == hash(U)
    ws = U.words
    assert all(not (a != b and a == b[: len(a)]) for a in ws for b in ws)


@settings(max_examples=200, deadline=None)
@given(points, words)
def test_point_canonical_form(p, w):
    assert parse_point(str(p)) == p
    assert p.prepend(w).shift(len(w)) == p
    assert p.prepend(w).startswith(w)
    assert Point(p.pre + p.period, p.period + p.period) == p


def test_point_examples():
    assert Point((1, 2, 2), (2,)) == Point((1,), (2,))
    assert str(Point((1, 2, 2), (2,))) == "1(2)"
    assert Point((), (1, 2, 1, 2)).period == (1, 2)
    assert Point((2,), (1, 2)) == Point((), (2, 1))
    x = parse_point("1(12)")
    assert x.prefix(5) == (1, 1, 2, 1, 2)
    assert x.shift(2) == parse_point("(21)")
    with pytest.raises(GermlabError):
        parse_point("12")
    with pytest.raises(GermlabError):
        Point((1,), ())


@settings(max_examples=200, deadline=None)
@given(clopens, clopens, points)
def test_membership_respects_operations(U, V, x):
    assert point_in(x, U | V) == (x in U or x in V)
    assert point_in(x, U & V) == (x in U and x in V)
    assert (x in ~U) != (x in U)


def test_covers_and_union():
    fam = [cylinder((1,), 2), cylinder((2, 1), 2)]
    assert union_all(2, fam).to_strings() == ["1", "21"]
    assert covers(fam, cylinder((2, 1, 2), 2))
    assert not covers(fam, ClopenSet.whole(2))
    assert covers([], ClopenSet.empty(2))
