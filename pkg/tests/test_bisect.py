import pytest

from germlab import bisect
from germlab.errors import NotCompatible, TooLarge
from germlab.germ import FiniteGermGroupoid
from germlab.groupoid import group_bundle, pair_groupoid, trivial_groupoid


def test_bisections_of_pair_groupoid(pair2):
    B = bisect.all_bisections(pair2)
    assert len(B) == 7
    assert B.order_is_inclusion and B.inverse_matches
    assert B.bisections[B.semigroup.zero] == frozenset()


def test_too_large():
    with pytest.raises(TooLarge):
        bisect.all_bisections(pair_groupoid(3))
    with pytest.raises(TooLarge):
        bisect.join_closed_correspondence(group_bundle(7))


def test_join(pair2):
    B = bisect.all_bisections(pair2)
    lab = pair2.labels.index
    idx = B.index
    a = idx[frozenset({lab("(1,2)")})]
    b = idx[frozenset({lab("(2,1)")})]
    u = idx[frozenset({lab("(1,1)")})]
    assert B.bisections[B.join(a, b)] == frozenset({lab("(1,2)"), lab("(2,1)")})
    with pytest.raises(NotCompatible):
        B.join(a, u)  # same range, different sources
    with pytest.raises(NotCompatible):
        bisect.join(pair2, {lab("(1,2)")}, {lab("(1,1)")})
    assert bisect.join(pair2, {lab("(1,1)")}, {lab("(2,2)")}) == frozenset(pair2.units)


def test_compatible_iff_union_is_bisection(pair2):
    B = bisect.all_bisections(pair2)
    S = B.semigroup
    for i, U in enumerate(B.bisections):
        for j, V in enumerate(B.bisections):
            assert S.compatible(i, j) == bisect.is_bisection(pair2, U | V)


def test_rho(pair2):
    B = bisect.all_bisections(pair2)
    rho = bisect.rho_action(pair2)
    swap = B.index[frozenset({pair2.labels.index("(1,2)"), pair2.labels.index("(2,1)")})]
    assert rho.apply(swap, 0) == 1 and rho.apply(swap, 1) == 0
    assert rho.is_strongly_tight()


@pytest.mark.parametrize("G", [pair_groupoid(2), trivial_groupoid(2), group_bundle(3)])
def test_reconstruction(G):
    rep = bisect.reconstruction_iso(G)
    assert rep["verdict"], rep["checks"]


def test_reconstruction_of_germ_groupoid(i2_action):
    H, _ = FiniteGermGroupoid(i2_action).to_groupoid()
    assert bisect.reconstruction_iso(H)["verdict"]


@pytest.mark.parametrize(
    "G,count", [(pair_groupoid(2), 2), (trivial_groupoid(2), 1), (group_bundle(4), 3), (group_bundle(6), 4)]
)
def test_join_closed_correspondence(G, count):
    rep = bisect.join_closed_correspondence(G)
    assert rep["verdict"]
    assert rep["counts"]["join_closed"] == rep["counts"]["subgroupoids"] == count
