import random

import pytest

from germlab import polycyclic as pc
from germlab.action import (
    PolycyclicAction,
    loads_action,
    natural_action,
    semilattice_action,
)
from germlab.clopen import ClopenSet, parse_point
from germlab.errors import InvalidAction, NotIdempotent, OutOfDomain
from germlab.semigroup import orthogonal_semilattice


def test_natural_action(i2_action):
    S = i2_action.semigroup
    a = S.by_name("1>2")
    assert i2_action.apply(a, 0) == 1
    assert i2_action.source_domain(a) == {0}
    assert i2_action.domain(S.by_name("e2")) == {1}
    assert i2_action.is_strongly_tight()
    assert i2_action.domains_nonzero()
    with pytest.raises(OutOfDomain):
        i2_action.apply(a, 1)
    with pytest.raises(NotIdempotent):
        i2_action.domain(a)


def test_natural_action_i3_validates():
    A = natural_action(3)
    assert A.semigroup.size == 34
    assert A.is_strongly_tight()


def test_action_round_trip(i2_action):
    import json

    again = loads_action(json.dumps(i2_action.to_document()))
    assert again.to_document() == i2_action.to_document()


def test_broken_homomorphism_rejected(i2_action):
    doc = i2_action.to_document()
    S = i2_action.semigroup
    # make the swap act as the identity
    doc["maps"][str(S.by_name("12>21"))] = {"0": 0, "1": 1}
    import json

    with pytest.raises(InvalidAction):
        loads_action(json.dumps(doc))


def test_domain_axioms():
    E = orthogonal_semilattice(2, with_unit=True)
    z, p1 = E.zero, E.by_name("p1")
    with pytest.raises(InvalidAction):
        semilattice_action(E, 1, {z: [0], E.by_name("1"): [0]})
    with pytest.raises(InvalidAction):  # point 1 lies in no domain
        semilattice_action(E, 2, {p1: [0], E.by_name("1"): [0]})
    with pytest.raises(InvalidAction):  # D_p1 not inside D_1
        semilattice_action(E, 2, {p1: [1], E.by_name("1"): [0]})


def test_empty_domain_action_properties(empty_domain):
    assert empty_domain.is_strongly_tight()
    assert not empty_domain.domains_nonzero()


def test_polycyclic_action():
    A = PolycyclicAction(2)
    a = pc.parse_element("21/1")
    x = parse_point("1(2)")
    assert A.in_source(a, x)
    assert A.apply(a, x) == parse_point("21(2)")
    assert A.domain(pc.idempotent((1, 2))) == ClopenSet(2, [(1, 2)])
    assert A.domain(pc.ZERO).is_empty()
    with pytest.raises(OutOfDomain):
        A.apply(a, parse_point("(2)"))
    with pytest.raises(NotIdempotent):
        A.domain(a)
    with pytest.raises(InvalidAction):
        A.domain(pc.idempotent((3,)))
    with pytest.raises(InvalidAction):
        PolycyclicAction(1)


def test_polycyclic_homomorphism_law():
    rep = PolycyclicAction(2).verify_homomorphism(max_len=2, trials=2)
    assert rep["verdict"]
    assert rep["failures"] == 0


def test_random_point_in_source():
    A = PolycyclicAction(3)
    rng = random.Random(4)
    for _ in range(50):
        a = pc.Pair((1,), (3, 2))
        assert A.in_source(a, A.random_point_in(rng, a))
