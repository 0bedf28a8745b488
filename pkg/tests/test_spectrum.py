import pytest

from germlab import polycyclic as pc
from germlab import spectrum as sp
from germlab.action import PolycyclicAction, natural_action
from germlab.clopen import parse_point
from germlab.errors import HypothesisFailed, NotFiniteModel
from germlab.semigroup import orthogonal_semilattice, symmetric_inverse_monoid


@pytest.mark.parametrize("N", range(1, 9))
def test_orthogonal_family(N):
    E = orthogonal_semilattice(N)
    U = orthogonal_semilattice(N, with_unit=True)
    assert len(sp.characters(E)) == N == len(sp.ultracharacters(E)) == len(sp.tight_characters(E))
    assert len(sp.characters(U)) == N + 1
    assert len(sp.ultracharacters(U)) == N


def test_family_table():
    t = sp.family_table(5, True)
    assert [r["characters"] for r in t["rows"]] == [2, 3, 4, 5, 6]
    assert all(r["ultra_equals_tight"] for r in t["rows"])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_characters_match_oracles(n):
    S = symmetric_inverse_monoid(n)
    assert sp.characters(S) == sp.characters_bruteforce(S) == sp.homomorphism_supports(S)
    # ultracharacters of E(I_n) are the filters of the rank-one idempotents
    assert len(sp.ultracharacters(S)) == n


def test_spectral_action_i2(i2):
    B, chars = sp.spectral_action(i2)
    assert len(chars) == 3
    assert sp.ultra_invariant(i2)
    swap = i2.by_name("12>21")
    ultra = [chars.index(xi) for xi in sp.ultracharacters(i2)]
    assert {B.apply(swap, u) for u in ultra} == set(ultra)


def test_characterization(i2_action):
    rep = sp.verify_characterization(i2_action)
    assert rep["verdict"]
    assert rep["counts"] == {"points": 2, "ultracharacters": 2, "characters": 3}
    assert sp.verify_characterization(natural_action(3))["verdict"]


def test_empty_domain_action_flagged(empty_domain):
    with pytest.raises(HypothesisFailed):
        sp.verify_characterization(empty_domain)
    with pytest.raises(HypothesisFailed):
        sp.xi_of_point(empty_domain, 0)
    xi = sp.xi_of_point(empty_domain, 0, strict=False)
    assert sp.character_names(empty_domain.semigroup, xi) == ["1"]
    assert not sp.is_ultra(empty_domain.semigroup, xi)


def test_polycyclic_oracle():
    A = PolycyclicAction(2)
    xi = sp.xi_of_point(A, parse_point("1(2)"))
    assert xi(pc.idempotent((1, 2, 2))) == 1
    assert xi(pc.idempotent((2,))) == 0
    assert xi(pc.ZERO) == 0
    assert len(xi.support(3)) == 4
    assert xi.is_ultra_to_depth(4)
    with pytest.raises(NotFiniteModel):
        sp.verify_characterization(A)
