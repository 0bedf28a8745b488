import pytest

from germlab.action import natural_action, empty_domain_action
from germlab.groupoid import pair_groupoid
from germlab.semigroup import symmetric_inverse_monoid


@pytest.fixture(scope="session")
def i2():
    return symmetric_inverse_monoid(2)


@pytest.fixture(scope="session")
def i2_action():
    return natural_action(2)


@pytest.fixture(scope="session")
def empty_domain():
    return empty_domain_action()


@pytest.fixture(scope="session")
def pair2():
    return pair_groupoid(2)
