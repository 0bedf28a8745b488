"""One test per acceptance criterion, at the stated sizes and trial counts."""

import pytest

from germlab import acceptance


def _assert(result):
    failed = [name for name, ok in result["checks"].items() if not ok]
    assert result["verdict"], f"criterion {result['id']} failed checks: {failed}"


def test_criterion_01_correspondence_i2():
    r = acceptance.criterion_1()
    _assert(r)
    assert r["details"]["N"] == 2


def test_criterion_02_membership_200_trials():
    r = acceptance.criterion_2(trials=200)
    _assert(r)
    assert r["details"]["agreements"] == 200


def test_criterion_03_cover_lemma_200_trials():
    r = acceptance.criterion_3(trials=200)
    _assert(r)
    assert r["checks"]["empty_domain_action_rejected"]


def test_criterion_04_classification():
    r = acceptance.criterion_4()
    _assert(r)
    assert r["details"]["m"] == {"1/e": 1, "11/e": 2, "111/e": 3, "1/22": 1}


def test_criterion_05_level_products_81_cases():
    r = acceptance.criterion_5()
    _assert(r)
    assert r["details"]["cases"] == 81


def test_criterion_06_closedness_of_P2m():
    _assert(acceptance.criterion_6())


def test_criterion_07_reconstruction():
    _assert(acceptance.criterion_7())


def test_criterion_08_rho_join_closed_iff_join_closed():
    _assert(acceptance.criterion_8())


def test_criterion_09_spectrum_characterization():
    _assert(acceptance.criterion_9())


def test_criterion_10_growth_tables():
    _assert(acceptance.criterion_10())


def test_criterion_11_invariant_suites_200_trials():
    r = acceptance.criterion_11(trials=200)
    _assert(r)
    assert all(v == 200 for v in r["details"]["passed"].values())


@pytest.mark.parametrize("seed", [1, 7])
def test_randomized_criteria_other_seeds(seed):
    for c in (acceptance.criterion_2, acceptance.criterion_3, acceptance.criterion_11):
        _assert(c(seed=seed, trials=50))
