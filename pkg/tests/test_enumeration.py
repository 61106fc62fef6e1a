import pytest

from ordinals import (
    OMEGA, ONE, SMALL_OMEGA, ZERO, EnumerationBudget, brute_force_terms, cnf_terms_up_to_norm, collapse, nat, norm,
    terms_below, terms_of_norm, terms_up_to_norm, w_pow,
)
from ordinals.enumeration import cnf_count_exceeds, in_cnf_fragment
from ordinals.order import LT, compare


def test_small_norms():
    assert terms_up_to_norm(0) == [ZERO]
    assert set(terms_up_to_norm(1)) == {ZERO, ONE, OMEGA}
    assert terms_up_to_norm(-1) == []


def test_bounded_by_omega():
    assert terms_up_to_norm(3, SMALL_OMEGA) == [ZERO, ONE, nat(2), nat(3)]


@pytest.mark.parametrize('k', range(7))
def test_matches_brute_force(k):
    enumerated = terms_up_to_norm(k)
    assert len(enumerated) == len(set(enumerated))
    assert set(enumerated) == set(brute_force_terms(k))
    assert all(norm(t) <= k for t in enumerated)


def test_enumeration_is_deterministic():
    assert terms_up_to_norm(4) == terms_up_to_norm(4)
    assert list(terms_of_norm(3)) == [t for t in terms_up_to_norm(3) if norm(t) == 3]


@pytest.mark.parametrize('k', range(6))
def test_cnf_fragment_generator(k):
    assert set(cnf_terms_up_to_norm(k)) == {t for t in terms_up_to_norm(k) if in_cnf_fragment(t)}


def test_pruned_enumeration_matches_filter():
    terms = terms_up_to_norm(4)
    for bound in terms:
        expected = {t for t in terms if compare(t, bound) is LT}
        assert set(terms_below(bound, 4)) == expected


def test_pruned_enumeration_for_omega_power():
    assert set(terms_below(w_pow(SMALL_OMEGA), 2)) == {ZERO, ONE, nat(2), SMALL_OMEGA}


def test_cap_is_enforced():
    with pytest.raises(EnumerationBudget) as info:
        terms_up_to_norm(4, cap=10)
    assert info.value.cap == 10
    with pytest.raises(EnumerationBudget):
        terms_below(nat(100), 200, cap=5)


def test_known_oversize_results_fail_before_generation():
    with pytest.raises(EnumerationBudget):
        terms_below(SMALL_OMEGA, 10 ** 6, cap=100)
    with pytest.raises(EnumerationBudget):
        terms_below(nat(10 ** 5), 10 ** 6, cap=10)
    with pytest.raises(EnumerationBudget):
        terms_below(collapse(ONE, ZERO), 10 ** 6, cap=50_000)
    assert len(terms_below(nat(10 ** 5), 9, cap=10)) == 10


def test_cap_counts_the_result_not_all_terms():
    epsilon_zero = collapse(ONE, ZERO)
    assert len(terms_below(epsilon_zero, 6, cap=5000)) == 85
    found = terms_below(epsilon_zero, 9, cap=5000)
    assert len(found) == 1205
    assert set(found) == set(cnf_terms_up_to_norm(9))
    with pytest.raises(EnumerationBudget):
        terms_below(epsilon_zero, 9, cap=1204)


@pytest.mark.parametrize('k, expected', [(0, False), (6, False), (7, True), (9, True)])
def test_cnf_count_exceeds(k, expected):
    assert cnf_count_exceeds(k, 100) is expected
    assert cnf_count_exceeds(k, len(cnf_terms_up_to_norm(k))) is False


def test_general_bounds_match_filter_at_norm_five():
    terms = terms_up_to_norm(5)
    for bound in terms_up_to_norm(3):
        expected = {t for t in terms if compare(t, bound) is LT}
        found = terms_below(bound, 5)
        assert len(found) == len(expected)
        assert set(found) == expected
