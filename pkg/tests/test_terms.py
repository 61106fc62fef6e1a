import importlib

import pytest

from ordinals import (
    OMEGA, ONE, SMALL_OMEGA, ZERO, MalformedTerm, Sum, TermClass, classify, coefficients, collapse,
    is_below_omega, nat, norm, omega_mono, terms_up_to_norm,
)
from ordinals.order import LT, compare
from ordinals.terms import is_lone_collapse


@pytest.mark.parametrize('term, expected', [
    (ZERO, 0),
    (OMEGA, 1),
    (nat(3), 3),
    (SMALL_OMEGA, 2),
    (collapse(nat(2), ZERO), 3),
    (omega_mono(nat(2), nat(3)), 6),
])
def test_norm(term, expected):
    assert norm(term) == expected


def test_norm_override_applies_to_whole_term_only():
    overrides = {SMALL_OMEGA: 1}
    assert norm(SMALL_OMEGA, overrides) == 1
    # в ω + 1 часть ω отдельно не подменяется
    assert norm(Sum(SMALL_OMEGA.parts + ONE.parts), overrides) == 3


def test_coefficients_of_zero_and_omega_are_empty():
    assert len(coefficients(ZERO)) == 0
    assert len(coefficients(OMEGA)) == 0


def test_coefficients_of_collapse_is_singleton():
    c = collapse(OMEGA, ZERO)
    assert tuple(coefficients(c)) == (c,)


def test_coefficients_of_omega_monomial():
    t = omega_mono(SMALL_OMEGA, nat(5))
    assert tuple(coefficients(t)) == (nat(5), SMALL_OMEGA)


def test_coefficients_of_below_omega_terms_are_the_term_itself():
    for t in terms_up_to_norm(5):
        if is_below_omega(t) and t != ZERO:
            assert tuple(coefficients(t)) == (t,)


def test_collapse_side_conditions_hold_for_enumerated_terms():
    for t in terms_up_to_norm(5):
        if is_lone_collapse(t):
            p = t.parts[0]
            assert compare(p.seed, t) is LT
            assert coefficients(p.iterate).all_below(t)


@pytest.mark.parametrize('term, below', [
    (collapse(OMEGA, ZERO), True),
    (OMEGA, False),
    (nat(4), True),
    (omega_mono(ONE, nat(2)), False),
])
def test_is_below_omega(term, below):
    assert is_below_omega(term) is below


@pytest.mark.parametrize('term, expected', [
    (ZERO, TermClass.ZERO),
    (nat(2), TermClass.COMPOSITE_SUM),
    (ONE, TermClass.ADDITIVELY_INDECOMPOSABLE),
    (SMALL_OMEGA, TermClass.ADDITIVELY_INDECOMPOSABLE),
    (collapse(ONE, ZERO), TermClass.STRONGLY_CRITICAL),
    (OMEGA, TermClass.STRONGLY_CRITICAL),
])
def test_classify(term, expected):
    assert classify(term) is expected


def test_malformed_constructions():
    with pytest.raises(MalformedTerm):
        nat(-1)
    with pytest.raises(MalformedTerm):
        Sum(())


@pytest.mark.parametrize('package', ['ordinals', 'hierarchy', 'prover', 'syntax', 'audit', 'storage', 'excel_utils'])
def test_exported_names_exist(package):
    module = importlib.import_module(package)
    assert [name for name in module.__all__ if not hasattr(module, name)] == []


def test_unused_helpers_are_gone():
    import ordinals.terms
    import prover.expressions

    for name in ('size', 'is_omega'):
        assert not hasattr(ordinals.terms, name)
    for name in ('EXT_TYPES', 'ext_depth', 'fun_depth'):
        assert not hasattr(prover.expressions, name)
    assert not hasattr(coefficients(OMEGA), 'contains')
