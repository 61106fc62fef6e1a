import pytest

from hierarchy import BASE_FUNCTIONS, EXPSHIFT, LIN, SUC, check_base_contract, get_base, shift_base


def test_shift_base():
    assert shift_base(SUC, 0) is SUC
    assert shift_base(SUC, 3)(4) == 8
    assert shift_base(LIN, 2)(5) == 15
    assert all(shift_base(SUC, 0)(m) == SUC(m) for m in range(21))
    assert shift_base(LIN, 2).satisfies_f1_f2
    with pytest.raises(ValueError):
        shift_base(LIN, -1)


def test_lin_passes_contract():
    report = check_base_contract(LIN, 1000)
    assert report.passed
    assert not any(c.undecided for c in report.conditions)


def test_suc_fails_f1_at_one():
    report = check_base_contract(SUC, 100)
    assert report.condition('monotone').passed
    assert report.condition('f1').counterexample == 1
    assert not report.passed


def test_expshift_passes_contract():
    report = check_base_contract(EXPSHIFT, 64)
    assert report.passed
    assert report.condition('f2').undecided == []


def test_get_base():
    assert get_base('lin') is LIN
    assert set(BASE_FUNCTIONS) == {'suc', 'lin', 'expshift'}
    with pytest.raises(ValueError):
        get_base('ackermann')


def test_contract_requires_positive_range():
    with pytest.raises(ValueError):
        check_base_contract(LIN, 0)
