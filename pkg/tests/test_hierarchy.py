import warnings
from concurrent.futures import ThreadPoolExecutor

import pytest

from hierarchy import (
    LIN, SUC, BudgetExceeded, ContractError, ContractWarning, EvalBudget, HierarchyEvaluator,
    enumerate_below, evaluate_hierarchy, hierarchy_base, shift_base, successor,
)
from ordinals import ONE, SMALL_OMEGA, ZERO, collapse, nat, norm, terms_up_to_norm, w_pow
from ordinals.order import LT, compare


def suc_value(alpha, m, overrides=None):
    return HierarchyEvaluator(SUC, norm_override=overrides).evaluate(alpha, m)


@pytest.mark.parametrize('n', range(11))
@pytest.mark.parametrize('m', range(11))
def test_finite_closed_form(n, m):
    assert suc_value(nat(n), m) == m + 2 ** n


def test_base_level():
    assert suc_value(ZERO, 7) == 8


@pytest.mark.parametrize('m', range(11))
def test_omega_structural_norm(m):
    assert suc_value(SMALL_OMEGA, m) == m + 2 ** (m + 4)


@pytest.mark.parametrize('m', range(11))
def test_omega_with_norm_override(m):
    assert suc_value(SMALL_OMEGA, m, {SMALL_OMEGA: 1}) == m + 2 ** (m + 3)


def test_omega_examples():
    assert suc_value(SMALL_OMEGA, 2) == 66
    assert suc_value(SMALL_OMEGA, 2, {SMALL_OMEGA: 1}) == 34


def test_enumerate_below():
    assert enumerate_below(ONE, 9) == [ZERO]
    assert enumerate_below(SMALL_OMEGA, 3) == [ZERO, ONE, nat(2), nat(3)]
    assert set(enumerate_below(w_pow(SMALL_OMEGA), 2)) == {ZERO, ONE, nat(2), SMALL_OMEGA}


def test_contract_warning_and_error():
    with pytest.warns(ContractWarning):
        assert evaluate_hierarchy(SUC, nat(3), 2) == 10
    with pytest.raises(ContractError):
        evaluate_hierarchy(SUC, ONE, 0, require_contract=True)
    with warnings.catch_warnings():
        warnings.simplefilter('error', ContractWarning)
        assert evaluate_hierarchy(LIN, ZERO, 3, require_contract=True) == 7


@pytest.mark.parametrize('budget, kind', [
    (EvalBudget(max_recursion_nodes=5), 'nodes'),
    (EvalBudget(max_value_bits=8), 'value'),
    (EvalBudget(max_enumerated_terms=3), 'enumeration'),
])
def test_budget_exceeded(budget, kind):
    with pytest.raises(BudgetExceeded) as info:
        HierarchyEvaluator(SUC, budget).evaluate(nat(10), 0)
    assert info.value.kind == kind


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        EvalBudget(max_value_bits=0)


def test_negative_argument_rejected():
    with pytest.raises(ValueError):
        HierarchyEvaluator(LIN).evaluate(ONE, -1)


def test_evaluation_is_deterministic():
    budget = EvalBudget(max_enumerated_terms=500, max_value_bits=512, max_recursion_nodes=2000)
    outcomes = []
    for _ in range(2):
        try:
            outcomes.append(HierarchyEvaluator(LIN, budget).evaluate(SMALL_OMEGA, 3))
        except BudgetExceeded as exc:
            outcomes.append(exc.kind)
    assert outcomes[0] == outcomes[1]


def evaluable(base, alpha, m, budget):
    try:
        return HierarchyEvaluator(base, budget).evaluate(alpha, m)
    except BudgetExceeded:
        return None


def test_monotonicity_corollaries():
    budget = EvalBudget(max_enumerated_terms=2000, max_value_bits=4096, max_recursion_nodes=20000)
    indices = terms_up_to_norm(3)
    values = {}

    def value_of(base, alpha, m):
        if (base, alpha, m) not in values:
            values[base, alpha, m] = evaluable(base, alpha, m, budget)
        return values[base, alpha, m]

    checked = 0
    for base in (SUC, LIN):
        for alpha in indices:
            for m in range(7):
                value = value_of(base, alpha, m)
                if value is None:
                    continue
                after = value_of(base, alpha, m + 1) if m < 6 else None
                if after is not None:
                    assert value < after
                    checked += 1
                for beta in indices:
                    if compare(beta, alpha) is LT and norm(beta) <= base(norm(alpha) + m):
                        lower = value_of(base, beta, m)
                        if lower is not None:
                            assert lower < value
                            checked += 1
                inner = value_of(base, alpha, value)
                upper = value_of(base, successor(alpha), m)
                if inner is not None and upper is not None:
                    assert inner <= upper
                    checked += 1
    assert checked >= 200


@pytest.mark.parametrize('a', range(4))
@pytest.mark.parametrize('m', range(4))
def test_shift_lemmas_for_lin(a, m):
    alpha = nat(a)
    for n in range(m + 1):
        shifted = HierarchyEvaluator(shift_base(LIN, n)).evaluate(alpha, m)
        plain = HierarchyEvaluator(LIN).evaluate(alpha, n + m)
        assert plain <= shifted
        inner = HierarchyEvaluator(LIN).evaluate(alpha, LIN(m))
        assert shifted <= HierarchyEvaluator(LIN).evaluate(alpha, inner + LIN(m))
        assert shifted <= HierarchyEvaluator(LIN).evaluate(successor(successor(alpha)), m)


def test_hierarchy_base_iterates():
    lin_one = hierarchy_base(LIN, ONE)
    assert lin_one(0) == HierarchyEvaluator(LIN).evaluate(ONE, 0)
    assert HierarchyEvaluator(lin_one).evaluate(ZERO, 2) == lin_one(2)


def test_hierarchy_base_calls_do_not_share_state():
    lin_one = hierarchy_base(LIN, ONE)
    captured = [cell.cell_contents for cell in lin_one.fn.__closure__ or ()]
    assert not any(isinstance(item, HierarchyEvaluator) for item in captured)

    expected = [HierarchyEvaluator(LIN).evaluate(ONE, m) for m in range(8)]
    with ThreadPoolExecutor(max_workers=4) as pool:
        assert list(pool.map(lin_one, range(8))) == expected


def test_large_argument_stops_at_enumeration_budget():
    with pytest.raises(BudgetExceeded) as info:
        HierarchyEvaluator(SUC).evaluate(SMALL_OMEGA, 60_000)
    assert info.value.kind == 'enumeration'


def test_memory_error_is_reported_as_budget(monkeypatch):
    def exhausted(alpha, k, cap=50_000):
        raise MemoryError

    monkeypatch.setattr('hierarchy.evaluator.enumerate_below', exhausted)
    with pytest.raises(BudgetExceeded) as info:
        HierarchyEvaluator(SUC).evaluate(SMALL_OMEGA, 1)
    assert info.value.kind == 'enumeration'


def test_collapse_index_enumerates_only_what_it_needs():
    # f^{Suc^1(0)}: индексы ниже ε₀ нормы ≤ 9, их 1205 при пределе 2000
    budget = EvalBudget(max_enumerated_terms=2000)
    found = HierarchyEvaluator(SUC, budget).candidates(collapse(ONE, ZERO), 9)
    assert len(found) == 1205
