"""
Иерархия f^α, управляемая нормой, и её базовые функции
"""
from .base_functions import (
    BASE_FUNCTIONS, EXPSHIFT, LIN, SUC, BaseFunction, ContractReport,
    check_base_contract, get_base, shift_base,
)
from .evaluator import (
    BudgetExceeded, ContractError, ContractWarning, EvalBudget, HierarchyEvaluator,
    enumerate_below, evaluate_hierarchy, hierarchy_base, successor,
)

__all__ = [
    'BASE_FUNCTIONS', 'EXPSHIFT', 'LIN', 'SUC', 'BaseFunction', 'ContractReport',
    'check_base_contract', 'get_base', 'shift_base',
    'BudgetExceeded', 'ContractError', 'ContractWarning', 'EvalBudget', 'HierarchyEvaluator',
    'enumerate_below', 'evaluate_hierarchy', 'hierarchy_base', 'successor',
]
