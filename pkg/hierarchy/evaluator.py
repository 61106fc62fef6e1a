"""
Точное вычисление иерархии f^α с мемоизацией и жёсткими бюджетами.

    f^0(m) = f(m)
    f^α(m) = max{ f^β(f^β(m)) | β < α, N(β) ≤ f(N(α) + m) }
"""
from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from ordinals import ONE, ZERO, OrdTerm, Zero, add, compare, norm
from ordinals.enumeration import EnumerationBudget, terms_below
from ordinals.order import LT

from .base_functions import BaseFunction

logger = logging.getLogger(__name__)


class BudgetExceeded(RuntimeError):
    """Вычисление вышло за пределы бюджета (это не внутренняя ошибка)"""

    def __init__(self, kind: str, limit: int, detail: str = ''):
        self.kind = kind
        self.limit = limit
        message = f"Превышен бюджет ({kind}, предел {limit})"
        super().__init__(f"{message}: {detail}" if detail else message)


class ContractWarning(UserWarning):
    """Базовая функция не заявляет условия (f.1)/(f.2)"""


class ContractError(ValueError):
    """Проверка требует (f.1)/(f.2), а базовая функция их не заявляет"""


@dataclass(frozen=True)
class EvalBudget:
    max_enumerated_terms: int = 50_000
    max_value_bits: int = 1 << 16
    max_recursion_nodes: int = 200_000

    def __post_init__(self):
        for name in ('max_enumerated_terms', 'max_value_bits', 'max_recursion_nodes'):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} должно быть положительным")

    @classmethod
    def from_config(cls, **overrides) -> 'EvalBudget':
        from config import Config

        values = {
            'max_enumerated_terms': Config.MAX_ENUMERATED_TERMS,
            'max_value_bits': Config.MAX_VALUE_BITS,
            'max_recursion_nodes': Config.MAX_RECURSION_NODES,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def enumerate_below(alpha: OrdTerm, k: int, cap: int = 50_000) -> List[OrdTerm]:
    """Индексное множество определения f^α: β < α с N(β) ≤ k"""
    return terms_below(alpha, k, cap)


class HierarchyEvaluator:
    """
    Вычислитель f^α для одной базовой функции.

    Таблица мемоизации живёт в пределах одного вызова evaluate и
    ключуется точным термом, а не классом EQ.

    Args:
        base: базовая функция f
        budget: бюджеты перечисления, размера значений и числа узлов
        norm_override: подстановка норм для выделенных индексных термов
    """

    def __init__(self, base: BaseFunction, budget: Optional[EvalBudget] = None,
                 norm_override: Optional[Mapping[OrdTerm, int]] = None):
        self.base = base
        self.budget = budget or EvalBudget()
        self.norm_override = dict(norm_override or {})
        self._memo: Dict[Tuple[OrdTerm, int], int] = {}
        self._nodes = 0

    def index_norm(self, t: OrdTerm) -> int:
        """Норма индекса; подстановка действует только на терм целиком"""
        return norm(t, self.norm_override)

    def evaluate(self, alpha: OrdTerm, m: int) -> int:
        if m < 0:
            raise ValueError("Аргумент иерархии должен быть натуральным")
        self._memo = {}
        self._nodes = 0
        try:
            return self._eval(alpha, m)
        except RecursionError:
            raise BudgetExceeded('recursion', self.budget.max_recursion_nodes,
                                 'слишком глубокая рекурсия') from None
        except MemoryError:
            self._memo = {}
            raise BudgetExceeded('nodes', self.budget.max_recursion_nodes, 'не хватило памяти') from None
        finally:
            logger.debug("f=%s: посещено %d узлов", self.base.name, self._nodes)

    def _apply_base(self, m: int) -> int:
        if self.base.bits_bound(m) > self.budget.max_value_bits:
            raise BudgetExceeded('value', self.budget.max_value_bits, f'{self.base.name}({m})')
        return self.base(m)

    def candidates(self, alpha: OrdTerm, k: int) -> List[OrdTerm]:
        """β < α с N(β) ≤ k с учётом подстановки норм"""
        cap = self.budget.max_enumerated_terms
        try:
            found = enumerate_below(alpha, k, cap)
        except EnumerationBudget:
            raise BudgetExceeded('enumeration', cap, 'индексное множество слишком велико') from None
        except MemoryError:
            raise BudgetExceeded('enumeration', cap, 'индексному множеству не хватило памяти') from None
        if not self.norm_override:
            return found
        kept = [b for b in found if self.index_norm(b) <= k]
        listed = set(kept)
        for t, value in self.norm_override.items():
            if t not in listed and value <= k < norm(t) and compare(t, alpha) is LT:
                kept.append(t)
        return kept

    def _eval(self, alpha: OrdTerm, m: int) -> int:
        key = (alpha, m)
        if key in self._memo:
            return self._memo[key]
        self._nodes += 1
        if self._nodes > self.budget.max_recursion_nodes:
            raise BudgetExceeded('nodes', self.budget.max_recursion_nodes)
        if isinstance(alpha, Zero):
            value = self._apply_base(m)
        else:
            k = self._apply_base(self.index_norm(alpha) + m)
            value = 0
            for beta in self.candidates(alpha, k):
                value = max(value, self._eval(beta, self._eval(beta, m)))
        if value.bit_length() > self.budget.max_value_bits:
            raise BudgetExceeded('value', self.budget.max_value_bits, f'f^α({m})')
        self._memo[key] = value
        return value


def evaluate_hierarchy(base: BaseFunction, alpha: OrdTerm, m: int,
                       budget: Optional[EvalBudget] = None,
                       norm_override: Optional[Mapping[OrdTerm, int]] = None,
                       require_contract: bool = False) -> int:
    """
    f^α(m) для канонического α.

    Raises:
        BudgetExceeded: вход за пределами настольного масштаба
        ContractError: require_contract, а f не заявляет (f.1)/(f.2)
    """
    if not base.satisfies_f1_f2:
        if require_contract:
            raise ContractError(f"Базовая функция {base.name} не удовлетворяет (f.1)/(f.2)")
        warnings.warn(f"Базовая функция {base.name} не заявляет (f.1)/(f.2)", ContractWarning, stacklevel=2)
    return HierarchyEvaluator(base, budget, norm_override).evaluate(alpha, m)


def successor(alpha: OrdTerm) -> OrdTerm:
    return add(alpha, ONE)


def hierarchy_base(base: BaseFunction, alpha: OrdTerm, budget: Optional[EvalBudget] = None) -> BaseFunction:
    """
    f^α как базовая функция, для повторной итерации (f^α)^β.

    Каждый вызов работает со своим вычислителем и своей таблицей мемоизации.
    """
    budget = budget or EvalBudget()

    def bits(m: int) -> int:
        # f^α(m) ≥ f(m), точной верхней оценки нет: предел бюджета значений
        return budget.max_value_bits if alpha != ZERO else base.bits_bound(m)

    return BaseFunction(
        name=f'{base.name}^α',
        fn=lambda m: HierarchyEvaluator(base, budget).evaluate(alpha, m),
        satisfies_f1_f2=base.satisfies_f1_f2,
        closed_form=f'итерация {base.name}',
        bits_bound=bits,
    )
