"""
Базовые функции иерархии и проверка условий (f.1)/(f.2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional


@dataclass(frozen=True)
class BaseFunction:
    """
    Строго возрастающая функция на натуральных числах.

    Args:
        name: идентификатор функции
        fn: вычисление f(m)
        satisfies_f1_f2: заявлено ли выполнение (f.1) 2m+1 ≤ f(m) и (f.2) 2·f(m) ≤ f(f(m))
        closed_form: текстовая запись формулы
        bits_bound: верхняя оценка битовой длины f(m) без вычисления самого значения
        min_bits: нижняя оценка битовой длины f(m), если известна
    """
    name: str
    fn: Callable[[int], int] = field(compare=False)
    satisfies_f1_f2: bool
    closed_form: str
    bits_bound: Callable[[int], int] = field(compare=False)
    min_bits: Optional[Callable[[int], int]] = field(default=None, compare=False)

    def __call__(self, m: int) -> int:
        return self.fn(m)


SUC = BaseFunction(
    name='suc',
    fn=lambda m: m + 1,
    satisfies_f1_f2=False,
    closed_form='m + 1',
    bits_bound=lambda m: m.bit_length() + 1,
)

LIN = BaseFunction(
    name='lin',
    fn=lambda m: 2 * m + 1,
    satisfies_f1_f2=True,
    closed_form='2m + 1',
    bits_bound=lambda m: m.bit_length() + 2,
)

EXPSHIFT = BaseFunction(
    name='expshift',
    fn=lambda m: m + 2 ** (m + 4),
    satisfies_f1_f2=True,
    closed_form='m + 2^(m+4)',
    bits_bound=lambda m: m + 6,
    min_bits=lambda m: m + 5,
)

BASE_FUNCTIONS: Dict[str, BaseFunction] = {f.name: f for f in (SUC, LIN, EXPSHIFT)}


def get_base(name: str) -> BaseFunction:
    try:
        return BASE_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"Неизвестная базовая функция: {name}") from None


def shift_base(f: BaseFunction, n: int) -> BaseFunction:
    """f[n](m) = f(n + m); условия (f.1)/(f.2) сохраняются"""
    if n < 0:
        raise ValueError("Сдвиг должен быть неотрицательным")
    if n == 0:
        return f
    min_bits = f.min_bits
    return BaseFunction(
        name=f'{f.name}[{n}]',
        fn=lambda m: f(n + m),
        satisfies_f1_f2=f.satisfies_f1_f2,
        closed_form=f'f({n} + m), f(m) = {f.closed_form}',
        bits_bound=lambda m: f.bits_bound(n + m),
        min_bits=(lambda m: min_bits(n + m)) if min_bits else None,
    )


@dataclass
class ConditionResult:
    name: str
    counterexample: Optional[int] = None
    undecided: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class ContractReport:
    base: str
    up_to: int
    conditions: List[ConditionResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, name: str) -> ConditionResult:
        return next(c for c in self.conditions if c.name == name)


def _f2_holds(f: BaseFunction, m: int, max_bits: int) -> Optional[bool]:
    """2·f(m) ≤ f(f(m)); None, если значение не вычислимо в пределах max_bits"""
    y = f(m)
    if f.bits_bound(y) <= max_bits:
        return 2 * y <= f(y)
    # f(y) ≥ 2^(min_bits - 1) ≥ 2y, когда min_bits(y) ≥ bit_length(y) + 2
    if f.min_bits is not None and f.min_bits(y) >= y.bit_length() + 2:
        return True
    return None


def check_base_contract(f: BaseFunction, up_to: int, max_bits: int = 1 << 16) -> ContractReport:
    """
    Проверка строгой монотонности, (f.1) и (f.2) для всех m ≤ up_to.

    Для слишком больших f(f(m)) (f.2) решается по нижней оценке битовой длины;
    если решить нельзя, m попадает в undecided.
    """
    if up_to < 1:
        raise ValueError("up_to должно быть не меньше 1")
    monotone = ConditionResult('monotone')
    f1 = ConditionResult('f1')
    f2 = ConditionResult('f2')
    previous = f(0)
    for m in range(up_to + 1):
        value = previous if m == 0 else f(m)
        if m > 0 and monotone.passed and not previous < value:
            monotone.counterexample = m - 1
        previous = value
        if f1.passed and not 2 * m + 1 <= value:
            f1.counterexample = m
        if f2.passed:
            verdict = _f2_holds(f, m, max_bits)
            if verdict is None:
                f2.undecided.append(m)
            elif not verdict:
                f2.counterexample = m
    return ContractReport(base=f.name, up_to=up_to, conditions=[monotone, f1, f2])
