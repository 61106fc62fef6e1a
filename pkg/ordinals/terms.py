"""
Канонические термы системы обозначений: типы, константы, норма и структурные предикаты.

Терм - это либо Zero, либо Sum из непустой невозрастающей последовательности мономов.
Мономы: WPow (ω^e), OmegaMono (Ω^e·c) и Collapse (Suc^a(x)).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, Optional, Tuple, Union


class MalformedTerm(ValueError):
    """Аргумент конструктора нарушает побочное условие грамматики"""


@dataclass(frozen=True)
class Zero:
    def __repr__(self):
        return 'Zero()'


@dataclass(frozen=True)
class WPow:
    """ω^exponent, exponent < Ω"""
    exponent: 'OrdTerm'


@dataclass(frozen=True)
class OmegaMono:
    """Ω^exponent · coefficient"""
    exponent: 'OrdTerm'
    coefficient: 'OrdTerm'


@dataclass(frozen=True)
class Collapse:
    """Suc^iterate(seed)"""
    iterate: 'OrdTerm'
    seed: 'OrdTerm'


Monomial = Union[WPow, OmegaMono, Collapse]


@dataclass(frozen=True)
class Sum:
    parts: Tuple[Monomial, ...]

    def __post_init__(self):
        if not self.parts:
            raise MalformedTerm("Sum требует хотя бы одну часть, для нуля используйте ZERO")


OrdTerm = Union[Zero, Sum]

ZERO = Zero()
ONE = Sum((WPow(ZERO),))
OMEGA = Sum((OmegaMono(ONE, ONE),))
SMALL_OMEGA = Sum((WPow(ONE),))  # ω


class TermClass(Enum):
    ZERO = 'zero'
    ADDITIVELY_INDECOMPOSABLE = 'additively-indecomposable'
    STRONGLY_CRITICAL = 'strongly-critical'
    COMPOSITE_SUM = 'composite-sum'


def nat(n: int) -> OrdTerm:
    """Натуральное число n как сумма n копий ω^0"""
    if n < 0:
        raise MalformedTerm(f"Отрицательное натуральное число: {n}")
    if n == 0:
        return ZERO
    return Sum((WPow(ZERO),) * n)


def mono(m: Monomial) -> Sum:
    """Одночленная сумма"""
    return Sum((m,))


def parts_of(t: OrdTerm) -> Tuple[Monomial, ...]:
    return () if isinstance(t, Zero) else t.parts


def sum_of(parts) -> OrdTerm:
    parts = tuple(parts)
    return Sum(parts) if parts else ZERO


def as_natural(t: OrdTerm) -> Optional[int]:
    """Значение терма, если это натуральное число, иначе None"""
    if isinstance(t, Zero):
        return 0
    for part in t.parts:
        if not (isinstance(part, WPow) and isinstance(part.exponent, Zero)):
            return None
    return len(t.parts)


def is_lone_collapse(t: OrdTerm) -> bool:
    return isinstance(t, Sum) and len(t.parts) == 1 and isinstance(t.parts[0], Collapse)


def is_below_omega(t: OrdTerm) -> bool:
    """Истина, если на верхнем уровне нет Ω-мономов"""
    return not any(isinstance(p, OmegaMono) for p in parts_of(t))


def classify(t: OrdTerm) -> TermClass:
    if isinstance(t, Zero):
        return TermClass.ZERO
    if len(t.parts) > 1:
        return TermClass.COMPOSITE_SUM
    part = t.parts[0]
    if isinstance(part, Collapse) or t == OMEGA:
        return TermClass.STRONGLY_CRITICAL
    return TermClass.ADDITIVELY_INDECOMPOSABLE


def mono_norm(m: Monomial) -> int:
    if isinstance(m, WPow):
        return norm(m.exponent) + 1
    if isinstance(m, OmegaMono):
        if m.exponent == ONE and m.coefficient == ONE:
            return 1
        return norm(m.exponent) + norm(m.coefficient) + 1
    # N(Suc^a(x)) = N(Suc(x)) + N(a)
    return norm(m.seed) + 1 + norm(m.iterate)


def norm(t: OrdTerm, overrides: Optional[Mapping[OrdTerm, int]] = None) -> int:
    """
    Норма N канонического терма.

    Args:
        t: канонический терм
        overrides: подстановка нормы для t целиком (например N(ω) := 1), на подтермы не действует
    """
    if overrides and t in overrides:
        return overrides[t]
    if isinstance(t, Zero):
        return 0
    return sum(mono_norm(p) for p in t.parts)


def coefficient_members(t: OrdTerm) -> Iterator[OrdTerm]:
    """
    Элементы K_Ω t без устранения EQ-дубликатов.

    Хвост суммы ниже Ω считается одним коэффициентом при Ω^0, как в базовой Ω-форме.
    """
    if isinstance(t, Zero) or t == OMEGA:
        return
    if is_below_omega(t):
        yield t
        return
    tail = []
    for p in t.parts:
        if isinstance(p, OmegaMono):
            yield p.coefficient
            yield from coefficient_members(p.exponent)
        else:
            tail.append(p)
    if tail:
        yield Sum(tuple(tail))
