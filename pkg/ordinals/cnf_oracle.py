"""
Независимая арифметика канторовой нормальной формы ниже ε₀.

Модуль служит оракулом для сравнения термов из фрагмента {0, +, ω^} и
намеренно не пользуется ни сравнением, ни сложением из пакета ordinals.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .terms import Sum, WPow, Zero


class OutOfFragment(ValueError):
    """Терм содержит Ω-мономы или коллапсы"""


class CnfVerdict(Enum):
    LT = '<'
    EQ = '='
    GT = '>'


@dataclass(frozen=True)
class CnfOrdinal:
    """Последовательность (показатель, кратность) со строго убывающими показателями"""
    terms: Tuple[Tuple['CnfOrdinal', int], ...] = ()

    def __post_init__(self):
        for _, multiplicity in self.terms:
            if multiplicity <= 0:
                raise ValueError("Кратность в КНФ должна быть положительной")
        for (left, _), (right, _) in zip(self.terms, self.terms[1:]):
            if cnf_compare(left, right) is not CnfVerdict.GT:
                raise ValueError("Показатели КНФ должны строго убывать")

    @classmethod
    def natural(cls, n: int) -> 'CnfOrdinal':
        return cls(((CNF_ZERO, n),)) if n > 0 else CNF_ZERO


CNF_ZERO = CnfOrdinal()


def cnf_of(t) -> CnfOrdinal:
    """
    КНФ-значение терма фрагмента.

    Raises:
        OutOfFragment: в терме есть Ω-моном или коллапс
    """
    if isinstance(t, Zero):
        return CNF_ZERO
    if not isinstance(t, Sum):
        raise OutOfFragment(f"Не терм: {t!r}")
    grouped = []
    for part in t.parts:
        if not isinstance(part, WPow):
            raise OutOfFragment(f"{type(part).__name__} вне фрагмента {{0, +, ω^}}")
        exponent = cnf_of(part.exponent)
        if grouped and grouped[-1][0] == exponent:
            grouped[-1][1] += 1
        else:
            grouped.append([exponent, 1])
    return CnfOrdinal(tuple((e, k) for e, k in grouped))


def cnf_compare(a: CnfOrdinal, b: CnfOrdinal) -> CnfVerdict:
    for (ea, ka), (eb, kb) in zip(a.terms, b.terms):
        verdict = cnf_compare(ea, eb)
        if verdict is not CnfVerdict.EQ:
            return verdict
        if ka != kb:
            return CnfVerdict.LT if ka < kb else CnfVerdict.GT
    if len(a.terms) == len(b.terms):
        return CnfVerdict.EQ
    return CnfVerdict.LT if len(a.terms) < len(b.terms) else CnfVerdict.GT


def cnf_add(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Сумма с поглощением: слагаемые a ниже ведущего показателя b исчезают"""
    if not b.terms:
        return a
    lead, lead_k = b.terms[0]
    kept = []
    for e, k in a.terms:
        verdict = cnf_compare(e, lead)
        if verdict is CnfVerdict.GT:
            kept.append((e, k))
        elif verdict is CnfVerdict.EQ:
            return CnfOrdinal(tuple(kept) + ((lead, k + lead_k),) + b.terms[1:])
        else:
            break
    return CnfOrdinal(tuple(kept) + b.terms)
