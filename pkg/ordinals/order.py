"""
Разрешимый порядок на канонических термах и нормализованное сложение.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable

from .terms import (
    ZERO, Collapse, Monomial, OmegaMono, OrdTerm, Sum, WPow, Zero,
    coefficient_members, mono, parts_of,
)


class CompareResult(Enum):
    LT = '<'
    EQ = '='
    GT = '>'

    def mirror(self) -> 'CompareResult':
        if self is CompareResult.LT:
            return CompareResult.GT
        if self is CompareResult.GT:
            return CompareResult.LT
        return self


LT, EQ, GT = CompareResult.LT, CompareResult.EQ, CompareResult.GT


def compare(s: OrdTerm, t: OrdTerm) -> CompareResult:
    """Трёхзначное сравнение канонических термов"""
    if s is t:
        return EQ
    left, right = parts_of(s), parts_of(t)
    for p, q in zip(left, right):
        verdict = compare_monomials(p, q)
        if verdict is not EQ:
            return verdict
    if len(left) < len(right):
        return LT
    if len(left) > len(right):
        return GT
    return EQ


def compare_monomials(p: Monomial, q: Monomial) -> CompareResult:
    if isinstance(p, OmegaMono) and isinstance(q, OmegaMono):
        verdict = compare(p.exponent, q.exponent)
        if verdict is not EQ:
            return verdict
        return compare(p.coefficient, q.coefficient)
    if isinstance(p, OmegaMono):
        return GT
    if isinstance(q, OmegaMono):
        return LT
    if isinstance(p, WPow) and isinstance(q, WPow):
        return compare(p.exponent, q.exponent)
    if isinstance(p, WPow):
        return compare(p.exponent, mono(q))
    if isinstance(q, WPow):
        return compare(mono(p), q.exponent)
    return _compare_collapses(p, q)


def _all_below(members: Iterable[OrdTerm], bound: OrdTerm) -> bool:
    return all(compare(k, bound) is LT for k in members)


def _compare_collapses(p: Collapse, q: Collapse) -> CompareResult:
    s, t = mono(p), mono(q)
    verdict = compare(p.iterate, q.iterate)
    if verdict is LT:
        members = list(coefficient_members(p.iterate)) + [p.seed]
        return LT if _all_below(members, t) else GT
    if verdict is GT:
        members = list(coefficient_members(q.iterate)) + [q.seed]
        return GT if _all_below(members, s) else LT
    # одинаковые итерации: решает сравнение с зёрнами
    if compare(s, q.seed) is not GT:
        return LT
    if compare(t, p.seed) is not GT:
        return GT
    return EQ


def lt(s: OrdTerm, t: OrdTerm) -> bool:
    return compare(s, t) is LT


def le(s: OrdTerm, t: OrdTerm) -> bool:
    return compare(s, t) is not GT


def add(s: OrdTerm, t: OrdTerm) -> OrdTerm:
    """
    Сумма s + t в канонической форме.

    Части s, строго меньшие первой части t, поглощаются; Ω-моном s с тем же
    показателем, что у ведущего Ω-монома t, сливается с ним по коэффициенту.
    """
    if isinstance(t, Zero):
        return s
    if isinstance(s, Zero):
        return t
    head = t.parts[0]
    kept = []
    for p in s.parts:
        if isinstance(p, OmegaMono) and isinstance(head, OmegaMono):
            verdict = compare(p.exponent, head.exponent)
            if verdict is EQ:
                merged = OmegaMono(p.exponent, add(p.coefficient, head.coefficient))
                return Sum(tuple(kept) + (merged,) + t.parts[1:])
            if verdict is LT:
                break
            kept.append(p)
        elif compare_monomials(p, head) is LT:
            break
        else:
            kept.append(p)
    return Sum(tuple(kept) + t.parts)


def max_term(items: Iterable[OrdTerm]) -> OrdTerm:
    """Наибольший по compare элемент; среди EQ-равных - первый встретившийся"""
    best = None
    for item in items:
        if best is None or compare(item, best) is GT:
            best = item
    if best is None:
        raise ValueError("max_term: пустой набор термов")
    return best


def natural_sum(s: OrdTerm, t: OrdTerm) -> OrdTerm:
    """
    Естественная (гессенбергова) сумма: слияние частей без поглощения.

    Ω-мономы с равными показателями сливаются по коэффициенту.
    """
    left, right = list(parts_of(s)), list(parts_of(t))
    merged = []
    while left and right:
        p, q = left[0], right[0]
        if isinstance(p, OmegaMono) and isinstance(q, OmegaMono) and compare(p.exponent, q.exponent) is EQ:
            merged.append(OmegaMono(p.exponent, natural_sum(p.coefficient, q.coefficient)))
            left.pop(0)
            right.pop(0)
        elif compare_monomials(p, q) is LT:
            merged.append(right.pop(0))
        else:
            merged.append(left.pop(0))
    merged.extend(left)
    merged.extend(right)
    return Sum(tuple(merged)) if merged else ZERO
