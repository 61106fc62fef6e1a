"""
Перевод выражений без φ в доминирующий терм системы обозначений.

Для каждого s строится канонический α' с s ≤ α' (проверяется выводом)
и N(s) ≤ N(α').
"""
from __future__ import annotations

from functools import reduce

from ordinals import ONE, OrdTerm, add, collapse, compare, nat
from ordinals.order import EQ, LT, compare_monomials
from ordinals.terms import OmegaMono, Sum, ZERO, mono_norm, parts_of

from .expressions import Canon, ESym, ExtSum, FunExpr, Iterate, Shift, SucSym, contains_veblen, lift
from .prover import prove_le


class VeblenPresent(ValueError):
    """В выражении есть применение φ"""


class TranslationError(RuntimeError):
    """Построенный терм не прошёл проверку доминирования"""


def dominating_sum(s: OrdTerm, t: OrdTerm) -> OrdTerm:
    """
    Естественная сумма с сохранением нормы: значение ≥ s ⊕ t, N ≥ N(s) + N(t).

    При слиянии Ω-мономов с равными показателями недостающая норма
    добавляется к коэффициенту натуральным числом.
    """
    left, right = list(parts_of(s)), list(parts_of(t))
    merged = []
    while left and right:
        p, q = left[0], right[0]
        if isinstance(p, OmegaMono) and isinstance(q, OmegaMono) and compare(p.exponent, q.exponent) is EQ:
            combined = OmegaMono(p.exponent, dominating_sum(p.coefficient, q.coefficient))
            deficit = mono_norm(p) + mono_norm(q) - mono_norm(combined)
            if deficit > 0:
                combined = OmegaMono(p.exponent, dominating_sum(combined.coefficient, nat(deficit)))
            merged.append(combined)
            left.pop(0)
            right.pop(0)
        elif compare_monomials(p, q) is LT:
            merged.append(right.pop(0))
        else:
            merged.append(left.pop(0))
    merged.extend(left)
    merged.extend(right)
    return Sum(tuple(merged)) if merged else ZERO


def _dominant_apply(fn: FunExpr, y: OrdTerm) -> OrdTerm:
    if isinstance(fn, SucSym):
        return add(y, ONE)
    if isinstance(fn, ESym):
        return collapse(ONE, y)
    if isinstance(fn, Shift):
        return _dominant_apply(fn.base, reduce(dominating_sum, fn.members, y))
    base, exponent = fn.base, fn.exponent
    if exponent == ZERO:
        return _dominant_apply(base, y)
    if isinstance(base, SucSym):
        return collapse(exponent, y)
    if isinstance(base, ESym):
        return collapse(dominating_sum(ONE, exponent), y)
    if isinstance(base, Iterate):
        return _dominant_apply(Iterate(base.base, dominating_sum(base.exponent, exponent)), y)
    return _dominant_apply(Shift(Iterate(base.base, exponent), base.members), y)


def _dominant(t) -> OrdTerm:
    if isinstance(t, Canon):
        return t.term
    if isinstance(t, ExtSum):
        return reduce(dominating_sum, (_dominant(p) for p in t.parts))
    return _dominant_apply(t.fn, _dominant(t.arg))


def dominant_oto(s) -> OrdTerm:
    """
    Доминирующий канонический терм: E(ξ) ↦ Suc^1(ξ), (F^a)^b ↦ F^(a⊕b),
    сдвиги сворачиваются в аргумент.

    Raises:
        VeblenPresent: в s есть φ
        TranslationError: результат не прошёл проверку prove_le
    """
    s = lift(s)
    if contains_veblen(s):
        raise VeblenPresent("Перевод определён только для выражений без φ")
    result = _dominant(s)
    if not prove_le(s, Canon(result)).proved:
        raise TranslationError(f"Не удалось подтвердить доминирование для {s!r}")
    return result
