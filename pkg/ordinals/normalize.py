"""
Сырые термы грамматики и их приведение к канонической форме.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Tuple, Union

from .order import GT, LT, add, compare
from .terms import (
    ONE, OMEGA, ZERO, Collapse, MalformedTerm, OmegaMono, OrdTerm, Sum, WPow, Zero,
    as_natural, is_below_omega, is_lone_collapse, mono, nat,
)


@dataclass(frozen=True)
class RZero:
    pass


@dataclass(frozen=True)
class ROmega:
    pass


@dataclass(frozen=True)
class RNat:
    n: int


@dataclass(frozen=True)
class RSuc:
    arg: 'RawTerm'


@dataclass(frozen=True)
class RAdd:
    left: 'RawTerm'
    right: 'RawTerm'


@dataclass(frozen=True)
class RWPow:
    exponent: 'RawTerm'


@dataclass(frozen=True)
class ROmegaPow:
    exponent: 'RawTerm'
    coefficient: 'RawTerm'


@dataclass(frozen=True)
class RCollapse:
    iterate: 'RawTerm'
    seed: 'RawTerm'


RawTerm = Union[RZero, ROmega, RNat, RSuc, RAdd, RWPow, ROmegaPow, RCollapse]
RAW_TYPES = (RZero, ROmega, RNat, RSuc, RAdd, RWPow, ROmegaPow, RCollapse)


def omega_mono(exponent: OrdTerm, coefficient: OrdTerm) -> OrdTerm:
    """Ω^exponent · coefficient с устранением Ω^0·ξ = ξ и Ω^e·0 = 0"""
    if not is_below_omega(coefficient):
        raise MalformedTerm("Коэффициент Ω-монома должен быть меньше Ω")
    if isinstance(coefficient, Zero):
        return ZERO
    if isinstance(exponent, Zero):
        return coefficient
    return mono(OmegaMono(exponent, coefficient))


def _left_predecessor(e: OrdTerm) -> OrdTerm:
    """-1 + e: для конечных e это e-1, для бесконечных e не меняется"""
    n = as_natural(e)
    return nat(n - 1) if n is not None else e


def omega_quotient(e: OrdTerm) -> Tuple[OrdTerm, OrdTerm]:
    """Разложение e = Ω·a + b с b < Ω"""
    a = ZERO
    tail = []
    for p in e.parts if isinstance(e, Sum) else ():
        if isinstance(p, OmegaMono):
            a = add(a, omega_mono(_left_predecessor(p.exponent), p.coefficient))
        else:
            tail.append(p)
    b = Sum(tuple(tail)) if tail else ZERO
    return a, b


def w_pow(e: OrdTerm) -> OrdTerm:
    """
    ω^e в канонической форме.

    ω^γ = γ для одиночного коллапса, а показатели ≥ Ω раскладываются
    по тождеству ω^(Ω·a + b) = Ω^a · ω^b.
    """
    if is_lone_collapse(e):
        return e
    if is_below_omega(e):
        return mono(WPow(e))
    a, b = omega_quotient(e)
    return omega_mono(a, w_pow(b))


def collapse(iterate: OrdTerm, seed: OrdTerm) -> OrdTerm:
    """Suc^iterate(seed); Suc^0(ξ) = ξ + 1"""
    if not is_below_omega(seed):
        raise MalformedTerm("Зерно коллапса должно быть меньше Ω")
    if isinstance(iterate, Zero):
        return add(seed, ONE)
    return mono(Collapse(iterate, seed))


def normalize(raw) -> OrdTerm:
    """
    Каноническая форма сырого (или уже канонического) терма.

    Raises:
        MalformedTerm: побочное условие грамматики нарушено неустранимо
    """
    if isinstance(raw, (Zero, Sum)):
        return normalize(to_raw(raw))
    if isinstance(raw, RZero):
        return ZERO
    if isinstance(raw, ROmega):
        return OMEGA
    if isinstance(raw, RNat):
        return nat(raw.n)
    if isinstance(raw, RSuc):
        return add(normalize(raw.arg), ONE)
    if isinstance(raw, RAdd):
        return add(normalize(raw.left), normalize(raw.right))
    if isinstance(raw, RWPow):
        return w_pow(normalize(raw.exponent))
    if isinstance(raw, ROmegaPow):
        return omega_mono(normalize(raw.exponent), normalize(raw.coefficient))
    if isinstance(raw, RCollapse):
        return collapse(normalize(raw.iterate), normalize(raw.seed))
    raise MalformedTerm(f"Неизвестный вид сырого терма: {type(raw).__name__}")


def to_raw(t: OrdTerm) -> RawTerm:
    """Вложение канонического терма обратно в сырую грамматику"""
    if isinstance(t, Zero):
        return RZero()
    raws = []
    for p in t.parts:
        if isinstance(p, WPow):
            raws.append(RWPow(to_raw(p.exponent)))
        elif isinstance(p, OmegaMono):
            if p.exponent == ONE and p.coefficient == ONE:
                raws.append(ROmega())
            else:
                raws.append(ROmegaPow(to_raw(p.exponent), to_raw(p.coefficient)))
        else:
            raws.append(RCollapse(to_raw(p.iterate), to_raw(p.seed)))
    return reduce(RAdd, raws)


def is_canonical(t) -> bool:
    """Проверка всех инвариантов канонической формы"""
    if isinstance(t, Zero):
        return True
    if not isinstance(t, Sum) or not t.parts:
        return False
    for p in t.parts:
        if not _is_canonical_monomial(p):
            return False
    for prev, cur in zip(t.parts, t.parts[1:]):
        if compare(mono(prev), mono(cur)) is LT:
            return False
        if isinstance(prev, OmegaMono) and isinstance(cur, OmegaMono):
            if compare(prev.exponent, cur.exponent) is not GT:
                return False
    return True


def _is_canonical_monomial(p) -> bool:
    if isinstance(p, WPow):
        e = p.exponent
        return is_canonical(e) and is_below_omega(e) and not is_lone_collapse(e)
    if isinstance(p, OmegaMono):
        return (is_canonical(p.exponent) and not isinstance(p.exponent, Zero)
                and is_canonical(p.coefficient) and not isinstance(p.coefficient, Zero)
                and is_below_omega(p.coefficient))
    if isinstance(p, Collapse):
        return (is_canonical(p.iterate) and not isinstance(p.iterate, Zero)
                and is_canonical(p.seed) and is_below_omega(p.seed))
    return False
