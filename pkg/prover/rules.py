"""
Схемы правил вывода, шаги доказательства и повторная проверка трасс.

Каждое правило переписывает подтерм в монотонной позиции (аргумент оператора,
слагаемое суммы, аргумент φ): все символы операторов слабо возрастают.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Dict, Tuple

from ordinals import ONE, ZERO, MalformedTerm, add, collapse, compare, max_term, w_pow
from ordinals.order import GT

from .expressions import (
    SUC_SYM, Apply, Canon, ESym, ExtSum, ExtTerm, Iterate, Path, Shift, SucSym, VeblenApp,
    replace_at, subterm,
)

LE_REL = '≤'
EQ_REL = '='


@dataclass(frozen=True)
class Rule:
    name: str
    relation: str
    fact: str
    check: Callable[[ExtTerm, ExtTerm], bool]


def _canon_sum(before, after) -> bool:
    if not (isinstance(before, ExtSum) and all(isinstance(p, Canon) for p in before.parts)):
        return False
    return after == Canon(reduce(add, (p.term for p in before.parts)))


def _suc_successor(before, after) -> bool:
    return (isinstance(before, Apply) and isinstance(before.fn, SucSym) and isinstance(before.arg, Canon)
            and after == Canon(add(before.arg.term, ONE)))


def _collapse_canon(before, after) -> bool:
    if not (isinstance(before, Apply) and isinstance(before.arg, Canon)):
        return False
    fn = before.fn
    return (isinstance(fn, Iterate) and isinstance(fn.base, SucSym)
            and after == Canon(collapse(fn.exponent, before.arg.term)))


def _iterate_zero(before, after) -> bool:
    return (isinstance(before, Apply) and isinstance(before.fn, Iterate) and before.fn.exponent == ZERO
            and after == Apply(before.fn.base, before.arg))


def _e_domination(before, after) -> bool:
    return (isinstance(before, Apply) and isinstance(before.fn, ESym)
            and after == Apply(Iterate(SUC_SYM, ONE), before.arg))


def _iterate_base_monotone(before, after) -> bool:
    if not (isinstance(before, Apply) and isinstance(before.fn, Iterate) and isinstance(before.fn.base, ESym)):
        return False
    return after == Apply(Iterate(Iterate(SUC_SYM, ONE), before.fn.exponent), before.arg)


def _iterate_compose(before, after) -> bool:
    if not (isinstance(before, Apply) and isinstance(before.fn, Iterate) and isinstance(before.fn.base, Iterate)):
        return False
    inner, outer = before.fn.base, before.fn
    return after == Apply(Iterate(inner.base, add(inner.exponent, outer.exponent)), before.arg)


def _shift_iterate(before, after) -> bool:
    if not (isinstance(before, Apply) and isinstance(before.fn, Iterate) and isinstance(before.fn.base, Shift)):
        return False
    shifted, outer = before.fn.base, before.fn
    return after == Apply(Shift(Iterate(shifted.base, outer.exponent), shifted.members), before.arg)


def _shift_unfold(before, after) -> bool:
    if not (isinstance(before, Apply) and isinstance(before.fn, Shift) and isinstance(before.arg, Canon)):
        return False
    widest = max_term(before.fn.members + (before.arg.term,))
    return after == Apply(before.fn.base, Canon(widest))


def _veblen_omega(before, after) -> bool:
    return (isinstance(before, VeblenApp) and before.a == Canon(ZERO) and isinstance(before.b, Canon)
            and after == Canon(w_pow(before.b.term)))


RULES: Dict[str, Rule] = {rule.name: rule for rule in (
    Rule('canon-sum', EQ_REL, '[α + β] = [α] + [β]', _canon_sum),
    Rule('suc-successor', EQ_REL, 'Suc обозначает ординальный последователь', _suc_successor),
    Rule('collapse-canon', EQ_REL, 'Suc^α(ξ) - канонический терм, F^0(ξ) = F(ξ)', _collapse_canon),
    Rule('iterate-zero', EQ_REL, 'F^0(ξ) = F(ξ)', _iterate_zero),
    Rule('e-domination', LE_REL, 'E(α) ≤ Suc^1(α)', _e_domination),
    Rule('iterate-base-monotone', LE_REL, 'F ≤ G поточечно влечёт F^α ≤ G^α (минимальность F^α)',
         _iterate_base_monotone),
    Rule('iterate-compose', LE_REL, '(F^α)^β(ξ) ≤ F^(α+β)(ξ)', _iterate_compose),
    Rule('shift-iterate', LE_REL, '(F[K])^α(ξ) ≤ F^α[K](ξ)', _shift_iterate),
    Rule('shift-unfold', EQ_REL, 'F[K](ξ) = F(max(K ∪ {ξ}))', _shift_unfold),
    Rule('veblen-omega', EQ_REL, 'ω^α = φ0α', _veblen_omega),
)}

CLOSING_RULES = ('reflexivity', 'order')


@dataclass(frozen=True)
class ProofStep:
    """
    Один шаг вывода.

    premise - переписываемый подтерм и результат (по пути path),
    conclusion - весь терм стороны до и после шага.
    """
    rule: str
    side: str
    path: Path
    premise: Tuple[ExtTerm, ExtTerm]
    conclusion: Tuple[ExtTerm, ExtTerm]

    @property
    def relation(self) -> str:
        if self.rule in CLOSING_RULES:
            return LE_REL
        return RULES[self.rule].relation


@dataclass(frozen=True)
class ProofTrace:
    lhs: ExtTerm
    rhs: ExtTerm
    steps: Tuple[ProofStep, ...]

    @property
    def conclusion(self) -> Tuple[ExtTerm, ExtTerm]:
        return self.steps[-1].conclusion


class TraceError(ValueError):
    """Трасса не проходит повторную проверку"""


def _replay_closing(trace: ProofTrace, step: ProofStep, current: Dict[str, ExtTerm]) -> None:
    if step.conclusion != (trace.lhs, trace.rhs):
        raise TraceError("Заключение последнего шага не совпадает с доказываемым неравенством")
    if step.rule == 'reflexivity':
        if trace.lhs != trace.rhs or len(trace.steps) != 1:
            raise TraceError("Рефлексивность применима только к совпадающим термам")
        return
    left, right = step.premise
    if (left, right) != (current['lhs'], current['rhs']):
        raise TraceError("Сравнение применено не к результатам переписывания")
    if not (isinstance(left, Canon) and isinstance(right, Canon)):
        raise TraceError("Сравнение применимо только к каноническим термам")
    if compare(left.term, right.term) is GT:
        raise TraceError("Канонические термы не удовлетворяют ≤")


def replay(trace: ProofTrace) -> bool:
    """
    Повторная проверка трассы шаг за шагом по схемам правил.

    Raises:
        TraceError: какой-либо шаг не является экземпляром своего правила
    """
    if not trace.steps:
        raise TraceError("Пустая трасса")
    current = {'lhs': trace.lhs, 'rhs': trace.rhs}
    for index, step in enumerate(trace.steps):
        if step.rule in CLOSING_RULES:
            if index != len(trace.steps) - 1:
                raise TraceError(f"Заключительное правило {step.rule} не в конце трассы")
            _replay_closing(trace, step, current)
            return True
        rule = RULES.get(step.rule)
        if rule is None:
            raise TraceError(f"Неизвестное правило: {step.rule}")
        if step.side not in current:
            raise TraceError(f"Неизвестная сторона: {step.side}")
        if step.side == 'rhs' and rule.relation != EQ_REL:
            raise TraceError("Правая часть переписывается только равенствами")
        whole_before, whole_after = step.conclusion
        before, after = step.premise
        if whole_before != current[step.side]:
            raise TraceError(f"Шаг {index + 1} не продолжает цепочку")
        try:
            if subterm(whole_before, step.path) != before:
                raise TraceError(f"Шаг {index + 1}: подтерм по пути не совпадает с посылкой")
            if replace_at(whole_before, step.path, after) != whole_after:
                raise TraceError(f"Шаг {index + 1}: заключение не получено заменой подтерма")
        except (KeyError, MalformedTerm) as exc:
            raise TraceError(str(exc)) from None
        if not rule.check(before, after):
            raise TraceError(f"Шаг {index + 1} не является экземпляром правила {rule.name}")
        current[step.side] = whole_after
    raise TraceError("Трасса не заканчивается заключительным правилом")
