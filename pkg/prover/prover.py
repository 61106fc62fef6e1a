"""
Частичный, но корректный вывод неравенств s ≤ t в расширенном слое.

Левая часть переписывается вверх (равенствами и правилами ≤) до канонического
терма u, правая - только равенствами до канонического v; затем u ≤ v
проверяется сравнением. Если что-то не сводится, ответ UNKNOWN.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import List, Optional

from ordinals import ONE, ZERO, OrdTerm, add, collapse, compare, max_term, w_pow
from ordinals.order import GT

from .expressions import (
    SUC_SYM, Apply, Canon, ESym, ExtSum, ExtTerm, FunExpr, Iterate, Path, Shift, SucSym, VeblenApp,
    lift, replace_at, subterm,
)
from .rules import EQ_REL, RULES, ProofStep, ProofTrace

logger = logging.getLogger(__name__)


class Verdict(Enum):
    LE = 'LE'
    UNKNOWN = 'UNKNOWN'


@dataclass(frozen=True)
class ProofResult:
    verdict: Verdict
    trace: Optional[ProofTrace] = None

    @property
    def proved(self) -> bool:
        return self.verdict is Verdict.LE


class _Stuck(Exception):
    pass


class Derivation:
    """
    Цепочка переписываний одной стороны неравенства.

    Args:
        side: 'lhs' или 'rhs'
        term: исходное выражение
        exact_only: разрешены только правила-равенства
    """

    def __init__(self, side: str, term: ExtTerm, exact_only: bool):
        self.side = side
        self.current = term
        self.exact_only = exact_only
        self.steps: List[ProofStep] = []

    def rewrite(self, path: Path, rule_name: str, new: ExtTerm) -> None:
        if self.exact_only and RULES[rule_name].relation != EQ_REL:
            raise _Stuck(rule_name)
        old = subterm(self.current, path)
        after = replace_at(self.current, path, new)
        self.steps.append(ProofStep(rule_name, self.side, tuple(path), (old, new), (self.current, after)))
        self.current = after

    def reduce(self, path: Path = ()) -> OrdTerm:
        """Свести подтерм по пути к каноническому терму"""
        t = subterm(self.current, path)
        if isinstance(t, Canon):
            return t.term
        if isinstance(t, ExtSum):
            values = [self.reduce(path + (i,)) for i in range(len(t.parts))]
            total = reduce(add, values)
            self.rewrite(path, 'canon-sum', Canon(total))
            return total
        if isinstance(t, VeblenApp):
            a = self.reduce(path + ('a',))
            b = self.reduce(path + ('b',))
            if a != ZERO:
                raise _Stuck('veblen')
            value = w_pow(b)
            self.rewrite(path, 'veblen-omega', Canon(value))
            return value
        x = self.reduce(path + ('arg',))
        return self._apply(path, t.fn, x)

    def _apply(self, path: Path, fn: FunExpr, x: OrdTerm) -> OrdTerm:
        arg = Canon(x)
        if isinstance(fn, SucSym):
            value = add(x, ONE)
            self.rewrite(path, 'suc-successor', Canon(value))
            return value
        if isinstance(fn, ESym):
            dominating = Iterate(SUC_SYM, ONE)
            self.rewrite(path, 'e-domination', Apply(dominating, arg))
            return self._apply(path, dominating, x)
        if isinstance(fn, Shift):
            widest = max_term(fn.members + (x,))
            self.rewrite(path, 'shift-unfold', Apply(fn.base, Canon(widest)))
            return self._apply(path, fn.base, widest)
        base, exponent = fn.base, fn.exponent
        if exponent == ZERO:
            self.rewrite(path, 'iterate-zero', Apply(base, arg))
            return self._apply(path, base, x)
        if isinstance(base, SucSym):
            value = collapse(exponent, x)
            self.rewrite(path, 'collapse-canon', Canon(value))
            return value
        if isinstance(base, ESym):
            new_fn = Iterate(Iterate(SUC_SYM, ONE), exponent)
            self.rewrite(path, 'iterate-base-monotone', Apply(new_fn, arg))
        elif isinstance(base, Iterate):
            new_fn = Iterate(base.base, add(base.exponent, exponent))
            self.rewrite(path, 'iterate-compose', Apply(new_fn, arg))
        else:
            new_fn = Shift(Iterate(base.base, exponent), base.members)
            self.rewrite(path, 'shift-iterate', Apply(new_fn, arg))
        return self._apply(path, new_fn, x)


def prove_le(s, t) -> ProofResult:
    """
    Попытка доказать s ≤ t.

    LE сопровождается трассой, каждый шаг которой - экземпляр правила;
    UNKNOWN допустим всегда.
    """
    s, t = lift(s), lift(t)
    if s == t:
        step = ProofStep('reflexivity', 'close', (), (s, t), (s, t))
        return ProofResult(Verdict.LE, ProofTrace(s, t, (step,)))
    left = Derivation('lhs', s, exact_only=False)
    right = Derivation('rhs', t, exact_only=True)
    try:
        u = left.reduce()
        v = right.reduce()
    except _Stuck as exc:
        logger.debug("Вывод не найден, застряли на %s", exc)
        return ProofResult(Verdict.UNKNOWN)
    if compare(u, v) is GT:
        logger.debug("Верхняя оценка левой части превосходит правую часть")
        return ProofResult(Verdict.UNKNOWN)
    closing = ProofStep('order', 'close', (), (Canon(u), Canon(v)), (s, t))
    return ProofResult(Verdict.LE, ProofTrace(s, t, tuple(left.steps + right.steps + [closing])))


def reduce_exact(t) -> Optional[OrdTerm]:
    """Канонический терм, равный t, если t сводится одними равенствами"""
    derivation = Derivation('rhs', lift(t), exact_only=True)
    try:
        return derivation.reduce()
    except _Stuck:
        return None
