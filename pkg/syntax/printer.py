"""
Печать термов в текстовом синтаксисе. Вывод полностью расставляет скобки
и читается обратно parse без потерь для канонических термов.
"""
from __future__ import annotations

from ordinals import ONE, ZERO, Collapse, OmegaMono, Sum, WPow, Zero
from prover.expressions import Apply, Canon, ESym, ExtSum, Iterate, Shift, SucSym, VeblenApp

from .json_codec import dumps


def _monomial(p) -> str:
    if isinstance(p, WPow):
        return f"w^({to_surface(p.exponent)})"
    if isinstance(p, OmegaMono):
        if p.exponent == ONE and p.coefficient == ONE:
            return 'W'
        return f"W^({to_surface(p.exponent)})*({to_surface(p.coefficient)})"
    return f"S^({to_surface(p.iterate)})({to_surface(p.seed)})"


def _canonical(t) -> str:
    if isinstance(t, Zero):
        return '0'
    parts = list(t.parts)
    ones = 0
    while parts and parts[-1] == WPow(ZERO):
        parts.pop()
        ones += 1
    pieces = [_monomial(p) for p in parts]
    if ones:
        pieces.append(str(ones))
    return ' + '.join(pieces)


def _function(fn) -> str:
    if isinstance(fn, SucSym):
        return 'S'
    if isinstance(fn, ESym):
        return 'E'
    if isinstance(fn, Iterate):
        return f"{_function(fn.base)}^({to_surface(fn.exponent)})"
    return f"{_function(fn.base)}[{', '.join(to_surface(k) for k in fn.members)}]"


def _sum_part(t) -> str:
    text = to_surface(t)
    if isinstance(t, ExtSum) or (isinstance(t, Canon) and ' + ' in text):
        return f"({text})"
    return text


def to_surface(t) -> str:
    """Текстовая форма канонического терма, расширенного выражения или символа оператора"""
    if isinstance(t, (Zero, Sum)):
        return _canonical(t)
    if isinstance(t, Canon):
        return _canonical(t.term)
    if isinstance(t, Apply):
        return f"{_function(t.fn)}({to_surface(t.arg)})"
    if isinstance(t, VeblenApp):
        return f"phi({to_surface(t.a)}, {to_surface(t.b)})"
    if isinstance(t, ExtSum):
        return ' + '.join(_sum_part(p) for p in t.parts)
    if isinstance(t, (SucSym, ESym, Iterate, Shift)):
        return _function(t)
    if isinstance(t, Collapse):
        return _monomial(t)
    raise TypeError(f"Нельзя напечатать объект типа {type(t).__name__}")


def render(term, style: str = 'surface') -> str:
    """Печать терма в стиле surface или json"""
    if style == 'surface':
        return to_surface(term)
    if style == 'json':
        return dumps(term)
    raise ValueError(f"Неизвестный стиль печати: {style}")
