"""
Расширенный слой выражений: символы операторов Suc и E, итерации F^α,
сдвиги F[K] и применения функции Веблена.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

from ordinals import (
    ZERO, CoeffSet, MalformedTerm, OrdTerm, Sum, Zero, coefficients, is_below_omega, norm,
    terms_up_to_norm,
)


@dataclass(frozen=True)
class SucSym:
    pass


@dataclass(frozen=True)
class ESym:
    pass


@dataclass(frozen=True)
class Iterate:
    base: 'FunExpr'
    exponent: OrdTerm


@dataclass(frozen=True)
class Shift:
    base: 'FunExpr'
    members: Tuple[OrdTerm, ...]

    def __post_init__(self):
        if not all(is_below_omega(k) for k in self.members):
            raise MalformedTerm("Элементы множества сдвига должны быть меньше Ω")


FunExpr = Union[SucSym, ESym, Iterate, Shift]

SUC_SYM = SucSym()
E_SYM = ESym()


@dataclass(frozen=True)
class Canon:
    term: OrdTerm


@dataclass(frozen=True)
class Apply:
    fn: FunExpr
    arg: 'ExtTerm'

    def __post_init__(self):
        if not ext_below_omega(self.arg):
            raise MalformedTerm("Аргумент оператора должен быть меньше Ω")


@dataclass(frozen=True)
class VeblenApp:
    a: 'ExtTerm'
    b: 'ExtTerm'

    def __post_init__(self):
        if not (ext_below_omega(self.a) and ext_below_omega(self.b)):
            raise MalformedTerm("Аргументы φ должны быть меньше Ω")


@dataclass(frozen=True)
class ExtSum:
    parts: Tuple['ExtTerm', ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise MalformedTerm("ExtSum требует не менее двух слагаемых")


ExtTerm = Union[Canon, Apply, VeblenApp, ExtSum]


def ext_below_omega(t: ExtTerm) -> bool:
    if isinstance(t, Canon):
        return is_below_omega(t.term)
    if isinstance(t, ExtSum):
        return all(ext_below_omega(p) for p in t.parts)
    return True


def lift(t) -> ExtTerm:
    """Канонический терм в расширенный слой; расширенный возвращается как есть"""
    if isinstance(t, (Zero, Sum)):
        return Canon(t)
    return t


def fun_norm(fn: FunExpr) -> int:
    """Вклад символа в норму: N(F(ξ)) = N(ξ) + fun_norm(F)"""
    if isinstance(fn, (SucSym, ESym)):
        return 1
    if isinstance(fn, Iterate):
        return fun_norm(fn.base) + norm(fn.exponent)
    return fun_norm(fn.base) + sum(norm(k) for k in fn.members)


def ext_norm(t) -> int:
    """
    Норма расширенного выражения.

    N(F^α(ξ)) = N(F(ξ)) + N(α), N(φ(a, b)) = N(a) + N(b) + 1.
    Для сдвига F[K](ξ) учитываются все элементы K: N(F(ξ)) + Σ N(k).
    """
    if isinstance(t, (Zero, Sum)):
        return norm(t)
    if isinstance(t, Canon):
        return norm(t.term)
    if isinstance(t, Apply):
        return ext_norm(t.arg) + fun_norm(t.fn)
    if isinstance(t, VeblenApp):
        return ext_norm(t.a) + ext_norm(t.b) + 1
    return sum(ext_norm(p) for p in t.parts)


def ext_coefficients(t) -> Union[CoeffSet, Tuple[ExtTerm, ...]]:
    """K_Ω: канонический случай делегируется, прочие термы ниже Ω дают {t}"""
    if isinstance(t, (Zero, Sum)):
        return coefficients(t)
    if isinstance(t, Canon):
        return coefficients(t.term)
    if ext_below_omega(t):
        return (t,)
    found: List[ExtTerm] = []
    for part in t.parts:
        for k in ext_coefficients(part):
            k = lift(k)
            if k not in found:
                found.append(k)
    return tuple(found)


def contains_veblen(t: ExtTerm) -> bool:
    if isinstance(t, VeblenApp):
        return True
    if isinstance(t, Apply):
        return contains_veblen(t.arg)
    if isinstance(t, ExtSum):
        return any(contains_veblen(p) for p in t.parts)
    return False


# Пути к подтермам в монотонных позициях

Path = Tuple[Union[str, int], ...]


def subterm(t: ExtTerm, path: Sequence) -> ExtTerm:
    for step in path:
        if step == 'arg' and isinstance(t, Apply):
            t = t.arg
        elif step == 'a' and isinstance(t, VeblenApp):
            t = t.a
        elif step == 'b' and isinstance(t, VeblenApp):
            t = t.b
        elif isinstance(step, int) and isinstance(t, ExtSum):
            t = t.parts[step]
        else:
            raise KeyError(f"Путь {tuple(path)} не ведёт к подтерму")
    return t


def replace_at(t: ExtTerm, path: Sequence, new: ExtTerm) -> ExtTerm:
    if not path:
        return new
    step, rest = path[0], path[1:]
    if step == 'arg' and isinstance(t, Apply):
        return Apply(t.fn, replace_at(t.arg, rest, new))
    if step == 'a' and isinstance(t, VeblenApp):
        return VeblenApp(replace_at(t.a, rest, new), t.b)
    if step == 'b' and isinstance(t, VeblenApp):
        return VeblenApp(t.a, replace_at(t.b, rest, new))
    if isinstance(step, int) and isinstance(t, ExtSum):
        parts = list(t.parts)
        parts[step] = replace_at(parts[step], rest, new)
        return ExtSum(tuple(parts))
    raise KeyError(f"Путь {tuple(path)} не ведёт к подтерму")


def fun_exprs(depth: int, exponents: Sequence[OrdTerm], shifts: Sequence[OrdTerm]) -> List[FunExpr]:
    """Функциональные выражения глубины ровно depth"""
    if depth < 1:
        return []
    if depth == 1:
        return [SUC_SYM, E_SYM]
    found: List[FunExpr] = []
    for inner in fun_exprs(depth - 1, exponents, shifts):
        found.extend(Iterate(inner, e) for e in exponents)
        found.extend(Shift(inner, (k,)) for k in shifts)
    return found


def ext_terms(depth: int = 3, component_norm: int = 2) -> List[ExtTerm]:
    """
    Все выражения без φ глубины от 1 до depth.

    Показатели итераций берутся из канонических термов нормы ≤ component_norm,
    элементы сдвигов и канонические аргументы - из тех же термов ниже Ω.
    Суммы строятся только вида (выражение + канонический терм).
    """
    components = terms_up_to_norm(component_norm)
    below = [t for t in components if is_below_omega(t)]
    by_depth: List[List[ExtTerm]] = [[Canon(t) for t in below]]
    funs = {d: fun_exprs(d, components, below) for d in range(1, depth + 1)}
    for d in range(1, depth + 1):
        level: List[ExtTerm] = []
        for fd in range(1, d + 1):
            for fn in funs[fd]:
                level.extend(Apply(fn, arg) for arg in by_depth[d - fd])
        level.extend(ExtSum((x, Canon(c))) for x in by_depth[d - 1] if not isinstance(x, Canon)
                     for c in below if c != ZERO)
        by_depth.append(level)
    return [t for level in by_depth[1:] for t in level]
