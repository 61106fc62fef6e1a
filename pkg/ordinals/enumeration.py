"""
Перечисление канонических термов с ограничением по норме.

Полное перечисление кешируется по норме. Термы ниже границы строятся обходом
лексикографического префикса границы: для фрагмента {0, +, ω^} отдельным
генератором, для остальных границ через мономы, меньшие заданного. Предел cap
сравнивается с размером самого результата, поэтому иерархия может работать
с границами нормы порядка тысяч.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import islice
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .normalize import is_canonical
from .order import EQ, GT, LT, compare, compare_monomials, max_term
from .terms import (
    OMEGA, ONE, ZERO, Collapse, Monomial, OmegaMono, OrdTerm, Sum, WPow, Zero,
    as_natural, coefficient_members, is_below_omega, is_lone_collapse, mono, mono_norm, nat, norm, parts_of,
)

logger = logging.getLogger(__name__)

DEFAULT_CAP = 50_000
# суммарное число мономов верхнего уровня во всех термах одного результата
PARTS_LIMIT = 20_000_000


class EnumerationBudget(RuntimeError):
    """Результат перечисления превысил бы заданный предел"""

    def __init__(self, cap: int, detail: Optional[str] = None):
        self.cap = cap
        message = f"Перечисление превышает предел в {cap} термов"
        super().__init__(f"{message}: {detail}" if detail else message)


_TERMS_BY_NORM: Dict[int, Tuple[OrdTerm, ...]] = {}


def _iter_monomials_of_norm(n: int) -> Iterator[Monomial]:
    if n == 1:
        yield OmegaMono(ONE, ONE)
    if n >= 1:
        for e in terms_of_norm(n - 1):
            if is_below_omega(e) and not is_lone_collapse(e):
                yield WPow(e)
    for ne in range(1, n - 1):
        for e in terms_of_norm(ne):
            for c in terms_of_norm(n - 1 - ne):
                if is_below_omega(c) and not (e == ONE and c == ONE):
                    yield OmegaMono(e, c)
    for na in range(1, n):
        for a in terms_of_norm(na):
            for x in terms_of_norm(n - 1 - na):
                if is_below_omega(x):
                    yield Collapse(a, x)


@lru_cache(maxsize=None)
def monomials_of_norm(n: int) -> Tuple[Monomial, ...]:
    """Все канонические мономы нормы ровно n"""
    return tuple(_iter_monomials_of_norm(n))


def _may_follow(prev: Monomial, cur: Monomial) -> bool:
    if compare_monomials(prev, cur) is LT:
        return False
    if isinstance(prev, OmegaMono) and isinstance(cur, OmegaMono):
        return compare(prev.exponent, cur.exponent) is not EQ
    return True


def _iter_sums(n: int, prev: Optional[Monomial]) -> Iterator[Tuple[Monomial, ...]]:
    for k in range(1, n + 1):
        # мономы старшей нормы не кешируются: уровень может не пройти по пределу
        candidates = monomials_of_norm(k) if prev is not None or k < n else _iter_monomials_of_norm(k)
        for m in candidates:
            if prev is not None and not _may_follow(prev, m):
                continue
            if k == n:
                yield (m,)
            else:
                for rest in _sums_of_norm(n - k, m):
                    yield (m,) + rest


@lru_cache(maxsize=None)
def _sums_of_norm(n: int, prev: Optional[Monomial]) -> Tuple[Tuple[Monomial, ...], ...]:
    return tuple(_iter_sums(n, prev))


def _iter_terms_of_norm(n: int) -> Iterator[OrdTerm]:
    if n == 0:
        yield ZERO
        return
    for parts in _iter_sums(n, None):
        yield Sum(parts)


def terms_of_norm(n: int) -> Tuple[OrdTerm, ...]:
    """Все канонические термы нормы ровно n в фиксированном порядке"""
    if n < 0:
        return ()
    if n not in _TERMS_BY_NORM:
        _TERMS_BY_NORM[n] = tuple(_iter_terms_of_norm(n))
    return _TERMS_BY_NORM[n]


def _level(n: int, room: int) -> Optional[Tuple[OrdTerm, ...]]:
    """Уровень нормы n, если в нём не больше room термов; иначе None"""
    if n < 0:
        return ()
    if n in _TERMS_BY_NORM:
        block = _TERMS_BY_NORM[n]
        return block if len(block) <= room else None
    found = []
    for t in _iter_terms_of_norm(n):
        found.append(t)
        if len(found) > room:
            logger.debug("Уровень нормы %d не уместился в предел %d", n, room)
            return None
    _TERMS_BY_NORM[n] = tuple(found)
    return _TERMS_BY_NORM[n]


def _take(terms: Iterable[OrdTerm], cap: int) -> List[OrdTerm]:
    taken = []
    parts = 0
    for t in terms:
        taken.append(t)
        parts += len(parts_of(t))
        if len(taken) > cap:
            raise EnumerationBudget(cap)
        if parts > PARTS_LIMIT:
            raise EnumerationBudget(cap, f"термы содержат больше {PARTS_LIMIT} мономов")
    return taken


def _all_up_to(k: int, cap: int) -> List[OrdTerm]:
    found: List[OrdTerm] = []
    for n in range(k + 1):
        block = _level(n, cap - len(found))
        if block is None:
            raise EnumerationBudget(cap)
        found.extend(block)
    return found


def terms_up_to_norm(k: int, bound: Optional[OrdTerm] = None, cap: int = DEFAULT_CAP) -> List[OrdTerm]:
    """
    Канонические термы с нормой ≤ k (и строго меньше bound, если он задан).

    Raises:
        EnumerationBudget: результат содержал бы больше cap термов
    """
    if bound is not None:
        return terms_below(bound, k, cap)
    if k < 0:
        return []
    return _all_up_to(k, cap)


def in_cnf_fragment(t: OrdTerm) -> bool:
    """Терм построен только из 0, + и ω^"""
    return all(isinstance(p, WPow) and in_cnf_fragment(p.exponent) for p in parts_of(t))


@lru_cache(maxsize=None)
def cnf_terms_of_norm(n: int) -> Tuple[OrdTerm, ...]:
    """Термы фрагмента {0, +, ω^} нормы ровно n, без перечисления остальных термов"""
    if n < 0:
        return ()
    if n == 0:
        return (ZERO,)
    return tuple(Sum(parts) for parts in _cnf_sums(n, None))


@lru_cache(maxsize=None)
def _cnf_sums(n: int, prev: Optional[WPow]) -> Tuple[Tuple[WPow, ...], ...]:
    found = []
    for k in range(1, n + 1):
        for e in cnf_terms_of_norm(k - 1):
            m = WPow(e)
            if prev is not None and compare_monomials(prev, m) is LT:
                continue
            if k == n:
                found.append((m,))
            else:
                found.extend((m,) + rest for rest in _cnf_sums(n - k, m))
    return tuple(found)


def cnf_terms_up_to_norm(k: int) -> List[OrdTerm]:
    return [t for n in range(k + 1) for t in cnf_terms_of_norm(n)]


def cnf_count_exceeds(k: int, cap: int) -> bool:
    """
    Больше ли cap термов фрагмента {0, +, ω^} с нормой ≤ k.

    Терм фрагмента есть мультимножество мономов ω^e, моном веса w соответствует
    терму фрагмента нормы w - 1, так что число термов считается преобразованием
    Эйлера без построения самих термов. Счёт останавливается, как только
    накопленное число превысило cap.
    """
    counts = [1]
    weights = [0]
    total = 1
    for n in range(1, k + 1):
        weights.append(sum(d * counts[d - 1] for d in range(1, n + 1) if n % d == 0))
        counts.append(sum(weights[i] * counts[n - i] for i in range(1, n + 1)) // n)
        total += counts[n]
        if total > cap:
            return True
    return total > cap


def terms_below(bound: OrdTerm, k: int, cap: int = DEFAULT_CAP) -> List[OrdTerm]:
    """
    Термы t < bound с N(t) ≤ k; множество совпадает с terms_up_to_norm(k, bound).

    Если размер результата заранее известен и больше cap, EnumerationBudget
    поднимается до построения термов.
    """
    if k < 0:
        return []
    n = as_natural(bound)
    if n is not None:
        count = min(n, k + 1)
        _check_naturals(count, cap)
        return [nat(i) for i in range(count)]
    # граница не меньше ω: все натуральные 0..k входят в результат
    _check_naturals(k + 1, cap)
    if in_cnf_fragment(bound):
        return _take(_cnf_below(bound, k), cap)
    # граница вне фрагмента не меньше ε₀, а весь фрагмент лежит ниже ε₀
    if cnf_count_exceeds(k, cap):
        raise EnumerationBudget(cap)
    logger.debug("Граница вне фрагмента КНФ, обход через меньшие мономы до нормы %d", k)
    return _take(_below(bound, k, cap), cap)


def _check_naturals(count: int, cap: int) -> None:
    if count > cap:
        raise EnumerationBudget(cap)
    if count * (count - 1) // 2 > PARTS_LIMIT:
        raise EnumerationBudget(cap, f"термы содержат больше {PARTS_LIMIT} мономов")


# Фрагмент {0, +, ω^}: единственность записи позволяет идти по префиксу границы

def _cnf_below(bound: OrdTerm, k: int) -> Iterator[OrdTerm]:
    if k < 0 or isinstance(bound, Zero):
        return
    parts = bound.parts
    prefix_norm = 0
    for i, q in enumerate(parts):
        prefix = parts[:i]
        yield Sum(prefix) if prefix else ZERO
        budget = k - prefix_norm
        for p in _cnf_monomials_below(q, budget):
            for tail in _cnf_tails(p, budget - mono_norm(p), inclusive=True):
                yield Sum(prefix + (p,) + tail)
        prefix_norm += mono_norm(q)
        if prefix_norm > k:
            return


def _cnf_monomials_below(q: WPow, budget: int) -> Iterator[WPow]:
    for e in _cnf_below(q.exponent, budget - 1):
        yield WPow(e)


def _cnf_monomials_le(q: WPow, budget: int) -> Iterator[WPow]:
    yield from _cnf_monomials_below(q, budget)
    if mono_norm(q) <= budget:
        yield q


def _cnf_tails(p: WPow, budget: int, inclusive: bool) -> Iterator[Tuple[WPow, ...]]:
    """Невозрастающие хвосты из мономов ≤ p (или < p) с суммарной нормой ≤ budget"""
    yield ()
    candidates = _cnf_monomials_le(p, budget) if inclusive else _cnf_monomials_below(p, budget)
    for m in candidates:
        weight = mono_norm(m)
        for count in range(1, budget // weight + 1):
            for rest in _cnf_tails(m, budget - count * weight, inclusive=False):
                yield (m,) * count + rest


# Произвольная граница. Различные канонические термы могут быть EQ-равны
# (Suc^1(1) = Suc^1(0)), поэтому префикс идёт по мономам, EQ-равным мономам
# границы, а не только по самим этим мономам. Вспомогательные наборы
# ограничены тем же cap, что и результат.

def _below(bound: OrdTerm, k: int, cap: int) -> Iterator[OrdTerm]:
    if k < 0 or isinstance(bound, Zero):
        return
    yield from _walk(bound.parts, 0, (), k, cap)


def _walk(parts: Tuple[Monomial, ...], i: int, chosen: Tuple[Monomial, ...],
          budget: int, cap: int) -> Iterator[OrdTerm]:
    """Термы, первые i мономов которых EQ-равны мономам границы и уже выбраны"""
    prev = chosen[-1] if chosen else None
    yield Sum(chosen) if chosen else ZERO
    q = parts[i]
    for p in _monomials_below(q, budget, cap):
        if prev is None or _may_follow(prev, p):
            for tail in _tails(p, budget - mono_norm(p), cap):
                yield Sum(chosen + (p,) + tail)
    if i + 1 < len(parts):
        for r in _eq_monomials(q, budget, cap):
            if prev is None or _may_follow(prev, r):
                yield from _walk(parts, i + 1, chosen + (r,), budget - mono_norm(r), cap)


@lru_cache(maxsize=4096)
def _collect(bound: OrdTerm, k: int, cap: int) -> Tuple[OrdTerm, ...]:
    """Термы < bound с нормой ≤ k для вложенных границ"""
    if k < 0:
        return ()
    n = as_natural(bound)
    if n is not None:
        count = min(n, k + 1)
        if count > cap:
            raise EnumerationBudget(cap)
        return tuple(nat(i) for i in range(count))
    if in_cnf_fragment(bound):
        return tuple(_take(_cnf_below(bound, k), cap))
    return tuple(_take(_below(bound, k, cap), cap))


def _tails(p: Monomial, budget: int, cap: int) -> Iterator[Tuple[Monomial, ...]]:
    """Продолжения канонической суммы после монома p с суммарной нормой ≤ budget"""
    yield ()
    for m in _monomials_below(p, budget, cap) + _eq_monomials(p, budget, cap):
        if not _may_follow(p, m):
            continue
        for rest in _tails(m, budget - mono_norm(m), cap):
            yield (m,) + rest


def _bounded(found: Iterable, cap: int) -> tuple:
    found = tuple(islice(found, cap + 1))
    if len(found) > cap:
        raise EnumerationBudget(cap)
    return found


@lru_cache(maxsize=4096)
def _eq_terms(t: OrdTerm, budget: int, cap: int) -> Tuple[OrdTerm, ...]:
    """Канонические термы, EQ-равные t, с нормой ≤ budget"""
    if budget < 0:
        return ()
    if isinstance(t, Zero):
        return (ZERO,)
    return _bounded((Sum(parts) for parts in _eq_sequences(t.parts, None, budget, cap)), cap)


def _eq_sequences(parts: Tuple[Monomial, ...], prev: Optional[Monomial],
                  budget: int, cap: int) -> Iterator[Tuple[Monomial, ...]]:
    if not parts:
        yield ()
        return
    for r in _eq_monomials(parts[0], budget, cap):
        if prev is None or _may_follow(prev, r):
            for rest in _eq_sequences(parts[1:], r, budget - mono_norm(r), cap):
                yield (r,) + rest


@lru_cache(maxsize=4096)
def _eq_monomials(q: Monomial, budget: int, cap: int) -> Tuple[Monomial, ...]:
    """Канонические мономы, EQ-равные q (включая сам q), с нормой ≤ budget"""
    if budget < 1:
        return ()
    return _bounded(_iter_eq_monomials(q, budget, cap), cap)


def _iter_eq_monomials(q: Monomial, budget: int, cap: int) -> Iterator[Monomial]:
    if isinstance(q, OmegaMono):
        if q == OmegaMono(ONE, ONE):
            yield q
            return
        for e in _eq_terms(q.exponent, budget - 2, cap):
            for c in _eq_terms(q.coefficient, budget - 1 - norm(e), cap):
                yield OmegaMono(e, c)
    elif isinstance(q, WPow):
        for e in _eq_terms(q.exponent, budget - 1, cap):
            if not is_lone_collapse(e):
                yield WPow(e)
    else:
        # при EQ-равных итерациях равенство решают зёрна, и зерно всегда ниже самого γ
        top = mono(q)
        for a in _eq_terms(q.iterate, budget - 2, cap):
            for x in _collect(top, budget - 1 - norm(a), cap):
                candidate = Collapse(a, x)
                if compare_monomials(candidate, q) is EQ:
                    yield candidate


@lru_cache(maxsize=4096)
def _monomials_below(q: Monomial, budget: int, cap: int) -> Tuple[Monomial, ...]:
    """Канонические мономы m < q с нормой ≤ budget"""
    if budget < 1:
        return ()
    return _bounded(_iter_monomials_below(q, budget, cap), cap)


def _iter_monomials_below(q: Monomial, budget: int, cap: int) -> Iterator[Monomial]:
    if isinstance(q, OmegaMono):
        yield from _omega_monomials_below(q, budget, cap)
        exponent_bound = OMEGA
    elif isinstance(q, WPow):
        exponent_bound = q.exponent
    else:
        # ω^e < γ для ε-числа γ ровно при e < γ
        exponent_bound = mono(q)
    for e in _collect(exponent_bound, budget - 1, cap):
        if not is_lone_collapse(e):
            yield WPow(e)
    yield from _collapses_below(q, budget, cap)


def _omega_monomials_below(q: OmegaMono, budget: int, cap: int) -> Iterator[OmegaMono]:
    omega = OmegaMono(ONE, ONE)
    if q == omega:
        return
    yield omega
    # меньший показатель: коэффициент любой ненулевой ниже Ω
    for e in _collect(q.exponent, budget - 2, cap):
        if isinstance(e, Zero):
            continue
        for c in _collect(OMEGA, budget - 1 - norm(e), cap):
            if not isinstance(c, Zero) and not (e == ONE and c == ONE):
                yield OmegaMono(e, c)
    # EQ-равный показатель: меньший коэффициент
    for e in _eq_terms(q.exponent, budget - 2, cap):
        for c in _collect(q.coefficient, budget - 1 - norm(e), cap):
            if not isinstance(c, Zero) and not (e == ONE and c == ONE):
                yield OmegaMono(e, c)


def _collapses_below(q: Monomial, budget: int, cap: int) -> Iterator[Collapse]:
    if budget < 2:
        return
    if isinstance(q, OmegaMono):
        yield from _all_collapses(budget, cap)
    elif isinstance(q, WPow):
        # γ < ω^e ровно при γ < e
        yield from _collapses_below_term(q.exponent, budget, cap)
    else:
        yield from _collapses_below_collapse(q, budget, cap)


def _collapses_below_term(t: OrdTerm, budget: int, cap: int) -> Iterator[Collapse]:
    if isinstance(t, Zero):
        return
    head = t.parts[0]
    yield from _collapses_below(head, budget, cap)
    if isinstance(head, Collapse) and len(t.parts) > 1:
        yield from _eq_monomials(head, budget, cap)


def _collapses_up_to_term(t: OrdTerm, budget: int, cap: int) -> Iterator[Collapse]:
    yield from _collapses_below_term(t, budget, cap)
    if is_lone_collapse(t):
        yield from _eq_monomials(t.parts[0], budget, cap)


def _all_collapses(budget: int, cap: int) -> Iterator[Collapse]:
    for na in range(1, budget):
        block = _level(na, cap)
        if block is None:
            raise EnumerationBudget(cap)
        for a in block:
            for x in _collect(OMEGA, budget - 1 - na, cap):
                yield Collapse(a, x)


def _collapses_below_collapse(q: Collapse, budget: int, cap: int) -> Iterator[Collapse]:
    a, x = q.iterate, q.seed
    top = mono(q)
    # меньшая итерация: K_Ω итерации и зерно ниже q; итерация ниже Ω сама себе K_Ω
    smaller = [a2 for a2 in _collect(a if compare(a, top) is LT else top, budget - 2, cap)
               if not isinstance(a2, Zero)]
    if compare(a, OMEGA) is GT:
        smaller.extend(a2 for a2 in _collect(a, budget - 2, cap)
                       if not is_below_omega(a2) and all(compare(m, top) is LT for m in coefficient_members(a2)))
    for a2 in smaller:
        for x2 in _collect(top, budget - 1 - norm(a2), cap):
            yield Collapse(a2, x2)
    # EQ-равная итерация: зерно не меньше x даёт γ > x
    for a2 in _eq_terms(a, budget - 2, cap):
        for x2 in _collect(x, budget - 1 - norm(a2), cap):
            candidate = Collapse(a2, x2)
            if compare_monomials(candidate, q) is LT:
                yield candidate
    # большая итерация: γ не больше наибольшего из K_Ω a и x
    ceiling = max_term(list(coefficient_members(a)) + [x])
    for candidate in _collapses_up_to_term(ceiling, budget, cap):
        if compare(candidate.iterate, a) is GT and compare_monomials(candidate, q) is LT:
            yield candidate


# Независимый оракул: сгенерировать все структуры и отфильтровать по инвариантам

def brute_force_terms(k: int) -> List[OrdTerm]:
    """Канонические термы нормы ≤ k через перебор всех структур и фильтрацию"""
    by_norm: Dict[int, List[OrdTerm]] = {}
    for n in range(k + 1):
        by_norm[n] = _brute_of_norm(n, by_norm)
    return [t for n in range(k + 1) for t in by_norm[n]]


def _brute_monomials(j: int, smaller: Dict[int, List[OrdTerm]]) -> List[Monomial]:
    candidates: List[Monomial] = [OmegaMono(ONE, ONE)] if j == 1 else []
    candidates.extend(WPow(e) for e in smaller[j - 1])
    for left in range(j):
        right = j - 1 - left
        for a in smaller[left]:
            for b in smaller[right]:
                candidates.append(OmegaMono(a, b))
                candidates.append(Collapse(a, b))
    return [m for m in candidates if mono_norm(m) == j and is_canonical(Sum((m,)))]


def _sequences(n: int, monos: Dict[int, List[Monomial]]) -> Iterator[Tuple[Monomial, ...]]:
    for j in range(1, n + 1):
        for m in monos[j]:
            if j == n:
                yield (m,)
            else:
                for rest in _sequences(n - j, monos):
                    yield (m,) + rest


def _brute_of_norm(n: int, smaller: Dict[int, List[OrdTerm]]) -> List[OrdTerm]:
    if n == 0:
        return [ZERO]
    monos = {j: _brute_monomials(j, smaller) for j in range(1, n + 1)}
    seen = set()
    found = []
    for seq in _sequences(n, monos):
        t = Sum(seq)
        if t not in seen and is_canonical(t) and norm(t) == n:
            seen.add(t)
            found.append(t)
    return found
