"""
JSON-документы термов: {"v": 1, "term": doc}.

Каноническое целое n ≥ 1 кодируется как {"k": "nat"}, одночленная сумма - документом
своего монома, Canon(t) - документом t.
"""
from __future__ import annotations

import json
from typing import Any, Dict, Union

from ordinals import ZERO, Collapse, MalformedTerm, OmegaMono, OrdTerm, Sum, WPow, Zero, as_natural, is_canonical, nat
from prover.expressions import (
    E_SYM, SUC_SYM, Apply, Canon, ESym, ExtSum, ExtTerm, FunExpr, Iterate, Shift, SucSym, VeblenApp,
)

VERSION = 1

Doc = Dict[str, Any]

_EXT_KINDS = ('apply', 'veblen', 'extsum')


def _monomial_doc(p) -> Doc:
    if isinstance(p, WPow):
        return {'k': 'wpow', 'e': term_doc(p.exponent)}
    if isinstance(p, OmegaMono):
        return {'k': 'Wmono', 'e': term_doc(p.exponent), 'c': term_doc(p.coefficient)}
    return {'k': 'collapse', 'a': term_doc(p.iterate), 'x': term_doc(p.seed)}


def _function_doc(fn: FunExpr) -> Doc:
    if isinstance(fn, SucSym):
        return {'k': 'suc'}
    if isinstance(fn, ESym):
        return {'k': 'E'}
    if isinstance(fn, Iterate):
        return {'k': 'iter', 'base': _function_doc(fn.base), 'e': term_doc(fn.exponent)}
    return {'k': 'shift', 'base': _function_doc(fn.base), 'K': [term_doc(k) for k in fn.members]}


def term_doc(t) -> Doc:
    """Документ без обёртки версии"""
    if isinstance(t, Zero):
        return {'k': 'zero'}
    if isinstance(t, Sum):
        n = as_natural(t)
        if n is not None:
            return {'k': 'nat', 'n': n}
        if len(t.parts) == 1:
            return _monomial_doc(t.parts[0])
        return {'k': 'sum', 'parts': [_monomial_doc(p) for p in t.parts]}
    if isinstance(t, Canon):
        return term_doc(t.term)
    if isinstance(t, Apply):
        return {'k': 'apply', 'f': _function_doc(t.fn), 'x': term_doc(t.arg)}
    if isinstance(t, VeblenApp):
        return {'k': 'veblen', 'a': term_doc(t.a), 'b': term_doc(t.b)}
    if isinstance(t, ExtSum):
        return {'k': 'extsum', 'parts': [term_doc(p) for p in t.parts]}
    raise TypeError(f"Нельзя закодировать объект типа {type(t).__name__}")


def _field(doc: Doc, name: str):
    try:
        return doc[name]
    except (KeyError, TypeError):
        raise MalformedTerm(f"В документе {doc!r} нет поля {name!r}") from None


def _monomial_of(doc: Doc):
    kind = _field(doc, 'k')
    if kind == 'wpow':
        return WPow(_canonical_of(_field(doc, 'e')))
    if kind == 'Wmono':
        return OmegaMono(_canonical_of(_field(doc, 'e')), _canonical_of(_field(doc, 'c')))
    if kind == 'collapse':
        return Collapse(_canonical_of(_field(doc, 'a')), _canonical_of(_field(doc, 'x')))
    raise MalformedTerm(f"Ожидался документ монома, получен {kind!r}")


def _canonical_of(doc: Doc) -> OrdTerm:
    kind = _field(doc, 'k')
    if kind == 'zero':
        return ZERO
    if kind == 'nat':
        n = _field(doc, 'n')
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise MalformedTerm(f"Поле n должно быть натуральным числом ≥ 1: {n!r}")
        return nat(n)
    if kind == 'sum':
        parts = _field(doc, 'parts')
        if not isinstance(parts, list) or len(parts) < 2:
            raise MalformedTerm("Документ sum требует не менее двух мономов")
        return Sum(tuple(_monomial_of(p) for p in parts))
    if kind in _EXT_KINDS:
        raise MalformedTerm(f"Здесь допустим только канонический терм, получен {kind!r}")
    return Sum((_monomial_of(doc),))


def _function_of(doc: Doc) -> FunExpr:
    kind = _field(doc, 'k')
    if kind == 'suc':
        return SUC_SYM
    if kind == 'E':
        return E_SYM
    if kind == 'iter':
        return Iterate(_function_of(_field(doc, 'base')), _checked(_canonical_of(_field(doc, 'e'))))
    if kind == 'shift':
        members = tuple(_checked(_canonical_of(k)) for k in _field(doc, 'K'))
        return Shift(_function_of(_field(doc, 'base')), members)
    raise MalformedTerm(f"Неизвестный вид оператора {kind!r}")


def _ext_of(doc: Doc) -> ExtTerm:
    kind = _field(doc, 'k')
    if kind == 'apply':
        return Apply(_function_of(_field(doc, 'f')), _ext_of(_field(doc, 'x')))
    if kind == 'veblen':
        return VeblenApp(_ext_of(_field(doc, 'a')), _ext_of(_field(doc, 'b')))
    if kind == 'extsum':
        return ExtSum(tuple(_ext_of(p) for p in _field(doc, 'parts')))
    return Canon(_checked(_canonical_of(doc)))


def _checked(t: OrdTerm) -> OrdTerm:
    if not is_canonical(t):
        raise MalformedTerm("Документ описывает неканонический терм")
    return t


def term_of(doc: Doc) -> Union[OrdTerm, ExtTerm]:
    """
    Терм по документу без обёртки версии.

    Raises:
        MalformedTerm: неизвестный вид узла, нет поля или терм неканоничен
    """
    if _field(doc, 'k') in _EXT_KINDS:
        return _ext_of(doc)
    return _checked(_canonical_of(doc))


def dumps(t, indent=None) -> str:
    return json.dumps({'v': VERSION, 'term': term_doc(t)}, ensure_ascii=False, indent=indent)


def loads(text: str) -> Union[OrdTerm, ExtTerm]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTerm(f"Некорректный JSON: {exc}") from None
    if not isinstance(data, dict) or data.get('v') != VERSION:
        raise MalformedTerm(f"Ожидался документ версии {VERSION}")
    return term_of(_field(data, 'term'))
