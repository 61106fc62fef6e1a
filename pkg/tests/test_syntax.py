import json

import pytest

from ordinals import (
    OMEGA, ONE, SMALL_OMEGA, ZERO, MalformedTerm, add, collapse, nat, omega_mono, terms_of_norm,
)
from prover import E_SYM, SUC_SYM, Apply, Canon, ExtSum, Iterate, Shift, VeblenApp
from syntax import ParseError, dumps, loads, parse, parse_canonical, render, to_surface
from syntax.parser import MAX_NESTING


@pytest.mark.parametrize('text, expected', [
    ('S^(W)(0)', collapse(OMEGA, ZERO)),
    ('w^0 + w^0 + w^0', nat(3)),
    ('S(S(0))', nat(2)),
    ('W', OMEGA),
    ('W^2*3', omega_mono(nat(2), nat(3))),
    ('W^2', omega_mono(nat(2), ONE)),
    ('w^1', SMALL_OMEGA),
    ('w^(1) + 2', add(SMALL_OMEGA, nat(2))),
    ('1 + w^1', SMALL_OMEGA),
    ('S^0(4)', nat(5)),
])
def test_parse_canonical_terms(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize('term, text', [
    (ZERO, '0'),
    (nat(3), '3'),
    (OMEGA, 'W'),
    (SMALL_OMEGA, 'w^(1)'),
    (add(SMALL_OMEGA, nat(2)), 'w^(1) + 2'),
    (collapse(OMEGA, ZERO), 'S^(W)(0)'),
    (omega_mono(nat(2), nat(3)), 'W^(2)*(3)'),
])
def test_print_canonical_terms(term, text):
    assert to_surface(term) == text


@pytest.mark.parametrize('text, expected', [
    ('E(0)', Apply(E_SYM, Canon(ZERO))),
    ('S^(1)^(2)(0)', Apply(Iterate(Iterate(SUC_SYM, ONE), nat(2)), Canon(ZERO))),
    ('S[w^1]^1(0)', Apply(Iterate(Shift(SUC_SYM, (SMALL_OMEGA,)), ONE), Canon(ZERO))),
    ('phi(0, 1)', VeblenApp(Canon(ZERO), Canon(ONE))),
    ('w^(E(0))', VeblenApp(Canon(ZERO), Apply(E_SYM, Canon(ZERO)))),
    ('E(0) + 1', ExtSum((Apply(E_SYM, Canon(ZERO)), Canon(ONE)))),
])
def test_parse_extended_expressions(text, expected):
    term = parse(text)
    assert term == expected
    assert parse(to_surface(term)) == term


def test_printed_extended_expressions():
    assert to_surface(parse('S^(1)^(2)(0)')) == 'S^(1)^(2)(0)'
    assert to_surface(parse('S[w^1]^1(0)')) == 'S[w^(1)]^(1)(0)'
    assert to_surface(parse('phi(0, 1)')) == 'phi(0, 1)'
    assert to_surface(parse('E(0) + (1 + w^1)')) == 'E(0) + w^(1)'


@pytest.mark.parametrize('k', range(7))
def test_round_trip_on_enumerated_terms(k):
    for t in terms_of_norm(k):
        text = to_surface(t)
        assert render(t) == text
        assert parse(text) == t
        assert to_surface(parse(text)) == text
        document = dumps(t)
        assert loads(document) == t
        assert dumps(loads(document)) == document


def test_parse_error_positions():
    with pytest.raises(ParseError) as info:
        parse('1 + )')
    assert (info.value.line, info.value.column) == (1, 5)
    assert 'NAT' in info.value.expected
    with pytest.raises(ParseError) as info:
        parse('1 +\n  )')
    assert (info.value.line, info.value.column) == (2, 3)


@pytest.mark.parametrize('text', ['', 'x', '1 +', 'S^(W)(', 'W^(E(0))', '(1', '1 2'])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


@pytest.mark.parametrize('text', [
    '(' * 5000 + '1' + ')' * 5000,
    'S(' * 5000 + '0' + ')' * 5000,
    'w^' * 5000 + '1',
])
def test_deep_nesting_is_a_parse_error(text):
    with pytest.raises(ParseError):
        parse(text)


def test_nesting_up_to_the_limit_parses():
    depth = MAX_NESTING - 1
    assert parse('(' * depth + '1' + ')' * depth) == ONE
    assert parse('S(' * (depth - 1) + '0' + ')' * (depth - 1)) == nat(depth - 1)


def test_render_lives_in_printer():
    import syntax.printer

    assert syntax.printer.render is render


def test_malformed_canonical_term():
    with pytest.raises(MalformedTerm):
        parse('S^(1)(W)')


def test_parse_canonical_rejects_extended():
    assert parse_canonical('S(0)') == ONE
    with pytest.raises(ParseError):
        parse_canonical('E(0)')


def test_json_documents():
    assert json.loads(dumps(nat(3))) == {'v': 1, 'term': {'k': 'nat', 'n': 3}}
    assert json.loads(dumps(ZERO)) == {'v': 1, 'term': {'k': 'zero'}}
    assert json.loads(dumps(OMEGA))['term'] == {'k': 'Wmono', 'e': {'k': 'nat', 'n': 1}, 'c': {'k': 'nat', 'n': 1}}
    expr = parse('S[w^1]^1(E(0)) + 2')
    assert loads(dumps(expr)) == expr
    assert render(expr, 'json') == dumps(expr)
    assert render(expr) == to_surface(expr)
    with pytest.raises(ValueError):
        render(expr, 'latex')


@pytest.mark.parametrize('text', [
    'not json',
    '[]',
    '{"v": 2, "term": {"k": "zero"}}',
    '{"v": 1}',
    '{"v": 1, "term": {"k": "nat", "n": 0}}',
    '{"v": 1, "term": {"k": "nat", "n": true}}',
    '{"v": 1, "term": {"k": "bogus"}}',
    '{"v": 1, "term": {"k": "sum", "parts": [{"k": "wpow", "e": {"k": "zero"}}]}}',
    '{"v": 1, "term": {"k": "sum", "parts": [{"k": "wpow", "e": {"k": "zero"}},'
    ' {"k": "Wmono", "e": {"k": "nat", "n": 1}, "c": {"k": "nat", "n": 1}}]}}',
    '{"v": 1, "term": {"k": "apply", "f": {"k": "suc"}, "x": {"k": "Wmono",'
    ' "e": {"k": "nat", "n": 1}, "c": {"k": "nat", "n": 1}}}}',
])
def test_malformed_json(text):
    with pytest.raises(MalformedTerm):
        loads(text)
