import random
from dataclasses import replace

import pytest

from ordinals import (
    OMEGA, ONE, SMALL_OMEGA, ZERO, MalformedTerm, collapse, is_below_omega, le, nat, terms_up_to_norm,
)
from prover import (
    E_SYM, RULES, SUC_SYM, Apply, Canon, ExtSum, Iterate, ProofTrace, Shift, TraceError, VeblenApp, Verdict,
    ext_coefficients, ext_norm, ext_terms, prove_le, reduce_exact, replay,
)

COMPOSED = Apply(Iterate(Iterate(SUC_SYM, ONE), nat(2)), Canon(ZERO))
SHIFTED = Apply(Iterate(Shift(SUC_SYM, (SMALL_OMEGA,)), ONE), Canon(ZERO))
E_ZERO = Apply(E_SYM, Canon(ZERO))


@pytest.mark.parametrize('left, right, rules', [
    (COMPOSED, Canon(collapse(nat(3), ZERO)), {'iterate-compose', 'collapse-canon'}),
    (SHIFTED, Canon(collapse(ONE, SMALL_OMEGA)), {'shift-iterate', 'shift-unfold', 'collapse-canon'}),
    (E_ZERO, Canon(collapse(ONE, ZERO)), {'e-domination', 'collapse-canon'}),
])
def test_operator_lemmas(left, right, rules):
    result = prove_le(left, right)
    assert result.verdict is Verdict.LE
    used = {step.rule for step in result.trace.steps}
    assert rules <= used
    assert result.trace.steps[-1].rule == 'order'
    assert replay(result.trace)


def test_reflexivity():
    for t in terms_up_to_norm(3):
        result = prove_le(t, t)
        assert result.proved
        assert [step.rule for step in result.trace.steps] == ['reflexivity']
        assert replay(result.trace)


def test_unknown_is_returned_without_trace():
    result = prove_le(Canon(ONE), Canon(ZERO))
    assert result.verdict is Verdict.UNKNOWN
    assert result.trace is None
    assert not prove_le(VeblenApp(Canon(ONE), Canon(ZERO)), Canon(OMEGA)).proved


def test_right_side_uses_equalities_only():
    assert not prove_le(Canon(collapse(ONE, ZERO)), E_ZERO).proved
    assert prove_le(Canon(nat(2)), Apply(SUC_SYM, Canon(ONE))).proved


def test_veblen_zero_is_omega_power():
    assert reduce_exact(VeblenApp(Canon(ZERO), Canon(ONE))) == SMALL_OMEGA
    assert reduce_exact(E_ZERO) is None
    assert reduce_exact(ExtSum((Apply(SUC_SYM, Canon(ZERO)), Canon(ONE)))) == nat(2)


def test_replay_rejects_tampered_traces():
    trace = prove_le(COMPOSED, Canon(collapse(nat(3), ZERO))).trace
    with pytest.raises(TraceError):
        replay(ProofTrace(trace.lhs, trace.rhs, ()))
    with pytest.raises(TraceError):
        replay(replace(trace, steps=(replace(trace.steps[0], rule='magic'),) + trace.steps[1:]))
    with pytest.raises(TraceError):
        replay(replace(trace, steps=(replace(trace.steps[0], rule='iterate-zero'),) + trace.steps[1:]))
    with pytest.raises(TraceError):
        replay(replace(trace, rhs=Canon(ZERO)))
    with pytest.raises(TraceError):
        replay(replace(trace, steps=trace.steps[:-1]))


def test_every_rule_has_a_fact():
    for name, rule in RULES.items():
        assert rule.name == name
        assert rule.relation in ('≤', '=')
        assert rule.fact


def test_soundness_on_bounded_expressions():
    targets = [t for t in terms_up_to_norm(2) if is_below_omega(t)]
    for s in ext_terms(2, 1):
        exact = reduce_exact(s)
        for t in targets:
            forward = prove_le(s, Canon(t))
            if forward.proved:
                assert replay(forward.trace)
                if exact is not None:
                    assert le(exact, t)
            backward = prove_le(Canon(t), s)
            if backward.proved:
                assert replay(backward.trace)
                if exact is not None:
                    assert le(t, exact)


def check_sound(s, t, exact):
    for lhs, rhs in ((s, Canon(t)), (Canon(t), s)):
        result = prove_le(lhs, rhs)
        if not result.proved:
            continue
        assert replay(result.trace)
        if exact is not None:
            assert le(exact, t) if lhs is s else le(t, exact)


def test_soundness_on_sampled_depth_three_expressions():
    expressions = random.Random(0).sample(ext_terms(3, 3), 3000)
    targets = [t for t in terms_up_to_norm(3) if is_below_omega(t)]
    for s in expressions:
        exact = reduce_exact(s)
        for t in targets:
            check_sound(s, t, exact)


def test_ext_norm():
    assert ext_norm(E_ZERO) == 1
    assert ext_norm(COMPOSED) == 4
    assert ext_norm(SHIFTED) == 4
    assert ext_norm(VeblenApp(Canon(ZERO), Canon(ONE))) == 2


def test_ext_coefficients():
    assert ext_coefficients(E_ZERO) == (E_ZERO,)
    veblen = VeblenApp(Canon(ONE), Canon(ZERO))
    assert ext_coefficients(veblen) == (veblen,)
    assert tuple(ext_coefficients(Canon(nat(2)))) == (nat(2),)


def test_arguments_must_be_below_omega():
    with pytest.raises(MalformedTerm):
        Apply(SUC_SYM, Canon(OMEGA))
    with pytest.raises(MalformedTerm):
        VeblenApp(Canon(OMEGA), Canon(ZERO))
    with pytest.raises(MalformedTerm):
        Shift(SUC_SYM, (OMEGA,))
    with pytest.raises(MalformedTerm):
        ExtSum((Canon(ONE),))
