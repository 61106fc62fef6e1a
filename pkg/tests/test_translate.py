import pytest

from ordinals import (
    ONE, OMEGA, ZERO, collapse, is_canonical, le, nat, natural_sum, norm, omega_mono, terms_up_to_norm,
)
from prover import (
    E_SYM, SUC_SYM, Apply, Canon, Iterate, VeblenApp, VeblenPresent, dominant_oto, dominating_sum, ext_norm,
    ext_terms, prove_le,
)


def test_dominant_terms():
    assert dominant_oto(Apply(E_SYM, Canon(ZERO))) == collapse(ONE, ZERO)
    assert dominant_oto(Apply(Iterate(Iterate(SUC_SYM, ONE), nat(2)), Canon(ZERO))) == collapse(nat(3), ZERO)
    for t in terms_up_to_norm(3):
        assert dominant_oto(Canon(t)) == t
        assert dominant_oto(t) == t


def test_veblen_is_rejected():
    with pytest.raises(VeblenPresent):
        dominant_oto(VeblenApp(Canon(ZERO), Canon(ONE)))
    with pytest.raises(VeblenPresent):
        dominant_oto(Apply(SUC_SYM, VeblenApp(Canon(ZERO), Canon(ZERO))))


def test_translation_dominates_and_keeps_norm():
    for s in ext_terms(2, 2):
        alpha = dominant_oto(s)
        assert is_canonical(alpha)
        assert prove_le(s, Canon(alpha)).proved
        assert ext_norm(s) <= norm(alpha)


def test_dominating_sum():
    terms = terms_up_to_norm(3)
    for a in terms:
        for b in terms:
            total = dominating_sum(a, b)
            assert is_canonical(total)
            assert norm(total) >= norm(a) + norm(b)
            assert le(natural_sum(a, b), total)
    assert dominating_sum(OMEGA, OMEGA) == omega_mono(ONE, nat(2))
