"""
Расширенный слой выражений, вывод неравенств и перевод в систему обозначений
"""
from .expressions import (
    E_SYM, SUC_SYM, Apply, Canon, ESym, ExtSum, ExtTerm, FunExpr, Iterate, Shift, SucSym, VeblenApp,
    contains_veblen, ext_coefficients, ext_norm, ext_terms, lift,
)
from .rules import RULES, ProofStep, ProofTrace, TraceError, replay
from .prover import ProofResult, Verdict, prove_le, reduce_exact
from .translate import TranslationError, VeblenPresent, dominant_oto, dominating_sum

__all__ = [
    'E_SYM', 'SUC_SYM', 'Apply', 'Canon', 'ESym', 'ExtSum', 'ExtTerm', 'FunExpr', 'Iterate', 'Shift',
    'SucSym', 'VeblenApp', 'contains_veblen', 'ext_coefficients', 'ext_norm', 'ext_terms', 'lift',
    'RULES', 'ProofStep', 'ProofTrace', 'TraceError', 'replay',
    'ProofResult', 'Verdict', 'prove_le', 'reduce_exact',
    'TranslationError', 'VeblenPresent', 'dominant_oto', 'dominating_sum',
]
