"""
Канонические термы системы обозначений, их порядок и перечисление
"""
from .terms import (
    ONE, OMEGA, SMALL_OMEGA, ZERO, Collapse, MalformedTerm, OmegaMono, OrdTerm, Sum, TermClass, WPow, Zero,
    as_natural, classify, is_below_omega, mono, nat, norm,
)
from .order import CompareResult, add, compare, le, lt, max_term, natural_sum
from .normalize import collapse, is_canonical, normalize, omega_mono, to_raw, w_pow
from .coefficients import CoeffSet, coefficients
from .enumeration import (
    EnumerationBudget, brute_force_terms, cnf_terms_up_to_norm, terms_below, terms_of_norm, terms_up_to_norm,
)

__all__ = [
    'ONE', 'OMEGA', 'SMALL_OMEGA', 'ZERO',
    'Collapse', 'OmegaMono', 'Sum', 'WPow', 'Zero', 'OrdTerm', 'TermClass',
    'MalformedTerm', 'EnumerationBudget',
    'as_natural', 'classify', 'is_below_omega', 'mono', 'nat', 'norm',
    'CompareResult', 'add', 'compare', 'le', 'lt', 'max_term', 'natural_sum',
    'collapse', 'is_canonical', 'normalize', 'omega_mono', 'to_raw', 'w_pow',
    'CoeffSet', 'coefficients',
    'brute_force_terms', 'cnf_terms_up_to_norm', 'terms_below', 'terms_of_norm', 'terms_up_to_norm',
]
