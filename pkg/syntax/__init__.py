"""
Текстовый синтаксис и JSON-документы термов
"""
from .parser import ParseError, parse, parse_canonical, tokenize
from .printer import render, to_surface
from .json_codec import VERSION, dumps, loads, term_doc, term_of


__all__ = [
    'ParseError', 'parse', 'parse_canonical', 'tokenize',
    'to_surface', 'render',
    'VERSION', 'dumps', 'loads', 'term_doc', 'term_of',
]
