"""Exact shuffle and quasi-shuffle algebras, PBW-Lyndon bases, Sym and QSym."""

from fractions import Fraction

from . import _core

__all__ = [
    "lyndon_words",
    "is_lyndon",
    "lyndon_factorization",
    "product",
    "pairing",
    "pi1",
    "basis_element",
    "parse_polynomial",
    "format_polynomial",
    "convert",
    "pair_sym_qsym",
    "verify_factorization",
    "hall_littlewood_check",
    "verify",
]

lyndon_words = _core.lyndon_words
is_lyndon = _core.is_lyndon
lyndon_factorization = _core.lyndon_factorization
convert = _core.convert
verify_factorization = _core.verify_factorization
hall_littlewood_check = _core.hall_littlewood_check
verify = _core.verify


def _to_dict(terms):
    return {tuple(w): Fraction(c) for w, c in terms}


def _to_terms(p):
    if isinstance(p, str):
        return _core.parse_polynomial(p)
    return [(list(w), f"{Fraction(c).numerator}/{Fraction(c).denominator}") for w, c in p.items()]


def parse_polynomial(text):
    """Parse "1 + 2·[1 1] + 1/2·[2]" into {word tuple: Fraction}."""
    return _to_dict(_core.parse_polynomial(text))


def format_polynomial(p):
    return _core.format_polynomial(_to_terms(p))


def product(a, b, kind="shuffle"):
    """kind is "concat", "shuffle" or "stuffle"; operands are dicts or text."""
    return _to_dict(_core.product(_to_terms(a), _to_terms(b), kind))


def pairing(a, b):
    return Fraction(_core.pairing(_to_terms(a), _to_terms(b)))


def pi1(p):
    return _to_dict(_core.pi1(_to_terms(p)))


def basis_element(family, word):
    return _to_dict(_core.basis_element(family, list(word)))


def pair_sym_qsym(sym, qsym):
    return Fraction(_core.pair_sym_qsym(sym, qsym))
