from .fields import DEFAULT_PRIME, GF, QQ, FieldError, PrimeField, RationalField, field_from_spec, is_prime
from .matrix import PolyMatrix
from .orders import BlockElim, ExponentOverflow, GrevLex, Lex, MonomialOrder, monomial_cmp
from .poly import Polynomial
from .ring import Block, PolyRing, RingError


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def partial_derivative(f: Polynomial, v: str) -> Polynomial:
    return f.diff(v)


def substitute(f: Polynomial, bindings, ring=None) -> Polynomial:
    return f.subs(bindings, ring)


__all__ = [
    "Block", "BlockElim", "DEFAULT_PRIME", "ExponentOverflow", "FieldError", "GF", "GrevLex", "Lex",
    "MonomialOrder", "PolyMatrix", "PolyRing", "Polynomial", "PrimeField", "QQ", "RationalField",
    "RingError", "field_from_spec", "is_prime", "monomial_cmp", "partial_derivative", "poly_add",
    "poly_mul", "substitute",
]
