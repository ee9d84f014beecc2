"""
Exact coefficient field Q(theta, d, r)
"""
from .scalars import (
    D,
    FIELD,
    FIELD_DOMAIN,
    R,
    RING,
    THETA,
    Polynomial,
    Rational,
    Scalar,
    add,
    as_scalar,
    divide,
    format_polynomial,
    format_rational,
    format_scalar,
    format_value,
    from_qq,
    invert,
    multiply,
    negate,
    normal_form,
    parse_rational,
    parse_scalar,
    poly_gcd,
    rational_roots_in,
    specialize,
    subtract,
    to_qq,
)

__all__ = [
    'D', 'FIELD', 'FIELD_DOMAIN', 'R', 'RING', 'THETA',
    'Polynomial', 'Rational', 'Scalar',
    'add', 'as_scalar', 'divide', 'format_polynomial', 'format_rational',
    'format_scalar', 'format_value', 'from_qq', 'invert', 'multiply', 'negate',
    'normal_form', 'parse_rational', 'parse_scalar', 'poly_gcd',
    'rational_roots_in', 'specialize', 'subtract', 'to_qq',
]
