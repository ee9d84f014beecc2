"""
Exact scalars for the engine

Rationals are ``fractions.Fraction``. Scalars are elements of the
rational-function field Q(theta, d, r), backed by sympy's sparse
``FracField`` over QQ with graded-lex order theta > d > r. Every value is
immutable; all functions here are pure.

Normal form of a Scalar: numerator and denominator coprime, denominator
divided by its leading coefficient (so it is monic under grlex).
"""
import logging
import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from sympy import QQ, Poly, symbols
from sympy.parsing.sympy_parser import parse_expr, standard_transformations
from sympy.polys.fields import FracElement
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from app.exceptions import (
    DivisionByZeroError,
    EvaluationError,
    ParameterError,
    ScalarParseError,
)

logger = logging.getLogger(__name__)

VARIABLE_NAMES = ("theta", "d", "r")
THETA_SYMBOL, D_SYMBOL, R_SYMBOL = symbols(" ".join(VARIABLE_NAMES))

FIELD_DOMAIN = QQ.frac_field(THETA_SYMBOL, D_SYMBOL, R_SYMBOL, order=grlex)
FIELD = FIELD_DOMAIN.field
RING = FIELD.ring
THETA, D, R = FIELD.gens

Scalar = FracElement
Polynomial = PolyElement
Rational = Fraction
RationalLike = Union[int, Fraction, str]

_PARSE_NAMES = {"theta": THETA_SYMBOL, "d": D_SYMBOL, "r": R_SYMBOL}
_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


# ---------------------------------------------------------------------------
# Conversions between Fraction and sympy's QQ elements
# ---------------------------------------------------------------------------

def to_qq(value: RationalLike):
    """Convert an int/Fraction (or "num/den" string) to a QQ domain element"""
    value = parse_rational(value) if isinstance(value, str) else Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    """Convert a QQ domain element (PythonMPQ or gmpy mpq) to a Fraction"""
    return Fraction(int(value.numerator), int(value.denominator))


def as_scalar(value) -> Scalar:
    """Lift an int, Fraction or QQ element into Q(theta, d, r)"""
    if isinstance(value, FracElement):
        return value
    if isinstance(value, (int, Fraction)):
        return FIELD(to_qq(value))
    return FIELD(value)


# ---------------------------------------------------------------------------
# Field operations
# ---------------------------------------------------------------------------

def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def subtract(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def multiply(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def negate(a: Scalar) -> Scalar:
    return -a


def divide(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient; raises DivisionByZeroError for a zero divisor"""
    if not b:
        raise DivisionByZeroError("division by the zero scalar")
    return a / b


def invert(a: Scalar) -> Scalar:
    if not a:
        raise DivisionByZeroError("inverse of the zero scalar")
    return FIELD.one / a


def normal_form(s: Scalar) -> Tuple[Polynomial, Polynomial]:
    """Return (numerator, denominator) with the denominator monic under grlex"""
    numer, denom = s.numer, s.denom
    lc = denom.LC
    return numer.quo_ground(lc), denom.quo_ground(lc)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) = 0"""
    if not a and not b:
        return RING.zero
    return a.gcd(b).monic()


# ---------------------------------------------------------------------------
# Specialization
# ---------------------------------------------------------------------------

def specialize(
    s: Scalar,
    theta: Optional[RationalLike] = None,
    d: Optional[RationalLike] = None,
    r: Optional[RationalLike] = None,
) -> Fraction:
    """
    Evaluate a scalar at a rational point

    Args:
        s: Scalar to evaluate
        theta, d, r: Rational values; a variable may be omitted only if
            ``s`` does not depend on it

    Returns:
        The exact rational value

    Raises:
        ParameterError: theta = 0, or a needed value is missing
        EvaluationError: the denominator vanishes at the point
    """
    s = as_scalar(s)
    values = [None if v is None else (parse_rational(v) if isinstance(v, str) else Fraction(v))
              for v in (theta, d, r)]
    if values[0] is not None and values[0] == 0:
        raise ParameterError("theta must be nonzero")

    point = []
    for index, (name, value) in enumerate(zip(VARIABLE_NAMES, values)):
        if value is None:
            if s.numer.degree(index) > 0 or s.denom.degree(index) > 0:
                raise ParameterError(f"no value given for {name}")
            value = Fraction(0)
        point.append(to_qq(value))

    denom_value = s.denom(*point)
    if not denom_value:
        assignment = ", ".join(f"{n}={format_rational(v)}" for n, v in zip(VARIABLE_NAMES, values) if v is not None)
        _, factors = s.denom.factor_list()
        vanishing = [format_polynomial(f.monic()) for f, _ in factors if not f(*point)]
        raise EvaluationError(
            f"denominator factor ({'), ('.join(vanishing)}) vanishes at {assignment}"
        )
    return from_qq(s.numer(*point)) / from_qq(denom_value)


def rational_roots_in(poly: Polynomial, variable: str = "d") -> List[Fraction]:
    """
    Rational values of ``variable`` at which ``poly`` vanishes identically
    in the remaining variables.

    The polynomial is split into slices (coefficients of each monomial in
    the other variables); the rational roots of the gcd of the slices are
    extracted over QQ.
    """
    if not poly:
        return []
    index = VARIABLE_NAMES.index(variable)

    slices: Dict[Tuple[int, ...], Dict[int, object]] = {}
    for monom, coeff in poly.terms():
        key = monom[:index] + monom[index + 1:]
        slices.setdefault(key, {})[monom[index]] = coeff

    uni_ring, _ = ring(variable, QQ)
    common = uni_ring.zero
    for terms in slices.values():
        piece = uni_ring.from_dict({(e,): c for e, c in terms.items()})
        common = piece if not common else common.gcd(piece)

    if common.degree() < 1:
        return []
    roots = Poly(common.as_expr(), uni_ring.symbols[0]).ground_roots()
    return sorted(Fraction(int(root.p), int(root.q)) for root in roots)


# ---------------------------------------------------------------------------
# Text serialization
# ---------------------------------------------------------------------------

def format_rational(value) -> str:
    """"num/den" with the denominator omitted when it is 1"""
    if not isinstance(value, (int, Fraction)):
        value = from_qq(value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or an integer; decimals and exponents are rejected"""
    match = _RATIONAL_PATTERN.match(text) if isinstance(text, str) else None
    if match is None or (match.group(2) is not None and int(match.group(2)) == 0):
        raise ScalarParseError(f"unparsable rational: {text!r}")
    return Fraction(int(match.group(1)), int(match.group(2) or 1))


def format_polynomial(poly: Polynomial) -> str:
    """"+"-joined terms "coef*theta^a*d^b*r^c" in grlex order (zero is "0")"""
    if not poly:
        return "0"
    parts = []
    for monom, coeff in poly.terms():
        factors = [format_rational(coeff)]
        for name, exponent in zip(VARIABLE_NAMES, monom):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        parts.append("*".join(factors))
    return "+".join(parts)


def format_scalar(s: Scalar) -> str:
    numer, denom = normal_form(as_scalar(s))
    return f"({format_polynomial(numer)})/({format_polynomial(denom)})"


def parse_scalar(text: str) -> Scalar:
    """Parse the format_scalar grammar; "θ" and "theta" are both accepted"""
    cleaned = text.replace("θ", "theta").replace("^", "**").strip()
    if not cleaned:
        raise ScalarParseError("empty scalar string")
    try:
        expr = parse_expr(cleaned, local_dict=dict(_PARSE_NAMES),
                          transformations=standard_transformations)
        return FIELD_DOMAIN.from_sympy(expr)
    except Exception as e:
        raise ScalarParseError(f"unparsable scalar: {text!r}") from e


def format_value(value) -> str:
    """Format either a Scalar or a rational (Fraction, int or QQ element)"""
    if isinstance(value, FracElement):
        return format_scalar(value)
    return format_rational(value)
