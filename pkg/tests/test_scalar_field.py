"""
Tests for exact scalars in Q(theta, d, r)
"""
import random
from fractions import Fraction
from itertools import product

import pytest
from sympy import QQ

from app.exceptions import DivisionByZeroError, EvaluationError, ParameterError, ScalarParseError
from app.field import (
    D,
    FIELD,
    R,
    RING,
    THETA,
    Polynomial,
    Scalar,
    add,
    as_scalar,
    divide,
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


class TestArithmetic:
    """Field operations and normal form"""

    def test_ring_operations_are_exact(self):
        """Test that (d + theta)(d - theta) + theta^2 collapses to d^2"""
        product = multiply(add(D, THETA), subtract(D, THETA))
        assert add(product, THETA * THETA) == D * D
        assert add(negate(R), R) == FIELD.zero

    def test_division_cancels_common_factors(self):
        """Test that (theta*d)/(theta*r) reduces to d/r"""
        assert divide(THETA * D, THETA * R) == D / R

    def test_division_by_zero_raises(self):
        """Test dividing by the zero scalar"""
        with pytest.raises(DivisionByZeroError):
            divide(THETA, FIELD.zero)
        with pytest.raises(ZeroDivisionError):
            invert(FIELD.zero)

    def test_normal_form_has_monic_denominator(self):
        """Test that theta/(2d) is stored as (theta/2)/d"""
        numer, denom = normal_form(THETA / (D * 2))
        assert denom == RING.gens[1]
        assert numer == RING.gens[0].quo_ground(QQ(2))

    def test_gcd_of_polynomials(self):
        """Test monic gcd of theta*d and theta*r"""
        t, d, r = RING.gens
        assert poly_gcd(t * d * 3, t * r * 6) == t
        assert poly_gcd(RING.zero, RING.zero) == RING.zero

    def test_difference_of_squares_cancels(self):
        """Test (theta^2 - d^2)/(theta - d) = theta + d in normal form"""
        quotient = divide(THETA ** 2 - D ** 2, THETA - D)
        assert quotient == THETA + D
        assert normal_form(quotient)[1] == RING.one

    def test_gcd_worked_examples(self):
        """Test gcd((d+1)^2 theta, (d+1) theta^2) = (d+1) theta and gcd(d+1, d+2) = 1"""
        t, d, _ = RING.gens
        assert poly_gcd((d + 1) ** 2 * t, (d + 1) * t ** 2) == (d + 1) * t
        assert poly_gcd(d + 1, d + 2) == RING.one

    def test_rational_sum(self):
        """Test 1/2 + 1/3 = 5/6 as scalars and after specialization"""
        total = add(as_scalar(Fraction(1, 2)), as_scalar(Fraction(1, 3)))
        assert total == as_scalar(Fraction(5, 6))
        assert format_rational(specialize(total)) == "5/6"

    def test_scalar_type_checks(self):
        """Test field elements are recognized as scalars"""
        assert isinstance(THETA, Scalar)
        assert isinstance(THETA.numer, Polynomial)
        assert as_scalar(THETA) is THETA
        assert format_value(THETA / 2) == "(1/2*theta)/(1)"
        assert format_value(Fraction(-1, 2)) == "-1/2"

    def test_rational_lifts_into_field(self):
        """Test Fraction and int lifting"""
        assert as_scalar(Fraction(1, 2)) * 2 == FIELD.one
        assert as_scalar(3) == FIELD.one * 3


class TestSpecialize:
    """Evaluation at rational points"""

    def test_specialize_rational_function(self):
        """Test theta*d/(r+1) at (2, 3, 1)"""
        assert specialize(THETA * D / (R + 1), theta=2, d=3, r=1) == Fraction(3)

    def test_unused_variables_may_be_omitted(self):
        """Test that a scalar free of d and r needs only theta"""
        assert specialize(THETA + 1, theta=Fraction(1, 2)) == Fraction(3, 2)

    def test_missing_needed_variable_raises(self):
        """Test that a missing d is reported"""
        with pytest.raises(ParameterError):
            specialize(D, theta=1)

    def test_theta_zero_rejected(self):
        """Test that theta = 0 is not a valid point"""
        with pytest.raises(ParameterError, match="theta must be nonzero"):
            specialize(D, theta=0, d=1, r=0)

    def test_pole_reports_denominator(self):
        """Test evaluation at a pole names the vanishing factor"""
        with pytest.raises(EvaluationError, match="vanishes"):
            specialize(FIELD.one / (D + 1), theta=1, d=-1, r=0)

    def test_pole_names_only_the_vanishing_factor(self):
        """Test theta is not blamed when d + 1 vanishes"""
        with pytest.raises(EvaluationError) as exc:
            specialize(R / (THETA * (D + 1)), theta=1, d=-1, r=0)
        assert "(1*d+1) vanishes at" in str(exc.value)
        assert "theta*d" not in str(exc.value)


class TestRoots:
    """Rational roots in one variable"""

    def test_roots_of_gram_determinant(self):
        """Test -16 theta^2 (d+1) vanishes identically only at d = -1"""
        det = THETA ** 2 * (D + 1) * -16
        assert rational_roots_in(det.numer, "d") == [Fraction(-1)]

    def test_roots_need_all_slices_to_vanish(self):
        """Test d*theta + (2d+1) has no common root"""
        assert rational_roots_in((THETA * D + D * 2 + 1).numer, "d") == []

    def test_multiple_rational_roots(self):
        """Test (2d+1)(d-3) gives -1/2 and 3"""
        poly = ((D * 2 + 1) * (D - 3)).numer
        assert rational_roots_in(poly, "d") == [Fraction(-1, 2), Fraction(3)]

    def test_constant_has_no_roots(self):
        """Test a non-zero constant"""
        assert rational_roots_in(FIELD.one.numer, "d") == []


class TestSerialization:
    """Text grammar for rationals and scalars"""

    def test_format_rational(self):
        """Test num/den formatting"""
        assert format_rational(Fraction(-3, 2)) == "-3/2"
        assert format_rational(Fraction(4)) == "4"
        assert format_rational(to_qq(Fraction(5, 7))) == "5/7"

    def test_parse_rational(self):
        """Test num/den parsing"""
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational(" 7 ") == Fraction(7)

    def test_parse_rational_rejects_garbage(self):
        """Test that an unparsable rational raises ScalarParseError"""
        with pytest.raises(ScalarParseError, match="unparsable rational"):
            parse_rational("1/x")
        with pytest.raises(ValueError):
            parse_rational("1/0")

    @pytest.mark.parametrize("text", ["1.5", "1e3", "-.5", "1/2/3", ""])
    def test_parse_rational_is_num_den_only(self, text):
        """Test decimals and exponents are outside the grammar"""
        with pytest.raises(ScalarParseError):
            parse_rational(text)

    def test_qq_conversion(self):
        """Test Fraction <-> QQ conversion"""
        assert from_qq(to_qq(Fraction(-2, 9))) == Fraction(-2, 9)

    def test_format_scalar(self):
        """Test the printed form of theta"""
        assert format_scalar(THETA) == "(1*theta)/(1)"
        assert format_scalar(FIELD.zero) == "(0)/(1)"

    @pytest.mark.parametrize("scalar", [
        THETA,
        THETA ** 2 * (D + 1) * -16,
        (THETA * D - R / 3) / (D * 2 + 1),
        FIELD.one / (THETA * -2),
    ])
    def test_scalar_round_trip(self, scalar):
        """Test that a formatted scalar parses back to an equal scalar"""
        assert parse_scalar(format_scalar(scalar)) == scalar

    def test_parse_accepts_greek_theta(self):
        """Test that θ and theta are interchangeable on input"""
        assert parse_scalar("2*θ^2/(d+1)") == THETA ** 2 * 2 / (D + 1)

    def test_parse_scalar_rejects_unknown_symbols(self):
        """Test that an unknown variable is a parse error"""
        with pytest.raises(ScalarParseError):
            parse_scalar("x + 1")


def random_polynomial(rng: random.Random, max_degree: int = 2):
    poly = FIELD.zero
    for a, b, c in product(range(max_degree + 1), repeat=3):
        if a + b + c <= max_degree:
            poly += THETA ** a * D ** b * R ** c * rng.randint(-3, 3)
    return poly


def random_scalar(rng: random.Random):
    denom = FIELD.zero
    while not denom:
        denom = random_polynomial(rng)
    return random_polynomial(rng) / denom


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    value = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return value if value or not nonzero else Fraction(1)


def regular_point(rng: random.Random, *scalars):
    """A random point where none of the scalars has a pole, with their values"""
    while True:
        point = {'theta': random_rational(rng, nonzero=True), 'd': random_rational(rng), 'r': random_rational(rng)}
        try:
            return point, [specialize(s, **point) for s in scalars]
        except EvaluationError:
            continue


SEEDS = range(8)


class TestFieldAxioms:
    """Seeded random checks of the field laws"""

    @pytest.mark.parametrize("seed", SEEDS)
    def test_associativity(self, seed):
        """Test (a+b)+c = a+(b+c) and (ab)c = a(bc)"""
        rng = random.Random(seed)
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert add(add(a, b), c) == add(a, add(b, c))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    @pytest.mark.parametrize("seed", SEEDS)
    def test_distributivity(self, seed):
        """Test a(b+c) = ab + ac"""
        rng = random.Random(seed)
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c))

    @pytest.mark.parametrize("seed", SEEDS)
    def test_inverse(self, seed):
        """Test a * a^-1 = 1 for nonzero a"""
        rng = random.Random(seed)
        a = random_scalar(rng)
        while not a:
            a = random_scalar(rng)
        assert multiply(a, invert(a)) == FIELD.one
        assert divide(a, a) == FIELD.one

    @pytest.mark.parametrize("seed", SEEDS)
    def test_routes_share_one_normal_form(self, seed):
        """Test (a+b)c and ac+bc-0 reach identical (numerator, denominator)"""
        rng = random.Random(seed)
        a, b, c = (random_scalar(rng) for _ in range(3))
        first = multiply(add(a, b), c)
        second = subtract(add(multiply(a, c), multiply(b, c)), FIELD.zero)
        assert normal_form(first) == normal_form(second)
        assert format_scalar(first) == format_scalar(second)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_specialize_is_a_ring_homomorphism(self, seed):
        """Test evaluation commutes with sums, products and negation"""
        rng = random.Random(seed)
        a, b = random_scalar(rng), random_scalar(rng)
        point, (value_a, value_b) = regular_point(rng, a, b)
        assert specialize(add(a, b), **point) == value_a + value_b
        assert specialize(multiply(a, b), **point) == value_a * value_b
        assert specialize(negate(a), **point) == -value_a
        assert specialize(FIELD.one, **point) == 1
