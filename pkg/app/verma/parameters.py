"""
Parameter points (theta, d, r) and the coefficient domain they live in
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from sympy import QQ

from app.exceptions import ParameterError
from app.field import D, FIELD, FIELD_DOMAIN, R, THETA, as_scalar, format_rational, format_value, to_qq


class ParameterMode(str, Enum):
    generic = "generic"          # theta, d, r all symbolic
    generic_d = "generic_d"      # theta, r rational, d symbolic
    specialized = "specialized"  # theta, d, r rational


@dataclass(frozen=True)
class ParameterPoint:
    """
    Highest-weight data (theta, d, r) together with the exact domain the
    module coefficients are computed in: Q(theta, d, r) in the generic
    modes, QQ when specialized.
    """

    mode: ParameterMode
    domain: Any
    theta: Any
    d: Any
    r: Any
    zero: Any
    one: Any
    rational: Dict[str, Fraction] = field(default_factory=dict)

    @classmethod
    def generic(cls) -> "ParameterPoint":
        return cls(ParameterMode.generic, FIELD_DOMAIN, THETA, D, R, FIELD.zero, FIELD.one)

    @classmethod
    def generic_d(cls, theta, r) -> "ParameterPoint":
        theta, r = _nonzero_theta(theta), Fraction(r)
        return cls(
            ParameterMode.generic_d, FIELD_DOMAIN,
            as_scalar(theta), D, as_scalar(r), FIELD.zero, FIELD.one,
            {'theta': theta, 'r': r},
        )

    @classmethod
    def specialized(cls, theta, d, r) -> "ParameterPoint":
        theta, d, r = _nonzero_theta(theta), Fraction(d), Fraction(r)
        return cls(
            ParameterMode.specialized, QQ,
            to_qq(theta), to_qq(d), to_qq(r), QQ.zero, QQ.one,
            {'theta': theta, 'd': d, 'r': r},
        )

    @property
    def is_specialized(self) -> bool:
        return self.mode == ParameterMode.specialized

    @property
    def rational_d(self) -> Optional[Fraction]:
        return self.rational.get('d')

    def from_rational(self, value) -> Any:
        """Embed an int/Fraction into this point's coefficient domain"""
        if self.is_specialized:
            return to_qq(Fraction(value))
        return as_scalar(Fraction(value))

    def convert(self, value) -> Any:
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        return self.domain.convert(value)

    def describe(self) -> Dict[str, str]:
        out = {'mode': self.mode.value}
        for name in ('theta', 'd', 'r'):
            value = self.rational.get(name)
            out[name] = format_rational(value) if value is not None else format_value(getattr(self, name))
        return out


def _nonzero_theta(theta) -> Fraction:
    theta = Fraction(theta)
    if theta == 0:
        raise ParameterError("theta must be nonzero")
    return theta
