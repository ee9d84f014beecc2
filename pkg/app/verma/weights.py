"""
Weight spaces V_{d-p, r-q} of the Verma module
"""
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from app.algebra import Generator, weight_shift
from app.exceptions import ParameterError
from app.verma.monomials import ModuleElement, Monomial


@dataclass(frozen=True, order=True)
class WeightLabel:
    """Grading pair: p = h+l+m >= 0, q = k+l-m"""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ParameterError(f"weight label needs p >= 0, got p={self.p}")

    def eigenvalues(self, params) -> Tuple[Any, Any]:
        """(D, J) eigenvalues (d-p, r-q) at a parameter point"""
        return params.d - self.p, params.r - self.q

    def shifted(self, x: Generator) -> Optional["WeightLabel"]:
        """Weight of x applied to this space, or None when it falls below p = 0"""
        dp, dq = weight_shift(x)
        if self.p + dp < 0:
            return None
        return WeightLabel(self.p + dp, self.q + dq)

    def to_json(self):
        return {'p': self.p, 'q': self.q}


def weight_of(mono: Monomial) -> WeightLabel:
    h, k, l, m = mono
    return WeightLabel(h + l + m, k + l - m)


def enumerate_basis(w: WeightLabel) -> List[Monomial]:
    """
    Basis of the (p, q) weight space ordered by (l, m) ascending.

    Members are |p-l-m, q-l+m, l, m> with both h and k non-negative.
    """
    basis = []
    for l in range(w.p + 1):
        for m in range(w.p - l + 1):
            k = w.q - l + m
            if k >= 0:
                basis.append(Monomial(w.p - l - m, k, l, m))
    return basis


def dimension(w: WeightLabel) -> int:
    return len(enumerate_basis(w))


def coordinates(v: ModuleElement, basis: Sequence[Monomial], zero) -> List[Any]:
    """Coefficients of v in an ordered weight basis; v must live in that space"""
    index = {mono: i for i, mono in enumerate(basis)}
    row = [zero] * len(basis)
    for mono, c in v.items():
        if mono not in index:
            raise ValueError(f"monomial {tuple(mono)} is outside the given weight basis")
        row[index[mono]] = c
    return row


def from_coordinates(row: Sequence[Any], basis: Sequence[Monomial]) -> ModuleElement:
    return ModuleElement(dict(zip(basis, row)))
