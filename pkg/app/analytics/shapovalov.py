"""
Contravariant (Shapovalov) form on V^{d,r}

(A|d,r>, B|d,r>) = (|d,r>, omega(A) B |d,r>) with <d,r|d,r> = 1. A basis
monomial C^h K-^k F-^l F+^m maps under omega to the reversed word
P-^m P+^l K+^k H^h; acting with it and reading the highest-weight
coefficient gives the pairing.
"""
import logging
from dataclasses import dataclass
from typing import Any, List, Optional

from app.algebra import Generator, omega
from app.exceptions import ParameterError
from app.field import format_value, rational_roots_in
from app.verma import (
    HIGHEST_WEIGHT,
    ModuleElement,
    Monomial,
    ParameterPoint,
    VermaModule,
    WeightLabel,
    coordinates,
    enumerate_basis,
)
from app.analytics.linalg import determinant, mat_vec, rank

logger = logging.getLogger(__name__)


@dataclass
class GramMatrix:
    weight: WeightLabel
    basis: List[Monomial]
    entries: List[List[Any]]

    @property
    def size(self) -> int:
        return len(self.basis)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i + 1, n))

    def to_json(self) -> List[List[str]]:
        return [[format_value(c) for c in row] for row in self.entries]


def omega_word(mono: Monomial) -> List[Generator]:
    """omega applied to the ordered product of mono: images of the factors, reversed"""
    return [omega(x) for x in reversed(mono.word())]


def pair(module: VermaModule, u: ModuleElement, v: ModuleElement) -> Any:
    """Bilinear pairing (u, v); zero across different weights"""
    zero = module.params.zero
    total = zero
    for mono, cu in u.items():
        image = module.act_word(omega_word(mono), v)
        c = image.coefficient(HIGHEST_WEIGHT, zero)
        if c:
            total = total + cu * c
    return total


def gram(w: WeightLabel, params: ParameterPoint, module: Optional[VermaModule] = None) -> GramMatrix:
    """Gram matrix over enumerate_basis(w)"""
    module = module or VermaModule(params)
    basis = enumerate_basis(w)
    vectors = [module.basis_vector(mono) for mono in basis]
    entries = [[pair(module, bi, bj) for bj in vectors] for bi in vectors]
    return GramMatrix(w, basis, entries)


def gram_det(w: WeightLabel, params: ParameterPoint, module: Optional[VermaModule] = None) -> Any:
    g = gram(w, params, module)
    det = determinant(g.entries, params.domain)
    logger.info(f"Gram determinant at p={w.p} q={w.q} over a {g.size}x{g.size} matrix")
    return det


def gram_det_roots(w: WeightLabel, params: ParameterPoint, module: Optional[VermaModule] = None):
    """
    Rational d at which the Gram determinant vanishes.

    Needs d symbolic (generic or generic_d point).
    """
    if params.is_specialized:
        raise ParameterError("gram_det_roots needs a symbolic d (generic or generic_d point)")
    det = gram_det(w, params, module)
    return det, rational_roots_in(det.numer, "d")


def radical_contains(w: WeightLabel, v: ModuleElement, params: ParameterPoint,
                     module: Optional[VermaModule] = None) -> bool:
    """Whether the coordinate vector of v (a vector of weight w) is in the Gram nullspace"""
    g = gram(w, params, module)
    coords = coordinates(v, g.basis, params.zero)
    return not any(mat_vec(g.entries, coords, params.domain))


def is_nondegenerate(w: WeightLabel, params: ParameterPoint, module: Optional[VermaModule] = None) -> bool:
    g = gram(w, params, module)
    return rank(g.entries, g.size, params.domain) == g.size


def contravariance_defect(module: VermaModule, x: Generator, u: ModuleElement, v: ModuleElement) -> Any:
    """(x u, v) - (u, omega(x) v); zero for a contravariant form"""
    return pair(module, module.act(x, u), v) - pair(module, u, module.act(omega(x), v))
