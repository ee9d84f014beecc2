"""
The submodule I^d generated by the singular vector, the quotient V^{d,r}/I^d
and the irreducibility verdict

When p0 = 2d + 3 is a positive integer, v_s = (2 theta C - K- F+)^p0 |d,r>
is singular and I^d = U(g-) v_s. Its weight slices are spanned by all
lowering monomials of complementary weight applied to v_s; the quotient is
checked level by level for singular vectors up to a truncation.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from app.algebra import LOWERING, Generator
from app.config import settings
from app.exceptions import ParameterError
from app.field import format_rational
from app.verma import (
    ModuleElement,
    Monomial,
    ParameterPoint,
    VermaModule,
    WeightLabel,
    coordinates,
    enumerate_basis,
    from_coordinates,
)
from app.analytics.linalg import in_span, nullspace, rank, row_reduce
from app.analytics.singular import ANNIHILATORS

logger = logging.getLogger(__name__)

G = Generator


class Branch(str, Enum):
    verma_irreducible = "verma_irreducible"
    quotient_irreducible = "quotient_irreducible"


P0_CONVENTION = "p0 = 2d+3 must be >= 1; p0 = 0 (d = -3/2) is treated as verma_irreducible"


def singular_level(d) -> Optional[int]:
    """p0 = 2d + 3 when it is a positive integer, else None"""
    p0 = 2 * Fraction(d) + 3
    if p0.denominator == 1 and p0 >= 1:
        return int(p0)
    return None


@dataclass
class ClassificationVerdict:
    d: Fraction
    r: Fraction
    theta: Fraction
    branch: Branch
    p0: Optional[int] = None
    convention: str = P0_CONVENTION

    @property
    def p0_zero_excluded(self) -> bool:
        return 2 * self.d + 3 == 0

    def to_json(self) -> Dict[str, Any]:
        return {
            'd': format_rational(self.d),
            'r': format_rational(self.r),
            'theta': format_rational(self.theta),
            'branch': self.branch.value,
            'p0': self.p0,
            'convention': self.convention,
            'p0_zero_excluded': self.p0_zero_excluded,
        }


def classify(d, r, theta) -> ClassificationVerdict:
    d, r, theta = Fraction(d), Fraction(r), Fraction(theta)
    if theta == 0:
        raise ParameterError("theta must be nonzero")
    p0 = singular_level(d)
    branch = Branch.quotient_irreducible if p0 is not None else Branch.verma_irreducible
    return ClassificationVerdict(d, r, theta, branch, p0)


@dataclass
class SubmoduleSlice:
    """I^d intersected with one weight space, in coordinates over enumerate_basis"""

    weight: WeightLabel
    basis: List[Monomial]
    spanning_vectors: List[ModuleElement]
    reduced_basis: List[List[Any]]

    @property
    def dimension(self) -> int:
        return len(self.reduced_basis)

    def contains(self, v: ModuleElement, domain) -> bool:
        if v.is_zero():
            return True
        try:
            coords = coordinates(v, self.basis, domain.zero)
        except ValueError:
            return False
        return in_span(coords, self.reduced_basis, len(self.basis), domain)


@dataclass
class LevelRow:
    p: int
    q: int
    verma_dim: int
    submodule_dim: int
    quotient_dim: int
    singular_dim: int
    witness: Optional[ModuleElement] = field(default=None, repr=False)

    def to_json(self) -> Dict[str, Any]:
        out = {
            'p': self.p, 'q': self.q,
            'verma_dim': self.verma_dim,
            'submodule_dim': self.submodule_dim,
            'quotient_dim': self.quotient_dim,
            'singular_dim': self.singular_dim,
        }
        if self.witness is not None:
            out['witness'] = self.witness.to_json()
        return out


@dataclass
class QuotientCheckReport:
    d: Fraction
    r: Fraction
    theta: Fraction
    p0: int
    pmax: int
    qmax: int
    levels: List[LevelRow]
    hw_power_dependent: bool

    @property
    def failures(self) -> List[LevelRow]:
        return [row for row in self.levels if row.singular_dim]

    @property
    def additive(self) -> bool:
        return all(row.verma_dim == row.submodule_dim + row.quotient_dim for row in self.levels)

    @property
    def passed(self) -> bool:
        return not self.failures and self.additive


class QuotientModule:
    """V^{d,r} / I^d at a specialized point with p0 = 2d + 3 >= 1"""

    def __init__(self, d, r, theta, module: Optional[VermaModule] = None):
        self.d, self.r, self.theta = Fraction(d), Fraction(r), Fraction(theta)
        p0 = singular_level(self.d)
        if p0 is None:
            raise ParameterError(f"2d+3 = {format_rational(2 * self.d + 3)} is not a positive integer")
        self.p0 = p0
        self.params = ParameterPoint.specialized(self.theta, self.d, self.r)
        self.module = module or VermaModule(self.params)
        self.singular_vector = self.module.closed_form_power(p0)
        self._slices: Dict[WeightLabel, SubmoduleSlice] = {}

    @property
    def domain(self):
        return self.params.domain

    def slice(self, w: WeightLabel) -> SubmoduleSlice:
        cached = self._slices.get(w)
        if cached is not None:
            return cached
        basis = enumerate_basis(w)
        spanning: List[ModuleElement] = []
        if w.p >= self.p0:
            for word_mono in enumerate_basis(WeightLabel(w.p - self.p0, w.q)):
                v = self.module.act_word(word_mono.word(), self.singular_vector)
                if not v.is_zero():
                    spanning.append(v)
        rows = [coordinates(v, basis, self.params.zero) for v in spanning]
        reduced, _ = row_reduce(rows, len(basis), self.domain)
        result = SubmoduleSlice(w, basis, spanning, reduced)
        self._slices[w] = result
        return result

    def quotient_basis(self, w: WeightLabel) -> List[Monomial]:
        """Greedy in (l, m) order: keep a monomial iff it is independent of the slice and earlier picks"""
        s = self.slice(w)
        n = len(s.basis)
        rows = list(s.reduced_basis)
        current = len(rows)
        picked = []
        for i, mono in enumerate(s.basis):
            unit = [self.params.zero] * n
            unit[i] = self.params.one
            grown = rank(rows + [unit], n, self.domain)
            if grown > current:
                rows.append(unit)
                current = grown
                picked.append(mono)
        return picked

    def singular_solutions(self, w: WeightLabel) -> List[ModuleElement]:
        """
        Classes in the quotient at w killed by H, P+, P-, K+ modulo I^d.

        Unknowns are the coefficients c over quotient_basis(w) followed, per
        raising generator, by the coefficients s of a slice vector at the
        target weight; each block says sum c_i x.e_i = sum s_j slice_j.
        Returns the distinct c-projections of the nullspace.
        """
        reps = self.quotient_basis(w)
        if not reps:
            return []
        zero = self.params.zero
        blocks: List[Tuple[List[List[Any]], List[List[Any]]]] = []
        for x in ANNIHILATORS:
            target = w.shifted(x)
            if target is None:
                continue
            target_basis = enumerate_basis(target)
            images = [coordinates(self.module.act(x, self.module.basis_vector(e)), target_basis, zero) for e in reps]
            image_rows = [[images[j][i] for j in range(len(reps))] for i in range(len(target_basis))]
            slice_rows = self.slice(target).reduced_basis
            negated = [[-slice_rows[j][i] for j in range(len(slice_rows))] for i in range(len(target_basis))]
            blocks.append((image_rows, negated))

        extra = sum(len(neg[0]) if neg else 0 for _, neg in blocks)
        ncols = len(reps) + extra
        rows: List[List[Any]] = []
        offset = len(reps)
        for image_rows, negated in blocks:
            width = len(negated[0]) if negated else 0
            for i, image_row in enumerate(image_rows):
                row = list(image_row) + [zero] * extra
                for j in range(width):
                    row[offset + j] = negated[i][j]
                rows.append(row)
            offset += width

        kernel = nullspace(rows, ncols, self.domain)
        projected = [vec[:len(reps)] for vec in kernel]
        independent, _ = row_reduce(projected, len(reps), self.domain)
        return [from_coordinates(vec, reps) for vec in independent]

    def level(self, w: WeightLabel) -> LevelRow:
        s = self.slice(w)
        reps = self.quotient_basis(w)
        solutions = self.singular_solutions(w)
        row = LevelRow(w.p, w.q, len(s.basis), s.dimension, len(reps), len(solutions),
                       solutions[0] if solutions else None)
        if solutions:
            logger.error(f"Quotient singular vector at p={w.p} q={w.q} for d={format_rational(self.d)}")
        return row

    def level_table(self, pmax: int, qmax: int, threads: Optional[int] = None) -> List[LevelRow]:
        weights = [WeightLabel(p, q) for p in range(1, pmax + 1) for q in range(-qmax, qmax + 1)]
        threads = threads or settings.threads
        logger.info(f"Quotient scan for d={format_rational(self.d)} (p0={self.p0}): {len(weights)} weights")
        # slices of lower levels are reused by higher ones; fill them first
        for w in weights:
            self.slice(w)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(self.level, weights))
        return sorted(rows, key=lambda row: (row.p, row.q))

    def hw_power_dependent(self) -> bool:
        """|p0,0,0,0> lies in the slice at (p0, 0) plus the other basis monomials there"""
        w = WeightLabel(self.p0, 0)
        s = self.slice(w)
        n = len(s.basis)
        target = Monomial(self.p0, 0, 0, 0)
        others = []
        for i, mono in enumerate(s.basis):
            if mono != target:
                unit = [self.params.zero] * n
                unit[i] = self.params.one
                others.append(unit)
        hw_power = [self.params.one if mono == target else self.params.zero for mono in s.basis]
        return in_span(hw_power, list(s.reduced_basis) + others, n, self.domain)

    def invariance_violations(self, w: WeightLabel, generators=None) -> List[Dict[str, Any]]:
        """Generators that move a spanning vector of slice(w) outside the slice at the shifted weight"""
        generators = generators or list(LOWERING) + list(ANNIHILATORS)
        bad = []
        s = self.slice(w)
        for x in generators:
            target = w.shifted(x)
            for i, v in enumerate(s.spanning_vectors):
                image = self.module.act(x, v)
                if image.is_zero():
                    continue
                if target is None or not self.slice(target).contains(image, self.domain):
                    bad.append({'generator': x.value, 'weight': w.to_json(), 'spanning_index': i})
        return bad


def submodule_slice(w: WeightLabel, d, r=0, theta=1) -> SubmoduleSlice:
    return QuotientModule(d, r, theta).slice(w)


def quotient_basis(w: WeightLabel, d, r=0, theta=1) -> List[Monomial]:
    return QuotientModule(d, r, theta).quotient_basis(w)


def level_table(d, r, theta, pmax: int, qmax: int) -> List[LevelRow]:
    return QuotientModule(d, r, theta).level_table(pmax, qmax)


def quotient_singular_check(d, r, theta, pmax: int, qmax: Optional[int] = None) -> QuotientCheckReport:
    """Scan 1 <= p <= pmax, |q| <= qmax for singular vectors of the quotient"""
    qmax = settings.default_qmax if qmax is None else qmax
    quotient = QuotientModule(d, r, theta)
    levels = quotient.level_table(pmax, qmax)
    report = QuotientCheckReport(
        quotient.d, quotient.r, quotient.theta, quotient.p0, pmax, qmax,
        levels, quotient.hw_power_dependent(),
    )
    if report.passed:
        logger.info(f"Quotient at d={format_rational(quotient.d)} has no singular vectors up to p={pmax}")
    return report
