"""
Singular vectors of V^{d,r}

A singular vector in the weight space (p, q) is a non-zero vector killed by
the raising generators H, P+, P-, K+. The solver stacks the matrices of
those four actions and takes an exact nullspace; the remaining functions
are the closed-form coefficient tables it is cross-checked against.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from app.algebra import Generator
from app.config import settings
from app.exceptions import ParameterError
from app.field import format_value
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
from app.analytics.linalg import nullspace

logger = logging.getLogger(__name__)

G = Generator

# Fixed block order of the stacked annihilator matrix
ANNIHILATORS: Tuple[Generator, ...] = (G.H, G.Pplus, G.Pminus, G.Kplus)

LM = Tuple[int, int]


@dataclass
class ActionBlock:
    """Matrix of act(x, .) from V_w into V_{shifted w}; rows follow target_basis"""

    generator: Generator
    target: Optional[WeightLabel]
    target_basis: List[Monomial]
    rows: List[List[Any]]


@dataclass
class AnnihilatorSystem:
    weight: WeightLabel
    domain_basis: List[Monomial]
    blocks: List[ActionBlock]

    @property
    def rows(self) -> List[List[Any]]:
        return [row for block in self.blocks for row in block.rows]

    def block(self, x: Generator) -> ActionBlock:
        for b in self.blocks:
            if b.generator == x:
                return b
        raise KeyError(x)


@dataclass
class SingularVectorCandidate:
    """A nullspace vector with its coefficients a_{l,m} over the weight basis"""

    weight: WeightLabel
    coefficients: Dict[LM, Any]
    vector: ModuleElement = field(repr=False)

    def to_json(self) -> Dict[str, Any]:
        return {
            'weight': self.weight.to_json(),
            'coefficients': [
                {'l': l, 'm': m, 'coef': format_value(c)}
                for (l, m), c in sorted(self.coefficients.items())
            ],
            'vector': self.vector.to_json(),
        }


# ---------------------------------------------------------------------------
# Matrix construction
# ---------------------------------------------------------------------------

def action_block(module: VermaModule, x: Generator, w: WeightLabel,
                 basis: Optional[List[Monomial]] = None) -> ActionBlock:
    basis = enumerate_basis(w) if basis is None else basis
    target = w.shifted(x)
    target_basis = enumerate_basis(target) if target is not None else []
    zero = module.params.zero
    columns = []
    for mono in basis:
        # an empty target basis (below p = 0) rejects any non-zero image
        image = module.act(x, module.basis_vector(mono))
        columns.append(coordinates(image, target_basis, zero))
    rows = [[columns[j][i] for j in range(len(basis))] for i in range(len(target_basis))]
    return ActionBlock(x, target, target_basis, rows)


def build_annihilator(w: WeightLabel, params: ParameterPoint,
                      module: Optional[VermaModule] = None) -> AnnihilatorSystem:
    """Stacked matrices of H, P+, P-, K+ restricted to the (p, q) weight space"""
    module = module or VermaModule(params)
    basis = enumerate_basis(w)
    blocks = [action_block(module, x, w, basis) for x in ANNIHILATORS]
    return AnnihilatorSystem(w, basis, blocks)


def _candidates(w: WeightLabel, basis: List[Monomial], rows, params: ParameterPoint) -> List[SingularVectorCandidate]:
    out = []
    for vec in nullspace(rows, len(basis), params.domain):
        coefficients = {(mono.l, mono.m): c for mono, c in zip(basis, vec) if c}
        out.append(SingularVectorCandidate(w, coefficients, from_coordinates(vec, basis)))
    return out


def solve_singular(w: WeightLabel, params: ParameterPoint,
                   module: Optional[VermaModule] = None) -> List[SingularVectorCandidate]:
    """
    Basis of the singular vectors in the (p, q) weight space.

    Each vector is normalized so that its first non-zero coefficient in
    (l, m) order is 1. The highest-weight vector itself (p = 0) is returned
    as a nullspace vector; callers interested in proper singular vectors
    start at p >= 1.
    """
    system = build_annihilator(w, params, module)
    found = _candidates(w, system.domain_basis, system.rows, params)
    logger.debug(f"solve_singular p={w.p} q={w.q} {params.describe()}: dim {len(system.domain_basis)}, "
                 f"nullity {len(found)}")
    return found


def block_kernel(w: WeightLabel, x: Generator, params: ParameterPoint,
                 module: Optional[VermaModule] = None) -> List[ModuleElement]:
    """Kernel of a single raising generator on the weight space, normalized like solve_singular"""
    module = module or VermaModule(params)
    basis = enumerate_basis(w)
    block = action_block(module, x, w, basis)
    return [c.vector for c in _candidates(w, basis, block.rows, params)]


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _inverse_theta(params: ParameterPoint):
    return params.one / params.theta


def q0_coefficient_table(p: int, params: Optional[ParameterPoint] = None) -> Dict[LM, Any]:
    """
    a_{l,m} of the q = 0 singular vector with a_{0,0} = 1:

        a_{l,m} = (-1/2)^(m+l) theta^(-m) p! / (l! (m-l)! (p-l-m)!)

    for 0 <= l <= m and l + m <= p; every other pair is absent.
    """
    if p < 1:
        raise ParameterError(f"q0_coefficient_table needs p >= 1, got {p}")
    params = params or ParameterPoint.generic()
    inv_theta = _inverse_theta(params)
    table = {}
    for m in range(p + 1):
        for l in range(min(m, p - m) + 1):
            rational = Fraction(-1, 2) ** (m + l) * Fraction(
                factorial(p), factorial(l) * factorial(m - l) * factorial(p - l - m))
            table[(l, m)] = params.from_rational(rational) * inv_theta ** m
    return table


def q0_monomial(p: int, l: int, m: int) -> Monomial:
    return Monomial(p - l - m, m - l, l, m)


def q0_candidate(p: int, params: ParameterPoint) -> ModuleElement:
    """The q = 0 vector built from q0_coefficient_table, as a module element"""
    return ModuleElement({q0_monomial(p, l, m): c for (l, m), c in q0_coefficient_table(p, params).items()})


def h_obstruction_table(p: int, params: Optional[ParameterPoint] = None) -> Dict[LM, Any]:
    """
    Coefficients of H applied to q0_candidate(p), keyed by (l, m) of the
    target |p-1-l-m, m-l, l, m>:

        (-1/2)^(m+l) theta^(-m) p! / (l! (m-l)! (p-l-m-1)!) * (p - 2d - 3)

    The common factor p - 2d - 3 is what forces p = 2d + 3.
    """
    if p < 1:
        raise ParameterError(f"h_obstruction_table needs p >= 1, got {p}")
    params = params or ParameterPoint.generic()
    inv_theta = _inverse_theta(params)
    obstruction = params.one * (p - 3) - params.d * 2
    table = {}
    for m in range(p):
        for l in range(min(m, p - 1 - m) + 1):
            rational = Fraction(-1, 2) ** (m + l) * Fraction(
                factorial(p), factorial(l) * factorial(m - l) * factorial(p - l - m - 1))
            value = params.from_rational(rational) * inv_theta ** m * obstruction
            if value:
                table[(l, m)] = value
    return table


def kplus_kernel(w: WeightLabel, params: ParameterPoint) -> List[ModuleElement]:
    """
    Closed-form basis of ker(K+) on V_{(p, q)} for q >= 1:

        |v^l> = sum_{m=l-q}^{p-l} (-1/(2 theta))^m / ((p-l-m)! (q-l+m)!) |p-l-m, q-l+m, l, m>

    for q <= l <= floor((p+q)/2); empty when p < q.
    """
    if w.q < 1:
        raise ParameterError(f"kplus_kernel needs q >= 1, got q={w.q}")
    p, q = w.p, w.q
    step = params.one / (params.theta * -2)
    vectors = []
    for l in range(q, (p + q) // 2 + 1):
        terms = {}
        for m in range(max(l - q, 0), p - l + 1):
            weight = params.from_rational(Fraction(1, factorial(p - l - m) * factorial(q - l + m)))
            terms[Monomial(p - l - m, q - l + m, l, m)] = weight * step ** m
        if terms:
            vectors.append(ModuleElement(terms))
    return vectors


def classify_level(w: WeightLabel, d: Fraction) -> str:
    """'one' iff q = 0 and p = 2d + 3 >= 1, else 'none'"""
    d = Fraction(d)
    if w.q == 0 and w.p >= 1 and Fraction(w.p) == 2 * d + 3:
        return "one"
    return "none"


def expected_nullity(w: WeightLabel, d: Fraction) -> int:
    return 1 if classify_level(w, d) == "one" else 0


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------

def proportional(u: ModuleElement, v: ModuleElement) -> bool:
    """u = c v for a single non-zero scalar c"""
    if u.is_zero() or v.is_zero():
        return False
    if set(u.monomials()) != set(v.monomials()):
        return False
    first = u.monomials()[0]
    ratio = u.coefficient(first) / v.coefficient(first)
    return all(u.coefficient(mono) == ratio * c for mono, c in v.items())


def matches_closed_form(candidates: Sequence[SingularVectorCandidate], module: VermaModule) -> bool:
    """A unique q = 0 candidate equal to (2 theta C - K- F+)^p |d,r> up to scale"""
    if len(candidates) != 1:
        return False
    w = candidates[0].weight
    if w.q != 0 or w.p < 1:
        return False
    return proportional(candidates[0].vector, module.closed_form_power(w.p))


def annihilated(module: VermaModule, v: ModuleElement,
                generators: Iterable[Generator] = ANNIHILATORS) -> bool:
    return all(module.act(x, v).is_zero() for x in generators)


def _lm_coefficients(v: ModuleElement) -> Dict[LM, Any]:
    return {(mono.l, mono.m): c for mono, c in v.items()}


def kplus_ratio_violations(v: ModuleElement, w: WeightLabel, params: ParameterPoint) -> List[LM]:
    """
    (l, m) pairs where 2 theta (q-l+m) a_{l,m} + (p-l-m+1) a_{l,m-1} != 0.

    Only pairs whose K+ target |p-l-m, q-l+m-1, l, m> exists are checked;
    missing coefficients count as zero.
    """
    p, q = w.p, w.q
    a = _lm_coefficients(v)
    bad = []
    for l in range(p + 1):
        for m in range(p - l + 1):
            if q - l + m - 1 < 0:
                continue
            lhs = a.get((l, m), params.zero) * (params.theta * (2 * (q - l + m)))
            if m >= 1:
                lhs = lhs + a.get((l, m - 1), params.zero) * (p - l - m + 1)
            if lhs:
                bad.append((l, m))
    return bad


def kplus_initial_violations(v: ModuleElement, w: WeightLabel) -> List[int]:
    """l <= min(p, q-1) with a non-zero a_{l,0}"""
    a = _lm_coefficients(v)
    return [l for l in range(min(w.p, w.q - 1) + 1) if a.get((l, 0))]


def pminus_initial_violations(v: ModuleElement) -> List[int]:
    """m with a non-zero a_{0,m}; ker(P-) at q < 0 has none"""
    return sorted(m for (l, m), c in _lm_coefficients(v).items() if l == 0 and c)


# ---------------------------------------------------------------------------
# Grid evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridCell:
    p: int
    q: int
    theta: Fraction
    d: Fraction
    r: Fraction

    def sort_key(self):
        return (self.p, self.q, self.d, self.theta, self.r)


@dataclass
class GridResult:
    cell: GridCell
    nullity: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.nullity == self.expected


def _evaluate_cell(cell: GridCell, modules: Dict[Tuple[Fraction, Fraction, Fraction], VermaModule]) -> GridResult:
    module = modules[(cell.theta, cell.d, cell.r)]
    found = solve_singular(WeightLabel(cell.p, cell.q), module.params, module)
    return GridResult(cell, len(found), expected_nullity(WeightLabel(cell.p, cell.q), cell.d))


def singular_grid(
    pmax: int,
    qmax: int,
    ds: Iterable,
    thetas: Iterable,
    rs: Iterable,
    threads: Optional[int] = None,
) -> List[GridResult]:
    """
    Nullity of the annihilator system on every cell 1 <= p <= pmax,
    |q| <= qmax of the parameter grid, against classify_level.

    Cells are independent; one module (and reordering cache) is shared per
    parameter point. Results come back sorted by (p, q, d, theta, r).
    """
    threads = threads or settings.threads
    points = [(Fraction(t), Fraction(d), Fraction(r)) for d in ds for t in thetas for r in rs]
    modules = {pt: VermaModule(ParameterPoint.specialized(*pt)) for pt in points}
    cells = [GridCell(p, q, t, d, r)
             for (t, d, r) in points
             for p in range(1, pmax + 1)
             for q in range(-qmax, qmax + 1)]
    logger.info(f"Evaluating singular-vector grid: {len(cells)} cells on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda c: _evaluate_cell(c, modules), cells))
    results.sort(key=lambda res: res.cell.sort_key())
    failures = [res for res in results if not res.passed]
    if failures:
        logger.error(f"{len(failures)} grid cells disagree with the 2d+3 criterion")
    return results
