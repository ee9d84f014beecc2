"""
Theorem Verification Rules

Each rule re-derives one structural fact about the exotic conformal Galilei
algebra or its Verma modules with exact arithmetic. Rules return
severity (INFO/ERROR) and a details dict for the report.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.algebra import RAISING, Generator, check_antisymmetry, check_grading, check_jacobi, check_omega
from app.analytics.quotient import quotient_singular_check
from app.analytics.shapovalov import contravariance_defect, gram, gram_det_roots, pair
from app.analytics.singular import (
    block_kernel,
    h_obstruction_table,
    kplus_initial_violations,
    kplus_kernel,
    kplus_ratio_violations,
    pminus_initial_violations,
    proportional,
    q0_candidate,
    singular_grid,
    solve_singular,
)
from app.exceptions import ParameterError
from app.field import D, THETA, format_rational, format_value
from app.verma import (
    Monomial,
    ParameterPoint,
    PRINTED_ACTIONS,
    VermaModule,
    WeightLabel,
    enumerate_basis,
    printed_action,
    weight_of,
)

logger = logging.getLogger(__name__)

G = Generator

D_GRID = tuple(Fraction(x) for x in ("-3", "-5/2", "-2", "-3/2", "-1", "-1/2", "0", "1/2", "1", "7/3"))
THETA_GRID = (Fraction(1), Fraction(-2), Fraction(1, 3))
R_GRID = (Fraction(0), Fraction(5))

RuleOutcome = Tuple[bool, str, str, Dict[str, Any]]


@dataclass
class VerificationConfig:
    """Bounds shared by all rules"""

    pmax: int = 6
    qmax: int = 3
    threads: Optional[int] = None
    seed: int = 20240601
    ds: Sequence[Fraction] = field(default=D_GRID)
    thetas: Sequence[Fraction] = field(default=THETA_GRID)
    rs: Sequence[Fraction] = field(default=R_GRID)


class TheoremRule:
    """Base class for theorem verification rules"""

    def __init__(self, rule_code: str, name: str, description: str):
        self.rule_code = rule_code
        self.name = name
        self.description = description

    def check(self, config: VerificationConfig) -> RuleOutcome:
        """
        Run the rule check

        Returns:
            (passed, severity, message, details)
            - passed: bool - True if rule passed
            - severity: str - 'INFO' or 'ERROR'
            - message: str - Human-readable message
            - details: dict - Counts and counterexamples
        """
        raise NotImplementedError


def _fail(message: str, details: Dict[str, Any]) -> RuleOutcome:
    return False, 'ERROR', message, details


def _ok(message: str, details: Dict[str, Any]) -> RuleOutcome:
    return True, 'INFO', message, details


class LieAlgebraSoundness(TheoremRule):
    """Jacobi, antisymmetry, omega anti-automorphism and triangular grading"""

    def __init__(self):
        super().__init__(
            rule_code='RULE_LIE_SOUNDNESS',
            name='Lie Algebra Soundness',
            description='Jacobi identity on all 11^3 triples and omega anti-automorphism on all 121 pairs'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        scans = [check_jacobi(), check_antisymmetry(), check_omega(), check_grading()]
        details = {s.name: {'checked': s.checked, 'violations': s.violations[:5]} for s in scans}
        failed = [s.name for s in scans if not s.passed]
        if failed:
            return _fail(f'Bracket table inconsistent: {failed}', details)
        return _ok('Bracket table is a Lie algebra and omega is an involutive anti-automorphism', details)


class PrintedActionEquivalence(TheoremRule):
    """Rewriting engine against the closed formulas for D, J, H, K+, P+, P-"""

    EXPONENT_BOUND = 4

    def __init__(self):
        super().__init__(
            rule_code='RULE_PRINTED_ACTIONS',
            name='Printed Action Equivalence',
            description=f'Engine equals the six closed formulas on all monomials with exponents <= {self.EXPONENT_BOUND}'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        params = ParameterPoint.generic()
        module = VermaModule(params)
        mismatches = []
        checked = 0
        for exps in product(range(self.EXPONENT_BOUND + 1), repeat=4):
            mono = Monomial(*exps)
            v = module.basis_vector(mono)
            for x in PRINTED_ACTIONS:
                checked += 1
                if module.act(x, v) != printed_action(x, mono, params):
                    mismatches.append({'generator': x.value, 'monomial': list(mono)})
        details = {'checked': checked, 'mismatches': mismatches[:10]}
        if mismatches:
            return _fail(f'{len(mismatches)} actions differ from the closed formulas', details)
        return _ok(f'All {checked} actions agree with the closed formulas', details)


class SingularVectorGrid(TheoremRule):
    """Nullity of the annihilator system is 1 exactly when q = 0 and p = 2d + 3 >= 1"""

    def __init__(self):
        super().__init__(
            rule_code='RULE_SINGULAR_GRID',
            name='Singular Vector Existence Grid',
            description='Exact nullspace dimensions over the (p, q, d, theta, r) grid'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        results = singular_grid(config.pmax, config.qmax, config.ds, config.thetas, config.rs, config.threads)
        bad = [
            {'p': res.cell.p, 'q': res.cell.q, 'd': format_rational(res.cell.d),
             'theta': format_rational(res.cell.theta), 'r': format_rational(res.cell.r),
             'nullity': res.nullity, 'expected': res.expected}
            for res in results if not res.passed
        ]
        found = sum(1 for res in results if res.nullity)
        details = {'cells': len(results), 'cells_with_singular_vector': found, 'disagreements': bad[:10]}
        if bad:
            return _fail(f'{len(bad)} cells disagree with the 2d+3 criterion', details)
        return _ok(f'{len(results)} cells agree; {found} carry a singular vector', details)


class ClosedFormAgreement(TheoremRule):
    """The unique singular vector equals (2 theta C - K- F+)^p |d,r> and the q = 0 coefficient table"""

    LEVELS = range(1, 6)
    POINTS = ((Fraction(1), Fraction(0)), (Fraction(-2), Fraction(5)))

    def __init__(self):
        super().__init__(
            rule_code='RULE_CLOSED_FORM',
            name='Closed Form Agreement',
            description='Solver output, closed power and coefficient table agree for p = 1..5 at d = (p-3)/2'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        bad = []
        for p in self.LEVELS:
            d = Fraction(p - 3, 2)
            for theta, r in self.POINTS:
                params = ParameterPoint.specialized(theta, d, r)
                module = VermaModule(params)
                found = solve_singular(WeightLabel(p, 0), params, module)
                closed = module.closed_form_power(p)
                label = {'p': p, 'd': format_rational(d), 'theta': format_rational(theta)}
                if len(found) != 1:
                    bad.append({**label, 'reason': f'nullity {len(found)}'})
                elif not proportional(found[0].vector, closed):
                    bad.append({**label, 'reason': 'solver vector is not a multiple of the closed power'})
                elif not proportional(closed, q0_candidate(p, params)):
                    bad.append({**label, 'reason': 'closed power disagrees with the coefficient table'})
        details = {'levels': list(self.LEVELS), 'failures': bad}
        if bad:
            return _fail(f'{len(bad)} closed-form comparisons failed', details)
        return _ok('Solver, closed power and coefficient table agree on every level', details)


class ShapovalovForm(TheoremRule):
    """Contravariance, orthogonality of singular vectors and the (1, 0) determinant"""

    RANDOM_PAIRS = 200
    EXPONENT_BOUND = 3
    POINT = (Fraction(1, 3), Fraction(7, 3), Fraction(5))

    def __init__(self):
        super().__init__(
            rule_code='RULE_SHAPOVALOV',
            name='Shapovalov Form',
            description='Contravariance on random pairs, singular-vector orthogonality, Gram determinant at (1, 0)'
        )

    def _contravariance(self, config: VerificationConfig) -> List[Dict[str, Any]]:
        rng = random.Random(config.seed)
        module = VermaModule(ParameterPoint.specialized(*self.POINT))
        generators = list(Generator)
        bad = []
        for _ in range(self.RANDOM_PAIRS):
            x = rng.choice(generators)
            u_mono = Monomial(*(rng.randint(0, self.EXPONENT_BOUND) for _ in range(4)))
            w = weight_of(u_mono).shifted(x)
            candidates = [b for b in enumerate_basis(w) if max(b) <= self.EXPONENT_BOUND] if w else []
            if candidates:
                v_mono = rng.choice(candidates)
            else:
                v_mono = Monomial(*(rng.randint(0, self.EXPONENT_BOUND) for _ in range(4)))
            defect = contravariance_defect(module, x, module.basis_vector(u_mono), module.basis_vector(v_mono))
            if defect:
                bad.append({'generator': x.value, 'u': list(u_mono), 'v': list(v_mono)})
        return bad

    def _orthogonality(self) -> List[Dict[str, Any]]:
        bad = []
        for p in range(1, 6):
            params = ParameterPoint.specialized(1, Fraction(p - 3, 2), 0)
            module = VermaModule(params)
            v_s = module.closed_form_power(p)
            for b in enumerate_basis(WeightLabel(p, 0)):
                if pair(module, v_s, module.basis_vector(b)):
                    bad.append({'p': p, 'basis': list(b)})
        return bad

    def _determinant(self) -> Dict[str, Any]:
        params = ParameterPoint.generic()
        g = gram(WeightLabel(1, 0), params)
        det, roots = gram_det_roots(WeightLabel(1, 0), params)
        expected = THETA ** 2 * (D + 1) * -16
        return {
            'symmetric': g.is_symmetric(),
            'det': format_value(det),
            'det_matches': det == expected,
            'roots': [format_rational(x) for x in roots],
            'roots_match': roots == [Fraction(-1)],
        }

    def check(self, config: VerificationConfig) -> RuleOutcome:
        contravariance = self._contravariance(config)
        orthogonality = self._orthogonality()
        determinant = self._determinant()
        details = {
            'contravariance_failures': contravariance[:10],
            'orthogonality_failures': orthogonality[:10],
            'gram_1_0': determinant,
        }
        if contravariance or orthogonality or not (determinant['det_matches'] and determinant['roots_match']
                                                   and determinant['symmetric']):
            return _fail('Shapovalov form checks failed', details)
        return _ok(f'Contravariant on {self.RANDOM_PAIRS} random pairs; singular vectors are null', details)


class QuotientIrreducibility(TheoremRule):
    """No singular vectors in V/I^d up to p0 + 3 for p0 = 1..5"""

    P0_VALUES = range(1, 6)
    EXTRA_LEVELS = 3

    def __init__(self):
        super().__init__(
            rule_code='RULE_QUOTIENT',
            name='Quotient Irreducibility',
            description='Quotient modules have no singular vectors and dimensions add up, level by level'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        summaries = []
        failed = False
        for p0 in self.P0_VALUES:
            d = Fraction(p0 - 3, 2)
            report = quotient_singular_check(d, 0, 1, p0 + self.EXTRA_LEVELS, config.qmax)
            summaries.append({
                'd': format_rational(d),
                'p0': p0,
                'levels': len(report.levels),
                'failures': [row.to_json() for row in report.failures],
                'additive': report.additive,
                'hw_power_dependent': report.hw_power_dependent,
            })
            failed = failed or not report.passed
        details = {'checks': summaries}
        if failed:
            return _fail('A quotient module has a singular vector or inconsistent dimensions', details)
        return _ok('Every quotient is free of singular vectors at the checked levels', details)


class KplusKernelAnatomy(TheoremRule):
    """ker(K+) at q > 0: recurrence, initial condition, emptiness for p < q, P+ obstruction"""

    POINT = (Fraction(1, 3), Fraction(1, 2), Fraction(5))

    def __init__(self):
        super().__init__(
            rule_code='RULE_KPLUS_KERNEL',
            name='K+ Kernel Anatomy',
            description='Closed-form K+ kernel satisfies the recurrence and never survives P+'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        params = ParameterPoint.specialized(*self.POINT)
        module = VermaModule(params)
        bad = []
        for p in range(config.pmax + 1):
            for q in range(1, config.qmax + 1):
                w = WeightLabel(p, q)
                kernel = kplus_kernel(w, params)
                label = {'p': p, 'q': q}
                if p < q and kernel:
                    bad.append({**label, 'reason': 'kernel should be empty for p < q'})
                if len(kernel) != len(block_kernel(w, G.Kplus, params, module)):
                    bad.append({**label, 'reason': 'closed-form kernel has the wrong dimension'})
                for v in kernel:
                    if not module.act(G.Kplus, v).is_zero():
                        bad.append({**label, 'reason': 'not killed by K+'})
                    if kplus_ratio_violations(v, w, params) or kplus_initial_violations(v, w):
                        bad.append({**label, 'reason': 'recurrence or initial condition fails'})
                    if module.act(G.Pplus, v).is_zero():
                        bad.append({**label, 'reason': 'kernel vector is killed by P+'})
        details = {'failures': bad[:10]}
        if bad:
            return _fail(f'{len(bad)} K+ kernel checks failed', details)
        return _ok('K+ kernels follow the recurrence and are obstructed by P+', details)


class NegativeChargeAnatomy(TheoremRule):
    """ker(P-) at q < 0 has no l = 0 coefficients"""

    POINT = (Fraction(-2), Fraction(0), Fraction(0))

    def __init__(self):
        super().__init__(
            rule_code='RULE_PMINUS_KERNEL',
            name='P- Kernel Anatomy',
            description='Vectors killed by P- at q < 0 have vanishing a_{0,m}'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        params = ParameterPoint.specialized(*self.POINT)
        module = VermaModule(params)
        bad = []
        for p in range(1, config.pmax + 1):
            for q in range(-config.qmax, 0):
                for v in block_kernel(WeightLabel(p, q), G.Pminus, params, module):
                    offending = pminus_initial_violations(v)
                    if offending:
                        bad.append({'p': p, 'q': q, 'm': offending})
        details = {'failures': bad[:10]}
        if bad:
            return _fail(f'{len(bad)} P- kernel vectors carry l = 0 terms', details)
        return _ok('P- kernels at q < 0 have no l = 0 terms', details)


class HighestWeightObstruction(TheoremRule):
    """For generic d the q = 0 vector is killed by K+, P+, P-; H leaves the factor p - 2d - 3"""

    LEVELS = range(1, 5)

    def __init__(self):
        super().__init__(
            rule_code='RULE_H_OBSTRUCTION',
            name='H Obstruction',
            description='Only H distinguishes p = 2d + 3 on the q = 0 coefficient table'
        )

    def check(self, config: VerificationConfig) -> RuleOutcome:
        params = ParameterPoint.generic()
        module = VermaModule(params)
        bad = []
        for p in self.LEVELS:
            v = q0_candidate(p, params)
            for x in RAISING:
                if x == G.H:
                    continue
                if not module.act(x, v).is_zero():
                    bad.append({'p': p, 'generator': x.value})
            image = module.act(G.H, v)
            table = h_obstruction_table(p, params)
            expected = {Monomial(p - 1 - l - m, m - l, l, m): c for (l, m), c in table.items()}
            if dict(image.items()) != expected:
                bad.append({'p': p, 'generator': G.H.value, 'reason': 'obstruction table mismatch'})
        details = {'levels': list(self.LEVELS), 'failures': bad}
        if bad:
            return _fail('q = 0 coefficient table fails the generic annihilation pattern', details)
        return _ok('K+, P+, P- annihilate the table for all d; H leaves p - 2d - 3', details)


THEOREM_RULES: List[TheoremRule] = [
    LieAlgebraSoundness(),
    PrintedActionEquivalence(),
    SingularVectorGrid(),
    ClosedFormAgreement(),
    ShapovalovForm(),
    QuotientIrreducibility(),
    KplusKernelAnatomy(),
    NegativeChargeAnatomy(),
    HighestWeightObstruction(),
]


def get_rules(rule_codes: Optional[Sequence[str]] = None) -> List[TheoremRule]:
    if not rule_codes:
        return list(THEOREM_RULES)
    wanted = set(rule_codes)
    unknown = wanted - {rule.rule_code for rule in THEOREM_RULES}
    if unknown:
        raise ParameterError(f"unknown rule codes: {sorted(unknown)}")
    return [rule for rule in THEOREM_RULES if rule.rule_code in wanted]


def get_all_rule_codes() -> List[str]:
    return [rule.rule_code for rule in THEOREM_RULES]
