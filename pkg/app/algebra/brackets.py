"""
Structure constants of the exotic conformal Galilei algebra

Brackets are stored for the X+/X- basis only. Every pair not listed in the
table (nor its antisymmetric partner) brackets to zero; the Jacobi scan
confirms this reading gives a Lie algebra.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterator, List, Tuple

from app.algebra.generators import CARTAN, LOWERING, RAISING, Generator, TriangularPart, part_of
from app.field import format_value

logger = logging.getLogger(__name__)

G = Generator


@dataclass(frozen=True)
class LieElement:
    """Finite linear combination of generators; zero coefficients are never stored"""

    terms: Dict[Generator, Any] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, terms: Dict[Generator, Any]) -> "LieElement":
        return cls({g: c for g, c in terms.items() if c})

    @classmethod
    def of(cls, x: Generator) -> "LieElement":
        return cls({x: 1})

    def items(self) -> Iterator[Tuple[Generator, Any]]:
        return iter(self.terms.items())

    def coefficient(self, x: Generator):
        return self.terms.get(x, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Generator]:
        return list(self.terms)

    def scale(self, c) -> "LieElement":
        return LieElement.from_terms({g: c * v for g, v in self.terms.items()})

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return LieElement.from_terms(out)

    def __neg__(self) -> "LieElement":
        return self.scale(-1)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def to_json(self) -> Dict[str, str]:
        return {g.value: format_value(c) for g, c in sorted(self.terms.items(), key=lambda kv: kv[0].value)}


# The non-zero commutators; antisymmetric partners are filled in below.
_LISTED_BRACKETS: Dict[Tuple[Generator, Generator], Dict[Generator, int]] = {
    (G.J, G.Pplus): {G.Pplus: 1},
    (G.J, G.Pminus): {G.Pminus: -1},
    (G.J, G.Kplus): {G.Kplus: 1},
    (G.J, G.Kminus): {G.Kminus: -1},
    (G.J, G.Fplus): {G.Fplus: 1},
    (G.J, G.Fminus): {G.Fminus: -1},
    (G.H, G.Kplus): {G.Pplus: -1},
    (G.H, G.Kminus): {G.Pminus: -1},
    (G.D, G.Pplus): {G.Pplus: 1},
    (G.D, G.Pminus): {G.Pminus: 1},
    (G.C, G.Pplus): {G.Kplus: 2},
    (G.C, G.Pminus): {G.Kminus: 2},
    (G.H, G.Fplus): {G.Kplus: -2},
    (G.H, G.Fminus): {G.Kminus: -2},
    (G.D, G.Fplus): {G.Fplus: -1},
    (G.D, G.Fminus): {G.Fminus: -1},
    (G.C, G.Kplus): {G.Fplus: 1},
    (G.C, G.Kminus): {G.Fminus: 1},
    (G.C, G.H): {G.D: 2},
    (G.D, G.H): {G.H: 1},
    (G.C, G.D): {G.C: 1},
    (G.Kplus, G.Kminus): {G.Theta: -2},
    (G.Pplus, G.Fminus): {G.Theta: 4},
    (G.Pminus, G.Fplus): {G.Theta: -4},
}


def _build_table() -> Dict[Tuple[Generator, Generator], LieElement]:
    table: Dict[Tuple[Generator, Generator], LieElement] = {}
    for (x, y), rhs in _LISTED_BRACKETS.items():
        element = LieElement.from_terms(rhs)
        table[(x, y)] = element
        table[(y, x)] = -element
    return table


BRACKET_TABLE: Dict[Tuple[Generator, Generator], LieElement] = _build_table()
_ZERO = LieElement()


def bracket(x: Generator, y: Generator) -> LieElement:
    """[x, y] from the structure-constant table"""
    return BRACKET_TABLE.get((x, y), _ZERO)


def bracket_lie(a: LieElement, b: LieElement) -> LieElement:
    """Bilinear extension of bracket to LieElements"""
    out = LieElement()
    for x, cx in a.items():
        for y, cy in b.items():
            term = bracket(x, y)
            if not term.is_zero():
                out = out + term.scale(cx * cy)
    return out


def weight_shift(x: Generator) -> Tuple[int, int]:
    """
    (dp, dq) by which x moves a weight label (p, q).

    Read off from ad(D) and ad(J): [D, x] = lambda x gives dp = -lambda,
    [J, x] = mu x gives dq = -mu.
    """
    return (-bracket(G.D, x).coefficient(x), -bracket(G.J, x).coefficient(x))


# ---------------------------------------------------------------------------
# Shapovalov involution
# ---------------------------------------------------------------------------

_OMEGA_LISTED = {
    G.D: G.D,
    G.J: G.J,
    G.Theta: G.Theta,
    G.C: G.H,
    G.Kplus: G.Kminus,
    G.Pplus: G.Fminus,
    G.Pminus: G.Fplus,
}
# Remaining images follow from omega being an involution.
OMEGA: Dict[Generator, Generator] = {**_OMEGA_LISTED, **{v: k for k, v in _OMEGA_LISTED.items()}}


def omega(x: Generator) -> Generator:
    """Involutive anti-automorphism used by the Shapovalov form"""
    return OMEGA[x]


def omega_lie(a: LieElement) -> LieElement:
    return LieElement.from_terms({omega(g): c for g, c in a.items()})


# ---------------------------------------------------------------------------
# Consistency scans
# ---------------------------------------------------------------------------

@dataclass
class ScanReport:
    """Outcome of an exhaustive scan; violations are entries, not exceptions"""

    name: str
    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def check_jacobi() -> ScanReport:
    """Check [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over all 11^3 ordered triples"""
    report = ScanReport(name="jacobi")
    for x, y, z in product(Generator, repeat=3):
        residual = (
            bracket_lie(bracket(x, y), LieElement.of(z))
            + bracket_lie(bracket(y, z), LieElement.of(x))
            + bracket_lie(bracket(z, x), LieElement.of(y))
        )
        report.checked += 1
        if not residual.is_zero():
            report.violations.append({
                'triple': [x.value, y.value, z.value],
                'residual': residual.to_json(),
            })
    if report.violations:
        logger.error(f"Jacobi identity fails on {len(report.violations)} triples")
    return report


def check_antisymmetry() -> ScanReport:
    report = ScanReport(name="antisymmetry")
    for x, y in product(Generator, repeat=2):
        report.checked += 1
        if not (bracket(x, y) + bracket(y, x)).is_zero():
            report.violations.append({'pair': [x.value, y.value]})
    return report


def check_omega() -> ScanReport:
    """omega o omega = id and omega([x,y]) = [omega(y), omega(x)] for all 121 pairs"""
    report = ScanReport(name="omega")
    for x in Generator:
        if omega(omega(x)) != x:
            report.violations.append({'generator': x.value, 'reason': 'not an involution'})
        if part_of(omega(x)) != _OMEGA_PART[part_of(x)]:
            report.violations.append({'generator': x.value, 'reason': 'does not swap raising and lowering'})
    for x, y in product(Generator, repeat=2):
        report.checked += 1
        lhs = omega_lie(bracket(x, y))
        rhs = bracket(omega(y), omega(x))
        if not (lhs - rhs).is_zero():
            report.violations.append({
                'pair': [x.value, y.value],
                'omega_of_bracket': lhs.to_json(),
                'bracket_of_omegas': rhs.to_json(),
            })
    return report


_OMEGA_PART = {
    TriangularPart.raising: TriangularPart.lowering,
    TriangularPart.lowering: TriangularPart.raising,
    TriangularPart.cartan: TriangularPart.cartan,
}


def check_grading() -> ScanReport:
    """[raising, raising] lies in raising + cartan, dually for lowering"""
    report = ScanReport(name="grading")
    allowed = {
        TriangularPart.raising: set(RAISING) | set(CARTAN),
        TriangularPart.lowering: set(LOWERING) | set(CARTAN),
    }
    for part, members in ((TriangularPart.raising, RAISING), (TriangularPart.lowering, LOWERING)):
        for x, y in product(members, repeat=2):
            report.checked += 1
            stray = [g.value for g in bracket(x, y).support() if g not in allowed[part]]
            if stray:
                report.violations.append({'pair': [x.value, y.value], 'outside': stray})
    return report


def bracket_table_json() -> Dict[str, Dict[str, str]]:
    """Non-zero brackets keyed "X,Y" for documentation and cross-validation"""
    return {
        f"{x.value},{y.value}": element.to_json()
        for (x, y), element in sorted(BRACKET_TABLE.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value))
    }
