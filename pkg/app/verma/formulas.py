"""
Closed-form actions of D, J, H, K+, P+ and P- on |h,k,l,m>

These are the hand-derived formulas the rewriting engine must reproduce; the
engine never calls them.
"""
from typing import Any, Callable, Dict, List, Tuple

from app.algebra import Generator
from app.verma.monomials import ModuleElement, Monomial
from app.verma.parameters import ParameterPoint

G = Generator


def _element(terms: List[Tuple[Any, Tuple[int, int, int, int]]]) -> ModuleElement:
    pairs = []
    for coef, exps in terms:
        if not coef or min(exps) < 0:
            continue
        pairs.append((Monomial(*exps), coef))
    return ModuleElement.combine(pairs)


def _d(pt: ParameterPoint, h, k, l, m) -> ModuleElement:
    return _element([(pt.d - (h + l + m), (h, k, l, m))])


def _j(pt: ParameterPoint, h, k, l, m) -> ModuleElement:
    return _element([(pt.r - (k + l - m), (h, k, l, m))])


def _h(pt: ParameterPoint, h, k, l, m) -> ModuleElement:
    return _element([
        (pt.one * (-2 * l), (h, k + 1, l - 1, m)),
        (pt.theta * (4 * k * m), (h, k - 1, l, m - 1)),
        ((pt.one * (2 * l + 2 * m + h - 1) - pt.d * 2) * h, (h - 1, k, l, m)),
    ])


def _kplus(pt: ParameterPoint, h, k, l, m) -> ModuleElement:
    return _element([
        (pt.theta * (-2 * k), (h, k - 1, l, m)),
        (pt.one * (-h), (h - 1, k, l, m + 1)),
    ])


def _pplus(pt: ParameterPoint, h, k, l, m) -> ModuleElement:
    return _element([
        (pt.theta * (4 * l), (h, k, l - 1, m)),
        (pt.theta * (4 * h * k), (h - 1, k - 1, l, m)),
        (pt.one * (h * (h - 1)), (h - 2, k, l, m + 1)),
    ])


def _pminus(pt: ParameterPoint, h, k, l, m) -> ModuleElement:
    return _element([
        (pt.theta * (-4 * m), (h, k, l, m - 1)),
        (pt.one * (-2 * h), (h - 1, k + 1, l, m)),
        (pt.one * (h * (h - 1)), (h - 2, k, l + 1, m)),
    ])


PRINTED_ACTIONS: Dict[Generator, Callable[..., ModuleElement]] = {
    G.D: _d,
    G.J: _j,
    G.H: _h,
    G.Kplus: _kplus,
    G.Pplus: _pplus,
    G.Pminus: _pminus,
}


def printed_action(x: Generator, mono: Monomial, params: ParameterPoint) -> ModuleElement:
    """x |h,k,l,m> from the closed formulas; only the six generators above have one"""
    try:
        formula = PRINTED_ACTIONS[x]
    except KeyError:
        raise ValueError(f"no closed formula for {x}") from None
    return formula(params, *mono)
