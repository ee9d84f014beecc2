"""
Verma basis monomials |h,k,l,m> = C^h K-^k F-^l F+^m |d,r> and module elements
"""
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from app.algebra import LOWERING, Generator
from app.field import format_value


class Monomial(NamedTuple):
    """Exponents of C, K-, F-, F+ (in PBW order)"""

    h: int
    k: int
    l: int
    m: int

    def is_highest_weight(self) -> bool:
        return not any(self)

    def first_index(self) -> int:
        """Index (in PBW order) of the leftmost factor"""
        for i, e in enumerate(self):
            if e:
                return i
        return len(self)

    def bump(self, index: int, delta: int) -> "Monomial":
        exps = list(self)
        exps[index] += delta
        return Monomial(*exps)

    def word(self) -> List[Generator]:
        """The ordered product C^h K-^k F-^l F+^m as a word (leftmost first)"""
        out: List[Generator] = []
        for g, e in zip(LOWERING, self):
            out.extend([g] * e)
        return out

    def degree(self) -> int:
        return sum(self)


HIGHEST_WEIGHT = Monomial(0, 0, 0, 0)


class ModuleElement:
    """
    Finite sparse combination of basis monomials.

    Treated as immutable: every operation returns a new element.
    Coefficients live in the module's coefficient domain.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Dict[Monomial, Any]] = None):
        self._terms: Dict[Monomial, Any] = {mono: c for mono, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, mono: Monomial, one) -> "ModuleElement":
        return cls({Monomial(*mono): one})

    @classmethod
    def combine(cls, pairs: Iterable[Tuple[Monomial, Any]]) -> "ModuleElement":
        """Sum of (monomial, coefficient) pairs with repeated monomials merged"""
        acc: Dict[Monomial, Any] = {}
        for mono, c in pairs:
            if mono in acc:
                acc[mono] = acc[mono] + c
            else:
                acc[mono] = c
        return cls(acc)

    def items(self) -> Iterator[Tuple[Monomial, Any]]:
        return iter(self._terms.items())

    def monomials(self) -> List[Monomial]:
        return sorted(self._terms)

    def coefficient(self, mono: Monomial, default: Any = 0) -> Any:
        return self._terms.get(mono, default)

    def is_zero(self) -> bool:
        return not self._terms

    def scale(self, c) -> "ModuleElement":
        if not c:
            return ModuleElement()
        return ModuleElement({mono: c * v for mono, v in self._terms.items()})

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement.combine(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "ModuleElement":
        return ModuleElement({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(m)}: {format_value(c)}" for m, c in sorted(self._terms.items()))
        return f"ModuleElement({{{inner}}})"

    def to_json(self) -> List[Dict[str, Any]]:
        """Sorted by (h, k, l, m) for deterministic output"""
        return [
            {'h': mono.h, 'k': mono.k, 'l': mono.l, 'm': mono.m, 'coef': format_value(c)}
            for mono, c in sorted(self._terms.items())
        ]
