"""
PBW normal ordering and the induced action on the Verma module V^{d,r}

Generators act on basis monomials by commuting them rightward through
C^h K-^k F-^l F+^m using the bracket table, until they either join the
ordered product (lowering generators in PBW position) or reach the
highest-weight vector (raising generators kill it, Cartan elements scale).
"""
import logging
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from app.algebra import LOWERING, LOWERING_INDEX, Generator, LieElement, bracket
from app.config import settings
from app.exceptions import ParameterError
from app.verma.monomials import HIGHEST_WEIGHT, ModuleElement, Monomial
from app.verma.parameters import ParameterPoint

logger = logging.getLogger(__name__)

G = Generator
Terms = Dict[Monomial, Any]


class VermaModule:
    """
    The Verma module at one parameter point.

    The one-step reordering cache is keyed on (generator, monomial); entries
    are written once with the same value, so concurrent readers only ever see
    complete results.
    """

    def __init__(self, params: ParameterPoint, memo: Optional[bool] = None):
        self.params = params
        self.memo = settings.memo_enabled if memo is None else memo
        self._cache: Dict[Tuple[Generator, Monomial], Terms] = {}

    def __repr__(self) -> str:
        return f"VermaModule({self.params.describe()})"

    # -- vectors -----------------------------------------------------------

    def highest_weight_vector(self) -> ModuleElement:
        return ModuleElement.basis(HIGHEST_WEIGHT, self.params.one)

    def basis_vector(self, mono: Sequence[int]) -> ModuleElement:
        mono = Monomial(*mono)
        if min(mono) < 0:
            raise ParameterError(f"negative exponent in {tuple(mono)}")
        return ModuleElement.basis(mono, self.params.one)

    # -- action ------------------------------------------------------------

    def act(self, x: Generator, v: ModuleElement) -> ModuleElement:
        """x . v, linear in v"""
        pairs = []
        for mono, c in v.items():
            for image, c2 in self._act_monomial(x, mono).items():
                pairs.append((image, c * c2))
        return ModuleElement.combine(pairs)

    def act_lie(self, a: LieElement, v: ModuleElement) -> ModuleElement:
        """Linear extension of act to combinations of generators"""
        out = ModuleElement()
        for x, c in a.items():
            out = out + self.act(x, v).scale(self.params.convert(c))
        return out

    def act_word(self, word: Iterable[Generator], v: ModuleElement) -> ModuleElement:
        """
        Apply a word x1 x2 ... xn, rightmost factor first.

        The empty word is the identity.
        """
        for x in reversed(list(word)):
            v = self.act(x, v)
            if v.is_zero():
                break
        return v

    def closed_form_power(self, p: int) -> ModuleElement:
        """(2 theta C - K- F+)^p |d,r>, expanded by repeated application"""
        if p < 1:
            raise ParameterError(f"closed_form_power needs p >= 1, got {p}")
        two_theta = self.params.theta * 2
        v = self.highest_weight_vector()
        for _ in range(p):
            v = self.act(G.C, v).scale(two_theta) - self.act_word([G.Kminus, G.Fplus], v)
        logger.debug(f"closed_form_power({p}) has {len(v)} terms")
        return v

    def cache_size(self) -> int:
        return len(self._cache)

    # -- reordering --------------------------------------------------------

    def _act_monomial(self, x: Generator, mono: Monomial) -> Terms:
        key = (x, mono)
        if self.memo:
            cached = self._cache.get(key)
            if cached is not None:
                return cached

        if mono == HIGHEST_WEIGHT:
            result = self._act_highest_weight(x)
        else:
            first = mono.first_index()
            index = LOWERING_INDEX.get(x)
            if index is not None and index <= first:
                # already in PBW position
                result = {mono.bump(index, 1): self.params.one}
            else:
                result = self._commute_past(x, LOWERING[first], mono.bump(first, -1))

        if self.memo:
            self._cache[key] = result
        return result

    def _commute_past(self, x: Generator, y: Generator, rest: Monomial) -> Terms:
        # x y rest = y (x rest) + [x, y] rest
        acc: Terms = {}
        for m2, c2 in self._act_monomial(x, rest).items():
            for m3, c3 in self._act_monomial(y, m2).items():
                _accumulate(acc, m3, c2 * c3)
        for z, cz in bracket(x, y).items():
            for m2, c2 in self._act_monomial(z, rest).items():
                _accumulate(acc, m2, c2 * cz)
        return {mono: c for mono, c in acc.items() if c}

    def _act_highest_weight(self, x: Generator) -> Terms:
        p = self.params
        if x in LOWERING_INDEX:
            return {HIGHEST_WEIGHT.bump(LOWERING_INDEX[x], 1): p.one}
        scalar = {G.D: p.d, G.J: p.r, G.Theta: p.theta}.get(x)
        if scalar is None or not scalar:
            return {}
        return {HIGHEST_WEIGHT: scalar}


def _accumulate(acc: Terms, mono: Monomial, c) -> None:
    if mono in acc:
        acc[mono] = acc[mono] + c
    else:
        acc[mono] = c


def module_element_json(v: ModuleElement):
    """JSON array of {"h","k","l","m","coef"} sorted by (h, k, l, m)"""
    return v.to_json()
