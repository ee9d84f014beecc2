"""
Test configuration and fixtures
"""
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from app.verma import Monomial, ParameterPoint, VermaModule


@pytest.fixture(scope="session")
def generic_point():
    """Fully symbolic (theta, d, r)"""
    return ParameterPoint.generic()


@pytest.fixture(scope="session")
def generic_module(generic_point):
    """Verma module over Q(theta, d, r); the reordering cache is shared across tests"""
    return VermaModule(generic_point)


@pytest.fixture
def specialized_point():
    """A rational point away from the reducibility locus"""
    return ParameterPoint.specialized(Fraction(1, 3), Fraction(7, 3), Fraction(5))


@pytest.fixture
def specialized_module(specialized_point):
    return VermaModule(specialized_point)


@pytest.fixture
def singular_module():
    """Build a module at d = (p-3)/2, where (2 theta C - K- F+)^p is singular"""
    def _build(p: int, theta=1, r=0) -> VermaModule:
        return VermaModule(ParameterPoint.specialized(theta, Fraction(p - 3, 2), r))
    return _build


@pytest.fixture
def random_monomials():
    """Deterministic random monomials with bounded exponents"""
    def _draw(count: int, bound: int, seed: int = 7):
        rng = random.Random(seed)
        return [Monomial(*(rng.randint(0, bound) for _ in range(4))) for _ in range(count)]
    return _draw


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Keep CLI tests independent of a developer's environment and .env"""
    from app.config import get_settings

    monkeypatch.setenv("CGA_VERMA_THREADS", "2")
    monkeypatch.setenv("CGA_VERMA_LOG_LEVEL", "WARNING")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
