"""
Tests for the contravariant form and Gram matrices
"""
from fractions import Fraction

import pytest

from app.algebra import Generator
from app.analytics.shapovalov import (
    contravariance_defect,
    gram,
    gram_det,
    gram_det_roots,
    is_nondegenerate,
    omega_word,
    pair,
    radical_contains,
)
from app.exceptions import ParameterError
from app.field import D, THETA
from app.verma import Monomial, ParameterPoint, VermaModule, WeightLabel, enumerate_basis, weight_of

G = Generator


class TestPair:
    """(u, v) = coefficient of |d,r> in omega(u) v"""

    def test_omega_word_reverses(self):
        """Test C^h K-^k F-^l F+^m maps to P-^m P+^l K+^k H^h"""
        assert omega_word(Monomial(1, 1, 1, 1)) == [G.Pminus, G.Pplus, G.Kplus, G.H]

    def test_highest_weight_normalized(self, generic_module):
        """Test <d,r|d,r> = 1"""
        hw = generic_module.highest_weight_vector()
        assert pair(generic_module, hw, hw) == generic_module.params.one

    def test_c_with_c(self, generic_module):
        """Test (C|d,r>, C|d,r>) = -2d"""
        c = generic_module.basis_vector((1, 0, 0, 0))
        assert pair(generic_module, c, c) == D * -2

    def test_c_with_kminus_fplus(self, generic_module):
        """Test (C|d,r>, K- F+|d,r>) = 4 theta"""
        c = generic_module.basis_vector((1, 0, 0, 0))
        kf = generic_module.basis_vector((0, 1, 0, 1))
        assert pair(generic_module, c, kf) == THETA * 4

    def test_different_weights_are_orthogonal(self, generic_module):
        """Test pairing across weights vanishes"""
        u = generic_module.basis_vector((1, 0, 0, 0))
        v = generic_module.basis_vector((0, 1, 0, 0))
        assert not pair(generic_module, u, v)

    def test_contravariance_on_random_pairs(self, specialized_module, random_monomials):
        """Test (x u, v) = (u, omega(x) v) with v in the weight of x u"""
        import random

        rng = random.Random(3)
        for u_mono in random_monomials(25, 2, seed=5):
            x = rng.choice(list(Generator))
            target = weight_of(u_mono).shifted(x)
            if target is None or not enumerate_basis(target):
                continue
            v_mono = rng.choice(enumerate_basis(target))
            u = specialized_module.basis_vector(u_mono)
            v = specialized_module.basis_vector(v_mono)
            assert not contravariance_defect(specialized_module, x, u, v), (x, u_mono, v_mono)

    @pytest.mark.slow
    def test_contravariance_generic(self, generic_module, random_monomials):
        """Test contravariance over Q(theta, d, r) for every generator"""
        for u_mono in random_monomials(8, 3, seed=17):
            for x in Generator:
                target = weight_of(u_mono).shifted(x)
                if target is None:
                    continue
                for v_mono in enumerate_basis(target)[:3]:
                    u = generic_module.basis_vector(u_mono)
                    v = generic_module.basis_vector(v_mono)
                    assert not contravariance_defect(generic_module, x, u, v), (x, u_mono, v_mono)


class TestGram:
    """Gram matrices over the ordered weight bases"""

    def test_level_one(self, generic_point):
        """Test (1, 0) gives [[-2d, 4 theta], [4 theta, 8 theta^2]]"""
        g = gram(WeightLabel(1, 0), generic_point)
        assert g.entries == [[D * -2, THETA * 4], [THETA * 4, THETA ** 2 * 8]]
        assert g.is_symmetric()

    def test_highest_weight_space(self, generic_point):
        """Test (0, 0) gives [[1]]"""
        assert gram(WeightLabel(0, 0), generic_point).entries == [[generic_point.one]]

    @pytest.mark.parametrize("p, q", [(2, 0), (2, 1), (2, -1), (3, 0)])
    def test_symmetric(self, generic_point, p, q):
        """Test entrywise symmetry"""
        assert gram(WeightLabel(p, q), generic_point).is_symmetric()


class TestDeterminant:
    """Gram determinants and their rational roots in d"""

    def test_level_one_determinant(self, generic_point):
        """Test det = -16 theta^2 (d + 1) with root d = -1"""
        det, roots = gram_det_roots(WeightLabel(1, 0), generic_point)
        assert det == THETA ** 2 * (D + 1) * -16
        assert roots == [Fraction(-1)]

    def test_highest_weight_determinant(self, generic_point):
        """Test det = 1 and no roots at (0, 0)"""
        det, roots = gram_det_roots(WeightLabel(0, 0), generic_point)
        assert det == generic_point.one
        assert roots == []

    def test_level_two_contains_minus_half(self):
        """Test d = -1/2 is a root at (2, 0)"""
        _, roots = gram_det_roots(WeightLabel(2, 0), ParameterPoint.generic_d(1, 0))
        assert Fraction(-1, 2) in roots

    def test_specialized_point_rejected(self, specialized_point):
        """Test roots need a symbolic d"""
        with pytest.raises(ParameterError):
            gram_det_roots(WeightLabel(1, 0), specialized_point)

    def test_specialized_determinant(self):
        """Test det at d = -1 vanishes"""
        assert not gram_det(WeightLabel(1, 0), ParameterPoint.specialized(1, -1, 0))


class TestRadical:
    """Singular vectors are null for the form"""

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_singular_vector_orthogonal_to_weight_space(self, singular_module, p):
        """Test (v_s, b) = 0 for every basis monomial b of (p, 0)"""
        module = singular_module(p)
        v_s = module.closed_form_power(p)
        for b in enumerate_basis(WeightLabel(p, 0)):
            assert not pair(module, v_s, module.basis_vector(b))

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [4, 5])
    def test_singular_vector_orthogonal_higher(self, singular_module, p):
        """Test orthogonality at p = 4, 5"""
        module = singular_module(p, theta=Fraction(1, 3), r=5)
        v_s = module.closed_form_power(p)
        for b in enumerate_basis(WeightLabel(p, 0)):
            assert not pair(module, v_s, module.basis_vector(b))

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_radical_contains_singular_vector(self, singular_module, p):
        """Test the Gram nullspace contains the singular vector's coordinates"""
        module = singular_module(p)
        assert radical_contains(WeightLabel(p, 0), module.closed_form_power(p), module.params, module)

    def test_radical_excludes_off_locus(self, specialized_module, specialized_point):
        """Test the closed power is not null at d = 7/3"""
        v = specialized_module.closed_form_power(1)
        assert not radical_contains(WeightLabel(1, 0), v, specialized_point, specialized_module)

    @pytest.mark.parametrize("p, q", [(1, 1), (2, 1), (2, -1), (3, 2), (3, -2)])
    def test_nonzero_charge_is_nondegenerate(self, p, q):
        """Test Gram matrices at q != 0 are nonsingular below the singular level"""
        for d in (Fraction(-3, 2), Fraction(1), Fraction(7, 3)):
            assert is_nondegenerate(WeightLabel(p, q), ParameterPoint.specialized(1, d, 0))

    def test_submodule_makes_nonzero_charge_degenerate(self):
        """Test K- v_s lies in the radical at (1, 1) when d = -1"""
        module = VermaModule(ParameterPoint.specialized(1, -1, 0))
        v = module.act(G.Kminus, module.closed_form_power(1))
        assert not is_nondegenerate(WeightLabel(1, 1), module.params, module)
        assert radical_contains(WeightLabel(1, 1), v, module.params, module)
