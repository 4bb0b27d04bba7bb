"""
Testes unitários para o módulo qpoly.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.exactnum import MParamPoly, alpha, alpha_param, beta, sigma
from src.qpoly import (
    HomogPoly,
    a_poly,
    b_poly,
    coefficient_values,
    divide_by_x,
    divide_by_y,
    evaluate,
    from_distribution,
    q_derivative,
    q_inv_derivative,
    q_power,
    q_product,
    q_transform,
    scale_y,
    shift_m,
    specialize,
)
from src.verification import leibniz_x_rhs, leibniz_y_rhs

PROPERTY_SETTINGS = settings(derandomize=True, max_examples=40, deadline=None)


def params(q):
    """Coeficientes de Laurent em Q com até três termos."""
    return st.dictionaries(st.integers(-1, 1), st.integers(-3, 3), max_size=3).map(
        lambda coeffs: MParamPoly(q, coeffs)
    )


def polys(q, degree):
    return st.lists(params(q), min_size=degree + 1, max_size=degree + 1).map(lambda cs: HomogPoly(q, cs))


class TestHomogPoly:
    """Testes para a estrutura de polinômio homogêneo."""

    def test_degree(self):
        """Grau é o número de coeficientes menos um."""
        assert HomogPoly.from_coefficients(2, [1, 3, 0]).degree == 2

    def test_zero_is_identity_at_any_degree(self):
        """O polinômio nulo é neutro na soma em qualquer grau."""
        f = a_poly(2, 2)
        assert f + HomogPoly.zero(2, 0) == f
        assert HomogPoly.zero(2, 5) + f == f

    def test_zeros_are_equal(self):
        """Nulos de graus distintos são iguais."""
        assert HomogPoly.zero(2, 1) == HomogPoly.zero(2, 3)

    def test_mismatched_degrees_rejected(self):
        """Soma de graus distintos não nulos é inválida."""
        with pytest.raises(ValueError):
            a_poly(1, 2) + a_poly(2, 2)

    def test_empty_rejected(self):
        """Sem coeficientes não há polinômio."""
        with pytest.raises(ValueError):
            HomogPoly(2, [])

    def test_monomial_range(self):
        """Expoente de y fora do grau é rejeitado."""
        with pytest.raises(ValueError):
            HomogPoly.monomial(2, 2, 3)

    def test_constant_coefficients(self):
        """Coeficientes constantes viram números."""
        assert specialize(a_poly(2, 2), 2).constant_coefficients() == [1, 9, 6]

    def test_constant_coefficients_requires_constants(self):
        """Coeficientes em Q não podem ser convertidos."""
        with pytest.raises(ValueError):
            a_poly(1, 2).constant_coefficients()

    def test_from_distribution(self):
        """Enumerador com coeficientes dados."""
        assert from_distribution([1, 3, 0], 2) == HomogPoly(2, [1, 3, 0])


class TestQProduct:
    """Testes para o q-produto."""

    def test_yx_is_q_times_xy(self):
        """y * x = q (x * y)."""
        x, y = HomogPoly.x(2), HomogPoly.y(2)
        assert q_product(y, x) == 2 * q_product(x, y)

    def test_not_commutative(self):
        """x * y e y * x diferem."""
        x, y = HomogPoly.x(3), HomogPoly.y(3)
        assert q_product(x, y) != q_product(y, x)

    def test_y_power(self):
        """y^{[2]} = q y^2."""
        assert q_power(HomogPoly.y(2), 2) == HomogPoly.from_coefficients(2, [0, 0, 2])

    def test_x_power(self):
        """x^{[5]} = x^5."""
        assert q_power(HomogPoly.x(3), 5) == HomogPoly.monomial(3, 5, 0)

    def test_shifted_factor(self):
        """yx * (q^m - 1)y = (q^m - q) y^2 x."""
        Q = MParamPoly.generator(2)
        product = q_product(HomogPoly.monomial(2, 2, 1), HomogPoly(2, [0, Q - 1]))
        assert product == HomogPoly.monomial(2, 3, 2, Q - 2)

    def test_one_is_left_identity(self):
        """1 * b = b."""
        assert q_product(HomogPoly.one(2), a_poly(3, 2)) == a_poly(3, 2)

    def test_negative_power_rejected(self):
        """q-potência negativa não existe."""
        with pytest.raises(ValueError):
            q_power(HomogPoly.x(2), -1)

    def test_incompatible_bases(self):
        """Bases distintas não se multiplicam."""
        with pytest.raises(ValueError):
            q_product(HomogPoly.x(2), HomogPoly.x(3))

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("l", range(7))
    def test_a_and_b_are_q_powers(self, l, q):
        """a_l e b_l são q-potências de a_1 e b_1."""
        assert q_power(a_poly(1, q), l) == a_poly(l, q)
        assert q_power(b_poly(1, q), l) == b_poly(l, q)

    def test_a_poly_counts_vectors(self):
        """a_2(1, 1; 2) = |GF(4)^2|."""
        assert evaluate(a_poly(2, 2), 2, 1, 1) == 16

    @pytest.mark.parametrize("l", range(1, 5))
    def test_b_poly_vanishes_on_diagonal(self, l):
        """b_l(1, 1) = 0 para l >= 1."""
        assert evaluate(b_poly(l, 3), 2, 1, 1) == 0

    def test_evaluate_at_y_zero(self):
        """f(1, 0; m) = f_0(m)."""
        f = HomogPoly(2, [MParamPoly.generator(2) + 1, 5, 7])
        assert evaluate(f, 3, 1, 0) == 9

    def test_q_transform(self):
        """A transformada q de yx é y * x = q xy."""
        assert q_transform(HomogPoly.monomial(2, 2, 1)) == HomogPoly.monomial(2, 2, 1, 2)

    def test_q_transform_of_pure_powers(self):
        """x^r e y^r viram x^{[r]} e y^{[r]}."""
        assert q_transform(HomogPoly.monomial(2, 3, 0)) == q_power(HomogPoly.x(2), 3)
        assert q_transform(HomogPoly.monomial(2, 3, 3)) == q_power(HomogPoly.y(2), 3)

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), data=st.data())
    def test_distributivity(self, q, data):
        """(f + h) * g = f * g + h * g e g * (f + h) = g * f + g * h."""
        r = data.draw(st.integers(0, 4))
        s = data.draw(st.integers(0, 4))
        f, h = data.draw(polys(q, r)), data.draw(polys(q, r))
        g = data.draw(polys(q, s))
        assert q_product(f + h, g) == q_product(f, g) + q_product(h, g)
        assert q_product(g, f + h) == q_product(g, f) + q_product(g, h)

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), c=st.integers(-5, 5), data=st.data())
    def test_constants_commute(self, q, c, data):
        """Para a constante, a * b = b * a = ab."""
        f = data.draw(polys(q, data.draw(st.integers(0, 4))))
        constant = HomogPoly(q, [c])
        assert q_product(constant, f) == f * c
        assert q_product(f, constant) == f * c

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), s=st.integers(0, 3), m=st.integers(1, 4), data=st.data())
    def test_product_with_a_at_one(self, q, s, m, data):
        """(b * a_s)(1, 1; m) = q^{ms} b(1, 1; m)."""
        b = data.draw(polys(q, data.draw(st.integers(0, 4))))
        assert evaluate(q_product(b, a_poly(s, q)), m, 1, 1) == q ** (m * s) * Fraction(evaluate(b, m, 1, 1))


class TestDerivatives:
    """Testes para as q-derivadas."""

    def test_x_derivative_of_monomial(self):
        """(x^3)^{(1)} = [3 1] x^2."""
        assert q_derivative(HomogPoly.monomial(2, 3, 0), 1) == HomogPoly.monomial(2, 2, 0, 7)

    def test_x_derivative_past_degree(self):
        """Derivar além do grau dá o polinômio nulo."""
        assert q_derivative(a_poly(2, 2), 3).is_zero()

    def test_y_derivative_of_y(self):
        """y^{{1}} = 1."""
        assert q_inv_derivative(HomogPoly.y(2), 1) == HomogPoly.one(2)

    def test_y_derivative_of_y_squared(self):
        """(y^2)^{{1}} = (3/2) y para q = 2."""
        assert q_inv_derivative(HomogPoly.monomial(2, 2, 2), 1) == HomogPoly.monomial(2, 1, 1, Fraction(3, 2))

    def test_negative_order_rejected(self):
        """Ordem negativa é inválida."""
        with pytest.raises(ValueError):
            q_derivative(HomogPoly.x(2), -1)
        with pytest.raises(ValueError):
            q_inv_derivative(HomogPoly.y(2), -1)

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("l", range(6))
    def test_derivatives_of_a_and_b(self, l, q):
        """a_l^{(ν)} = β(l, ν) a_{l-ν} e b_l^{(ν)} = β(l, ν) b_{l-ν}."""
        for nu in range(l + 1):
            assert q_derivative(a_poly(l, q), nu) == a_poly(l - nu, q) * beta(l, nu, q)
            assert q_derivative(b_poly(l, q), nu) == b_poly(l - nu, q) * beta(l, nu, q)

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("l", range(6))
    def test_inverse_derivatives_of_a_and_b(self, l, q):
        """Derivadas q^{-1} de b_l e a_l em forma fechada."""
        for nu in range(l + 1):
            factor = beta(l, nu, q)
            assert q_inv_derivative(b_poly(l, q), nu) == b_poly(l - nu, q) * ((-1) ** nu * factor)
            expected = shift_m(a_poly(l - nu, q), nu) * alpha_param(nu, q) * Fraction(factor, q ** sigma(nu))
            assert q_inv_derivative(a_poly(l, q), nu) == expected

    def test_inverse_derivative_of_a_at_concrete_m(self):
        """a_2^{{1}} em m = 3, q = 2: coeficientes 3α(3,1) e (3/2)α(3,2)."""
        values = coefficient_values(q_inv_derivative(a_poly(2, 2), 1), 3)
        assert values == [3 * alpha(3, 1, 2), Fraction(3, 2) * alpha(3, 2, 2)]

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), data=st.data())
    def test_leibniz_x(self, q, data):
        """Regra de Leibniz para a q-derivada."""
        r, s = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
        nu = data.draw(st.integers(0, min(r, s, 4)))
        f, g = data.draw(polys(q, r)), data.draw(polys(q, s))
        assert q_derivative(q_product(f, g), nu) == leibniz_x_rhs(f, g, nu)

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), data=st.data())
    def test_leibniz_y(self, q, data):
        """Regra de Leibniz para a q^{-1}-derivada, com m - l no segundo fator."""
        r, s = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
        nu = data.draw(st.integers(0, min(r, s, 4)))
        f, g = data.draw(polys(q, r)), data.draw(polys(q, s))
        assert q_inv_derivative(q_product(f, g), nu) == leibniz_y_rhs(f, g, nu)


class TestDivision:
    """Testes para as divisões por x e por y do q-produto."""

    @staticmethod
    def _with_zero(f, index):
        coeffs = list(f.coeffs)
        coeffs[index] = 0
        return HomogPoly(f.q, coeffs)

    def test_divide_by_x_requires_divisibility(self):
        """x + y não é divisível por x."""
        with pytest.raises(ValueError):
            divide_by_x(HomogPoly(2, [1, 1]))

    def test_divide_by_y_requires_divisibility(self):
        """x + y não é divisível por y."""
        with pytest.raises(ValueError):
            divide_by_y(HomogPoly(2, [1, 1]))

    def test_scale_y(self):
        """b_1(x, 2y) = x - 2y."""
        assert scale_y(b_poly(1, 2), 2) == HomogPoly(2, [1, -2])

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), data=st.data())
    def test_divide_by_x(self, q, data):
        """Divisão por x com o coeficiente de y^r nulo em um dos fatores."""
        r, s = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
        f, g = data.draw(polys(q, r)), data.draw(polys(q, s))
        u = self._with_zero(f, r)
        assert divide_by_x(q_product(u, g)) == q_product(divide_by_x(u), g)
        v = self._with_zero(g, s)
        assert divide_by_x(q_product(f, v)) == q_product(scale_y(f, q), divide_by_x(v))

    @PROPERTY_SETTINGS
    @given(q=st.sampled_from([2, 3]), data=st.data())
    def test_divide_by_y(self, q, data):
        """Divisão por y com o coeficiente de x^r nulo em um dos fatores."""
        r, s = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
        f, g = data.draw(polys(q, r)), data.draw(polys(q, s))
        u = self._with_zero(f, 0)
        assert divide_by_y(q_product(u, g)) == q_product(divide_by_y(u), shift_m(g, 1)) * q**s
        v = self._with_zero(g, 0)
        assert divide_by_y(q_product(f, v)) == q_product(scale_y(f, q), divide_by_y(v))
