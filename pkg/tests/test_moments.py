"""
Testes unitários para o módulo moments.
"""

from fractions import Fraction

import pytest

from src.exactnum import qpow
from src.gfcodes import brute_distribution, dual_code
from src.moments import (
    MomentCheck,
    binomial_moment_x,
    binomial_moment_x_simplified,
    binomial_moment_y,
    binomial_moment_y_diameter,
    binomial_moment_y_min_distance,
    delta_closed,
    delta_sum,
    moment_suite,
    orthogonality_sum,
    pless_x,
    pless_x_closed_forms,
    pless_x_simplified,
    pless_y,
    pless_y_simplified,
    s_sum,
    t_closed_forms,
    t_moment,
    t_reductions,
    theta_closed,
    theta_sum,
)

WHOLE_A, WHOLE_B = (1, 9, 6), (1, 0, 0)
REPETITION = (1, 3, 0)


def dual_parameters(B):
    """(d', δ') com as convenções do dual nulo."""
    n = len(B) - 1
    d = next((i for i in range(1, n + 1) if B[i]), n + 1)
    top = next((i for i in range(n, 0, -1) if B[i]), 0)
    return d, top


class TestMomentCheck:
    """Testes para o resultado de uma identidade."""

    def test_held(self):
        """Lados iguais."""
        check = MomentCheck("x", {"nu": 0}, 3, 3)
        assert check.holds is True
        assert check.status == "held"

    def test_failed(self):
        """Lados diferentes."""
        assert MomentCheck("x", {}, 1, 2).status == "failed"

    def test_skipped(self):
        """Hipótese não satisfeita não é falha."""
        check = MomentCheck("x", reason="nu=2 >= d'=2")
        assert check.skipped
        assert check.holds is None
        assert check.status == "skipped"


class TestBinomialMoments:
    """Testes para os momentos binomiais."""

    def test_binomial_x_whole_space(self):
        """GF(4)^2 em ν = 1: ambos os lados valem 12."""
        check = binomial_moment_x(WHOLE_A, WHOLE_B, 2, 1, 2, 2)
        assert (check.lhs, check.rhs) == (12, 12)

    @pytest.mark.parametrize("nu", [0, 1, 2])
    def test_binomial_y_repetition(self, nu):
        """Repetição sobre GF(4), autodual."""
        assert binomial_moment_y(REPETITION, REPETITION, 1, nu, 2, 2).holds

    def test_simplified_skips_at_dual_distance(self):
        """ν >= d' é pulado com motivo."""
        check = binomial_moment_x_simplified(REPETITION, 1, 1, 1, 2, 2)
        assert check.status == "skipped"
        assert "d'=1" in check.reason

    def test_simplified_whole_space(self):
        """Dual nulo: d' = n + 1 e todo ν vale."""
        for nu in range(3):
            assert binomial_moment_x_simplified(WHOLE_A, 2, nu, 3, 2, 2).holds
            assert binomial_moment_y_min_distance(WHOLE_A, 2, nu, 3, 2, 2).holds

    def test_diameter_corollary(self):
        """Repetição tem δ' = 1; em ν = 2 a soma é nula."""
        check = binomial_moment_y_diameter(REPETITION, 2, 1, 2, 2)
        assert check.holds
        assert check.lhs == 0

    def test_diameter_corollary_skip(self):
        """ν <= δ' é pulado."""
        assert binomial_moment_y_diameter(REPETITION, 1, 1, 2, 2).skipped

    def test_nu_out_of_range(self):
        """ν > n é inválido."""
        with pytest.raises(ValueError):
            binomial_moment_x(WHOLE_A, WHOLE_B, 2, 3, 2, 2)


class TestPless:
    """Testes para as identidades de Pless."""

    def test_pless_y_whole_space(self):
        """p^{mk} Σ [i 1]_p A_i = 9/8 para GF(4)^2 em ν = 1."""
        check = pless_y(WHOLE_A, WHOLE_B, 2, 1, 2, 2)
        assert check.lhs == Fraction(9, 8)
        assert check.holds

    @pytest.mark.parametrize("nu", [0, 1, 2])
    def test_pless_x_repetition(self, nu):
        """Forma em x para a repetição."""
        assert pless_x(REPETITION, REPETITION, 1, nu, 2, 2).holds

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("n, m", [(2, 2), (3, 2), (2, 4), (4, 3)])
    def test_closed_forms(self, n, m, q):
        """Soma de Stirling e momento do espaço inteiro coincidem."""
        for nu in range(n + 1):
            assert pless_x_closed_forms(n, nu, q, m).holds

    def test_simplified_whole_space(self):
        """Dual nulo: as formas simplificadas valem para todo ν."""
        for nu in range(3):
            assert pless_x_simplified(WHOLE_A, 2, nu, 3, 2, 2).holds
            assert pless_y_simplified(WHOLE_A, 2, nu, 3, 2, 2).holds

    def test_simplified_skip(self):
        """Repetição tem d' = 1: ν = 1 é pulado."""
        assert pless_x_simplified(REPETITION, 1, 1, 1, 2, 2).skipped
        assert pless_y_simplified(REPETITION, 1, 1, 1, 2, 2).skipped


class TestTMoments:
    """Testes para os momentos T."""

    def test_value(self):
        """T_{0,0,1} de GF(4)^2 vale 7/4."""
        assert t_moment(WHOLE_A, 2, 0, 0, 1, 2, 2) == Fraction(7, 4)

    def test_negative_lambda_rejected(self):
        """λ e μ devem ser não negativos."""
        with pytest.raises(ValueError):
            t_moment(WHOLE_A, 2, -1, 0, 1, 2, 2)

    @pytest.mark.parametrize("nu", [-1, 0, 1, 2])
    def test_reductions(self, nu):
        """Reduções de T_{λ,1,ν} e T_{1,μ,ν} a T_{0,0,·}."""
        for lam_mu in range(3):
            for check in t_reductions(REPETITION, 1, lam_mu, lam_mu, nu, 2, 2):
                assert check.holds, check

    def test_closed_forms_whole_space(self):
        """Sem restrição de ν para o espaço inteiro."""
        for nu in range(3):
            checks = t_closed_forms(WHOLE_A, 2, nu, 3, 2, 2)
            assert all(check.holds for check in checks)

    def test_closed_forms_skip(self):
        """ν >= d' dá um único resultado pulado."""
        checks = t_closed_forms(REPETITION, 1, 1, 1, 2, 2)
        assert len(checks) == 1
        assert checks[0].skipped


class TestAuxiliarySums:
    """Testes para δ, θ, S e a ortogonalidade dos binomiais."""

    def test_delta_example(self):
        """δ(3, 2, 1) = 36 nas duas formas."""
        assert delta_closed(3, 2, 1, 2) == 36
        assert delta_sum(3, 2, 1, 2) == 36

    @pytest.mark.parametrize("q", [2, 3])
    def test_delta_grid(self, q):
        """δ em forma fechada para j <= ν <= m."""
        for m in range(5):
            for nu in range(m + 1):
                for j in range(nu + 1):
                    assert delta_sum(m, nu, j, q) == delta_closed(m, nu, j, q)

    @pytest.mark.parametrize("q", [2, 3])
    def test_theta_grid(self, q):
        """θ em forma fechada para j <= ν <= n."""
        for n in range(6):
            for nu in range(n + 1):
                for j in range(nu + 1):
                    assert theta_sum(n, nu, j, q) == theta_closed(n, nu, j, q)

    def test_orthogonality(self):
        """Igual a 1 se ν = l e 0 caso contrário."""
        assert orthogonality_sum(3, 3, 2) == 1
        assert orthogonality_sum(3, 1, 2) == 0
        assert orthogonality_sum(4, 0, 3) == 0

    @pytest.mark.parametrize("q", [2, 3])
    def test_s_sum_symmetries(self, q):
        """S(ν, n, m) = S(n, ν, m) = q^{ν(n-m)} S(ν, m, n)."""
        for nu in range(1, 5):
            for n in range(1, 5):
                for m in range(1, 5):
                    assert s_sum(nu, n, m, q) == s_sum(n, nu, m, q)
                    assert s_sum(nu, n, m, q) == Fraction(qpow(q, nu * (n - m))) * s_sum(nu, m, n, q)

    def test_s_sum_example(self):
        """S(1, 2, 3) = 11/8 para q = 2."""
        assert s_sum(1, 2, 3, 2) == Fraction(11, 8)


class TestMomentSuite:
    """Testes para a suíte completa sobre códigos concretos."""

    @pytest.mark.parametrize(
        "fixture", ["zero_gf4", "repetition_gf4", "whole_gf4", "gabidulin_gf4", "gabidulin_gf8"]
    )
    def test_no_failures(self, fixture, request):
        """Nenhuma identidade falha em códigos reais."""
        code = request.getfixturevalue(fixture)
        A = brute_distribution(code).counts
        B = brute_distribution(dual_code(code)).counts
        d_dual, diameter_dual = dual_parameters(B)
        checks = moment_suite(A, B, code.k, code.field.q, code.field.m, d_dual, diameter_dual)
        failures = [check for check in checks if check.status == "failed"]
        assert failures == []
        assert any(check.status == "held" for check in checks)

    def test_custom_nus(self):
        """ν restrito à lista dada."""
        checks = moment_suite(REPETITION, REPETITION, 1, 2, 2, 1, 1, nus=[0])
        assert {check.parameters.get("nu") for check in checks} == {0}
