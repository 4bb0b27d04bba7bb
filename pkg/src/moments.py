"""
Momentos da distribuição de pesos de posto.

Cada identidade é devolvida como um MomentCheck com os dois lados
calculados de forma exata. Identidades cujas hipóteses não valem para o
código (ν >= d'_R, ν <= δ'_R) são marcadas como puladas, com o motivo,
e nunca como falhas.

Convenções para o dual nulo {0}: d'_R = n + 1 e δ'_R = 0.

Famílias implementadas:
- Momentos binomiais em x e em y, e seus corolários
- Identidades de Pless q-análogas (em x) e q^{-1}-análogas (em y)
- Momentos T_{λ,μ,ν}, suas reduções a T_{0,0,ν} e formas fechadas
- Somas auxiliares δ, θ, S(ν, n, m) e a ortogonalidade dos binomiais
"""

from dataclasses import dataclass, field
from fractions import Fraction
import logging
from math import comb
from typing import Dict, List, Optional, Sequence

from .exactnum import (
    Exact,
    alpha,
    alpha_p,
    beta,
    beta_p,
    gaussian,
    gaussian_p,
    normalize,
    p_stirling2,
    q_int,
    q_int_p,
    q_stirling2,
    qpow,
    sigma,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentCheck:
    """
    Os dois lados de uma identidade de momentos.

    Attributes:
        identity: Nome da identidade
        parameters: ν, λ, μ conforme o caso
        lhs: Lado esquerdo (None se pulada)
        rhs: Lado direito (None se pulada)
        reason: Motivo quando a hipótese da identidade não vale
    """

    identity: str
    parameters: Dict[str, int] = field(default_factory=dict)
    lhs: Optional[Exact] = None
    rhs: Optional[Exact] = None
    reason: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return self.reason is not None

    @property
    def holds(self) -> Optional[bool]:
        """lhs == rhs, ou None se a identidade foi pulada."""
        if self.skipped:
            return None
        return self.lhs == self.rhs

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        return "held" if self.holds else "failed"


def _check(identity: str, lhs: Exact, rhs: Exact, **parameters: int) -> MomentCheck:
    return MomentCheck(identity, parameters, normalize(Fraction(lhs)), normalize(Fraction(rhs)))


def _skip(identity: str, reason: str, **parameters: int) -> MomentCheck:
    return MomentCheck(identity, parameters, reason=reason)


def _validate_nu(nu: int, n: int) -> None:
    if not 0 <= nu <= n:
        raise ValueError(f"Esperado 0 <= nu <= n, recebido: nu={nu}, n={n}")


# =========================================================================
# Momentos binomiais
# =========================================================================

def _binomial_moment_x_lhs(A: Sequence[int], nu: int, q: int) -> Exact:
    n = len(A) - 1
    return sum(gaussian(n - i, nu, q) * A[i] for i in range(n - nu + 1))


def binomial_moment_x(
    A: Sequence[int], B: Sequence[int], k: int, nu: int, q: int, m: int
) -> MomentCheck:
    """
    Σ_{i<=n-ν} [n-i ν] A_i = q^{m(k-ν)} Σ_{j<=ν} [n-j n-ν] B_j.

    Args:
        A: Distribuição do código
        B: Distribuição do dual
        k: Dimensão do código
        nu: Ordem do momento (0 <= ν <= n)
        q, m: Corpo GF(q^m)
    """
    n = len(A) - 1
    _validate_nu(nu, n)
    lhs = _binomial_moment_x_lhs(A, nu, q)
    rhs = qpow(q, m * (k - nu)) * sum(gaussian(n - j, n - nu, q) * B[j] for j in range(nu + 1))
    return _check("binomial_moment_x", lhs, rhs, nu=nu)


def binomial_moment_x_simplified(
    A: Sequence[int], k: int, nu: int, d_dual: int, q: int, m: int
) -> MomentCheck:
    """Para ν < d'_R: Σ_{i<=n-ν} [n-i ν] A_i = q^{m(k-ν)} [n ν]."""
    n = len(A) - 1
    _validate_nu(nu, n)
    if nu >= d_dual:
        return _skip("binomial_moment_x_simplified", f"nu={nu} >= d'={d_dual}", nu=nu)
    rhs = qpow(q, m * (k - nu)) * gaussian(n, nu, q)
    return _check("binomial_moment_x_simplified", _binomial_moment_x_lhs(A, nu, q), rhs, nu=nu)


def _binomial_moment_y_lhs(A: Sequence[int], nu: int, q: int) -> Exact:
    n = len(A) - 1
    return sum(gaussian(i, nu, q) * q ** (nu * (n - i)) * A[i] for i in range(nu, n + 1))


def _binomial_moment_y_sum(W: Sequence[int], nu: int, q: int, m: int) -> Exact:
    n = len(W) - 1
    total: Exact = 0
    for j in range(nu + 1):
        term = (
            gaussian(n - j, n - nu, q)
            * q ** (sigma(j) + j * (nu - j))
            * alpha(m - j, nu - j, q)
            * W[j]
        )
        total += -term if j % 2 else term
    return total


def binomial_moment_y(
    A: Sequence[int], B: Sequence[int], k: int, nu: int, q: int, m: int
) -> MomentCheck:
    """
    Σ_{i>=ν} [i ν] q^{ν(n-i)} A_i
    = q^{m(k-ν)} Σ_{j<=ν} [n-j n-ν] (-1)^j q^{σ_j} α(m-j, ν-j) q^{j(ν-j)} B_j.
    """
    n = len(A) - 1
    _validate_nu(nu, n)
    lhs = _binomial_moment_y_lhs(A, nu, q)
    rhs = qpow(q, m * (k - nu)) * _binomial_moment_y_sum(B, nu, q, m)
    return _check("binomial_moment_y", lhs, rhs, nu=nu)


def binomial_moment_y_min_distance(
    A: Sequence[int], k: int, nu: int, d_dual: int, q: int, m: int
) -> MomentCheck:
    """Para ν < d'_R: Σ_{i>=ν} [i ν] q^{ν(n-i)} A_i = q^{m(k-ν)} [n ν] α(m, ν)."""
    n = len(A) - 1
    _validate_nu(nu, n)
    if nu >= d_dual:
        return _skip("binomial_moment_y_min_distance", f"nu={nu} >= d'={d_dual}", nu=nu)
    rhs = qpow(q, m * (k - nu)) * gaussian(n, nu, q) * alpha(m, nu, q)
    return _check("binomial_moment_y_min_distance", _binomial_moment_y_lhs(A, nu, q), rhs, nu=nu)


def binomial_moment_y_diameter(
    A: Sequence[int], nu: int, diameter_dual: int, q: int, m: int
) -> MomentCheck:
    """
    Para δ'_R < ν <= n:
    Σ_{i<=ν} [n-i n-ν] (-1)^i q^{σ_i} α(m-i, ν-i) q^{i(ν-i)} A_i = 0.
    """
    n = len(A) - 1
    _validate_nu(nu, n)
    if nu <= diameter_dual:
        return _skip("binomial_moment_y_diameter", f"nu={nu} <= diametro'={diameter_dual}", nu=nu)
    return _check("binomial_moment_y_diameter", _binomial_moment_y_sum(A, nu, q, m), 0, nu=nu)


def binomial_moment_y_corollaries(
    A: Sequence[int], k: int, nu: int, d_dual: int, diameter_dual: int, q: int, m: int
) -> List[MomentCheck]:
    """As duas especializações do momento binomial em y."""
    return [
        binomial_moment_y_min_distance(A, k, nu, d_dual, q, m),
        binomial_moment_y_diameter(A, nu, diameter_dual, q, m),
    ]


# =========================================================================
# Identidades de Pless
# =========================================================================

def _pless_x_lhs(A: Sequence[int], k: int, nu: int, q: int, m: int) -> Exact:
    n = len(A) - 1
    total = sum(q_int(n - i, q) ** nu * A[i] for i in range(n + 1))
    return Fraction(total, q ** (m * k))


def _pless_x_closed(n: int, nu: int, q: int, m: int) -> Exact:
    return sum(
        Fraction(beta(n, l, q)) * q_stirling2(nu, l, q) * qpow(q, -m * l + sigma(l))
        for l in range(nu + 1)
    )


def pless_x(
    A: Sequence[int], B: Sequence[int], k: int, nu: int, q: int, m: int
) -> MomentCheck:
    """
    q^{-mk} Σ_i [n-i 1]^ν A_i
    = Σ_{j<=ν} B_j Σ_{l<=ν} [n-j n-l] β(l, l) S_q(ν, l) q^{-ml+σ_l}.
    """
    n = len(A) - 1
    _validate_nu(nu, n)
    rhs: Exact = 0
    for j in range(nu + 1):
        inner = sum(
            Fraction(gaussian(n - j, n - l, q) * beta(l, l, q))
            * q_stirling2(nu, l, q)
            * qpow(q, -m * l + sigma(l))
            for l in range(nu + 1)
        )
        rhs += B[j] * inner
    return _check("pless_x", _pless_x_lhs(A, k, nu, q, m), rhs, nu=nu)


def pless_x_simplified(
    A: Sequence[int], k: int, nu: int, d_dual: int, q: int, m: int
) -> MomentCheck:
    """Para ν < d'_R: q^{-mk} Σ_i [n-i 1]^ν A_i = Σ_l β(n, l) S_q(ν, l) q^{-ml+σ_l}."""
    n = len(A) - 1
    _validate_nu(nu, n)
    if nu >= d_dual:
        return _skip("pless_x_simplified", f"nu={nu} >= d'={d_dual}", nu=nu)
    return _check("pless_x_simplified", _pless_x_lhs(A, k, nu, q, m), _pless_x_closed(n, nu, q, m), nu=nu)


def pless_x_closed_forms(n: int, nu: int, q: int, m: int) -> MomentCheck:
    """
    Σ_l β(n, l) S_q(ν, l) q^{-ml+σ_l} = q^{-mn} Σ_i [n-i 1]^ν [n i] α(m, i).
    """
    whole_space = Fraction(
        sum(q_int(n - i, q) ** nu * gaussian(n, i, q) * alpha(m, i, q) for i in range(n + 1)),
        q ** (m * n),
    )
    return _check("pless_x_closed_forms", _pless_x_closed(n, nu, q, m), whole_space, nu=nu)


def _pless_y_lhs(A: Sequence[int], k: int, nu: int, q: int, m: int) -> Exact:
    n = len(A) - 1
    total = sum(Fraction(q_int_p(i, q)) ** nu * A[i] for i in range(n + 1))
    return total / q ** (m * k)


def pless_y(
    A: Sequence[int], B: Sequence[int], k: int, nu: int, q: int, m: int
) -> MomentCheck:
    """
    Análogo em p = 1/q:
    p^{mk} Σ_i [i 1]_p^ν A_i
    = Σ_{j<=ν} B_j p^{j(m+n-j)} Σ_{l=j}^{ν} β_p(l,l) S_p(ν,l) (-1)^l [n-j n-l]_p α_p(m-j, l-j).
    """
    n = len(A) - 1
    _validate_nu(nu, n)
    p = Fraction(1, q)
    rhs: Exact = 0
    for j in range(nu + 1):
        inner = Fraction(0)
        for l in range(j, nu + 1):
            term = (
                Fraction(beta_p(l, l, q))
                * p_stirling2(nu, l, q)
                * gaussian_p(n - j, n - l, q)
                * alpha_p(m - j, l - j, q)
            )
            inner += -term if l % 2 else term
        rhs += B[j] * p ** (j * (m + n - j)) * inner
    return _check("pless_y", _pless_y_lhs(A, k, nu, q, m), rhs, nu=nu)


def pless_y_simplified(
    A: Sequence[int], k: int, nu: int, d_dual: int, q: int, m: int
) -> MomentCheck:
    """Para ν < d'_R: p^{mk} Σ_i [i 1]_p^ν A_i = Σ_l β_p(n,l) S_p(ν,l) α_p(m,l) (-1)^l."""
    n = len(A) - 1
    _validate_nu(nu, n)
    if nu >= d_dual:
        return _skip("pless_y_simplified", f"nu={nu} >= d'={d_dual}", nu=nu)
    rhs = Fraction(0)
    for l in range(nu + 1):
        term = Fraction(beta_p(n, l, q)) * p_stirling2(nu, l, q) * alpha_p(m, l, q)
        rhs += -term if l % 2 else term
    return _check("pless_y_simplified", _pless_y_lhs(A, k, nu, q, m), rhs, nu=nu)


# =========================================================================
# Momentos T
# =========================================================================

def t_moment(
    A: Sequence[int], k: int, lam: int, mu: int, nu: int, q: int, m: int
) -> Exact:
    """
    T_{λ,μ,ν} = q^{-mk} Σ_i [i λ]^μ q^{ν(n-i)} A_i.

    ν pode ser negativo; as potências de q são então racionais.

    Examples:
        >>> t_moment([1, 9, 6], 2, 0, 0, 1, 2, 2)
        Fraction(7, 4)
    """
    if lam < 0 or mu < 0:
        raise ValueError(f"lambda e mu devem ser >= 0, recebidos: {lam}, {mu}")
    n = len(A) - 1
    total = sum(
        Fraction(gaussian(i, lam, q) ** mu) * qpow(q, nu * (n - i)) * A[i]
        for i in range(n + 1)
    )
    return normalize(total / q ** (m * k))


def t_lambda_reduction(A: Sequence[int], k: int, lam: int, nu: int, q: int, m: int) -> Exact:
    """T_{λ,1,ν} como combinação de T_{0,0,ν-λ+l}."""
    n = len(A) - 1
    total = Fraction(0)
    for l in range(lam + 1):
        term = (
            gaussian(lam, l, q)
            * q ** (sigma(l) + n * (lam - l))
            * Fraction(t_moment(A, k, 0, 0, nu - lam + l, q, m))
        )
        total += -term if l % 2 else term
    return normalize(total / alpha(lam, lam, q))


def t_mu_reduction(A: Sequence[int], k: int, mu: int, nu: int, q: int, m: int) -> Exact:
    """T_{1,μ,ν} como combinação de T_{0,0,ν-a}."""
    n = len(A) - 1
    total = Fraction(0)
    for a in range(mu + 1):
        term = comb(mu, a) * q ** (a * n) * Fraction(t_moment(A, k, 0, 0, nu - a, q, m))
        total += -term if a % 2 else term
    return normalize(total * Fraction(1 - q) ** (-mu))


def t_reductions(
    A: Sequence[int], k: int, lam: int, mu: int, nu: int, q: int, m: int
) -> List[MomentCheck]:
    """Compara T_{λ,1,ν} e T_{1,μ,ν} diretos com as reduções a T_{0,0,·}."""
    return [
        _check(
            "t_reduction_lambda",
            t_moment(A, k, lam, 1, nu, q, m),
            t_lambda_reduction(A, k, lam, nu, q, m),
            **{"lambda": lam, "nu": nu},
        ),
        _check(
            "t_reduction_mu",
            t_moment(A, k, 1, mu, nu, q, m),
            t_mu_reduction(A, k, mu, nu, q, m),
            mu=mu,
            nu=nu,
        ),
    ]


def s_sum(nu: int, n: int, m: int, q: int) -> Exact:
    """
    S(ν, n, m) = Σ_{j<=ν} [ν j] α(n, j) q^{-mj}.

    Valem S(ν, n, m) = S(n, ν, m) e S(ν, n, m) = q^{ν(n-m)} S(ν, m, n).
    """
    return normalize(
        sum(Fraction(gaussian(nu, j, q) * alpha(n, j, q), q ** (m * j)) for j in range(nu + 1))
    )


def _whole_space_moment(n: int, nu: int, q: int, m: int) -> Exact:
    total = sum(
        Fraction(gaussian(n, i, q) * alpha(m, i, q)) * qpow(q, nu * (n - i))
        for i in range(n + 1)
    )
    return normalize(total / q ** (m * n))


def _swapped_moment(n: int, nu: int, q: int, m: int) -> Exact:
    total = sum(
        gaussian(nu, l, q) * alpha(m, l, q) * q ** (n * (nu - l)) for l in range(nu + 1)
    )
    return normalize(Fraction(total, q ** (m * nu)))


def t_closed_forms(
    A: Sequence[int], k: int, nu: int, d_dual: int, q: int, m: int
) -> List[MomentCheck]:
    """
    Para ν < d'_R, T_{0,0,ν} não depende do código e coincide com três
    formas fechadas; T_{λ,1,ν} e T_{1,μ,ν} (λ, μ <= ν) coincidem com os
    valores do espaço inteiro.
    """
    n = len(A) - 1
    _validate_nu(nu, n)
    if nu >= d_dual:
        return [_skip("t_closed_forms", f"nu={nu} >= d'={d_dual}", nu=nu)]

    moment = t_moment(A, k, 0, 0, nu, q, m)
    checks = [
        _check("t_closed_form_sum", moment, s_sum(nu, n, m, q), nu=nu),
        _check("t_closed_form_whole_space", moment, _whole_space_moment(n, nu, q, m), nu=nu),
        _check("t_closed_form_swapped", moment, _swapped_moment(n, nu, q, m), nu=nu),
    ]
    scale = q ** (m * n)
    for lam in range(nu + 1):
        closed = gaussian(n, lam, q) * sum(
            gaussian(n - lam, i - lam, q) * q ** (nu * (n - i)) * alpha(m, i, q)
            for i in range(lam, n + 1)
        )
        checks.append(_check(
            "t_lambda_closed_form", t_moment(A, k, lam, 1, nu, q, m),
            Fraction(closed, scale), **{"lambda": lam, "nu": nu},
        ))
    for mu in range(nu + 1):
        closed = sum(
            q_int(i, q) ** mu * q ** (nu * (n - i)) * gaussian(n, i, q) * alpha(m, i, q)
            for i in range(n + 1)
        )
        checks.append(_check(
            "t_mu_closed_form", t_moment(A, k, 1, mu, nu, q, m),
            Fraction(closed, scale), mu=mu, nu=nu,
        ))
    return checks


# =========================================================================
# Somas auxiliares
# =========================================================================

def delta_sum(m: int, nu: int, j: int, q: int) -> Exact:
    """δ(m, ν, j) = Σ_{i<=j} [j i] (-1)^i q^{σ_i} α(m-i, ν)."""
    total: Exact = 0
    for i in range(j + 1):
        term = gaussian(j, i, q) * q ** sigma(i) * alpha(m - i, nu, q)
        total += -term if i % 2 else term
    return normalize(total)


def delta_closed(m: int, nu: int, j: int, q: int) -> Exact:
    """
    α(ν, j) α(m-j, ν-j) q^{j(m-j)}.

    Examples:
        >>> delta_closed(3, 2, 1, 2)
        36
    """
    if j > nu:
        return 0
    return normalize(alpha(nu, j, q) * alpha(m - j, nu - j, q) * qpow(q, j * (m - j)))


def theta_sum(n: int, nu: int, j: int, q: int) -> Exact:
    """θ(n, ν, j) = Σ_{l<=j} [j l][n-j ν-l] q^{l(n-ν)} (-1)^l q^{σ_l} α(ν-l, j-l)."""
    total: Exact = 0
    for l in range(j + 1):
        binomials = gaussian(j, l, q) * gaussian(n - j, nu - l, q)
        if binomials == 0:
            continue
        term = binomials * qpow(q, l * (n - nu) + sigma(l)) * alpha(nu - l, j - l, q)
        total += -term if l % 2 else term
    return normalize(total)


def theta_closed(n: int, nu: int, j: int, q: int) -> Exact:
    """(-1)^j q^{σ_j} [n-j n-ν]."""
    return (-1) ** j * q ** sigma(j) * gaussian(n - j, n - nu, q)


def orthogonality_sum(nu: int, l: int, q: int) -> Exact:
    """Σ_{j<=ν-l} [ν-l j] (-1)^j q^{σ_j}, igual a 1 se ν = l e 0 caso contrário."""
    return sum((-1) ** j * q ** sigma(j) * gaussian(nu - l, j, q) for j in range(nu - l + 1))


# =========================================================================
# Suíte completa
# =========================================================================

def moment_suite(
    A: Sequence[int],
    B: Sequence[int],
    k: int,
    q: int,
    m: int,
    d_dual: int,
    diameter_dual: int,
    nus: Optional[Sequence[int]] = None,
) -> List[MomentCheck]:
    """
    Todas as identidades de momentos de um par (A, B) para cada ν.

    Args:
        A: Distribuição do código
        B: Distribuição do dual
        k: Dimensão do código
        q, m: Corpo GF(q^m)
        d_dual: Distância mínima do dual (n + 1 para o dual nulo)
        diameter_dual: Diâmetro do dual (0 para o dual nulo)
        nus: Valores de ν (padrão: 0..n)

    Returns:
        Lista de MomentCheck
    """
    n = len(A) - 1
    checks: List[MomentCheck] = []
    for nu in (range(n + 1) if nus is None else nus):
        checks.append(binomial_moment_x(A, B, k, nu, q, m))
        checks.append(binomial_moment_x_simplified(A, k, nu, d_dual, q, m))
        checks.append(binomial_moment_y(A, B, k, nu, q, m))
        checks.extend(binomial_moment_y_corollaries(A, k, nu, d_dual, diameter_dual, q, m))
        checks.append(pless_x(A, B, k, nu, q, m))
        checks.append(pless_x_simplified(A, k, nu, d_dual, q, m))
        checks.append(pless_x_closed_forms(n, nu, q, m))
        checks.append(pless_y(A, B, k, nu, q, m))
        checks.append(pless_y_simplified(A, k, nu, d_dual, q, m))
        for lam_mu in range(nu + 1):
            checks.extend(t_reductions(A, k, lam_mu, lam_mu, nu, q, m))
        checks.extend(t_closed_forms(A, k, nu, d_dual, q, m))

    logger.debug("Suíte de momentos: %d verificações (n=%d, k=%d)", len(checks), n, k)
    return checks
