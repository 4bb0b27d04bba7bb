"""
Identidade de MacWilliams para a métrica do posto.

A distribuição B do dual de um código (n, k) sobre GF(q^m) é obtida da
distribuição A por duas vias equivalentes:
- funcional: B_j = q^{-mk} · [y^j x^{n-j}] Σ_i A_i (x - y)^{[i]} * a_{n-i}
- Krawtchouk: B_j = q^{-mk} Σ_i A_i P_j(i; m, n)

Também contém os blocos de construção: enumeradores de ⟨v⟩⊥ e de produtos
cartesianos C0 × GF(q^m)^s.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging
from typing import List, Optional, Sequence, Tuple

from .exactnum import Exact, MParamPoly, alpha, gaussian, normalize, sigma
from .gfcodes import LinearCode, RankDistribution, brute_distribution, dual_code
from .qpoly import HomogPoly, a_poly, b_poly, coefficient_values, q_product, specialize

logger = logging.getLogger(__name__)

METHODS = ("functional", "krawtchouk", "brute")


class NotACodeDistributionError(ValueError):
    """A transformada produziu valores não inteiros: a entrada não vem de um código linear."""

    def __init__(self, values: Sequence[Exact]):
        self.values = tuple(values)
        fractional = [str(v) for v in self.values if isinstance(v, Fraction)]
        super().__init__(
            "Transformada com valores não inteiros "
            f"({', '.join(fractional)}); a distribuição não é de um código linear"
        )


@dataclass(frozen=True)
class TransformReport:
    """
    Entrada e saída de uma transformada de MacWilliams.

    Attributes:
        source: Distribuição A do código
        result: Distribuição B do dual
        method: 'functional', 'krawtchouk' ou 'brute'
        q, m, n, k: Parâmetros do código
    """

    source: RankDistribution
    result: RankDistribution
    method: str
    q: int
    m: int
    n: int
    k: int


def _to_distribution(values: Sequence[Exact]) -> RankDistribution:
    if any(isinstance(v, Fraction) for v in values):
        raise NotACodeDistributionError(values)
    return RankDistribution(tuple(int(v) for v in values))


# =========================================================================
# Blocos de construção
# =========================================================================

def mrd_r_enumerator(r: int, m: int, q: int) -> HomogPoly:
    """
    Enumerador de ⟨v⟩⊥ em GF(q^m)^r para v de posto r.

    q^{-m}{a_r + (q^m - 1) b_r}, avaliado em m. É também o enumerador de
    qualquer código MRD (r, r-1, 2).

    Raises:
        ValueError: Se r < 0 ou r > m

    Examples:
        >>> mrd_r_enumerator(2, 2, 2).constant_coefficients()
        [1, 0, 3]
    """
    if not 0 <= r <= m:
        raise ValueError(f"Esperado 0 <= r <= m, recebido: r={r}, m={m}")
    Q = MParamPoly.generator(q)
    poly = (a_poly(r, q) + b_poly(r, q) * (Q - 1)) * MParamPoly(q, {-1: 1})
    return specialize(poly, m)


def vector_rank_enumerator(r: int, m: int, q: int) -> HomogPoly:
    """
    Mesma distribuição de mrd_r_enumerator, pela forma A_{r,p} = [r p] A_{p,p}
    com A_{p,p} = q^{-m}[α(m,p) + (q^m - 1)(-1)^p q^{σ_p}].
    """
    if not 0 <= r <= m:
        raise ValueError(f"Esperado 0 <= r <= m, recebido: r={r}, m={m}")
    coeffs = []
    for p in range(r + 1):
        diagonal = Fraction(alpha(m, p, q) + (q**m - 1) * (-1) ** p * q ** sigma(p), q**m)
        coeffs.append(normalize(gaussian(r, p, q) * diagonal))
    return HomogPoly(q, coeffs)


def dual_vector_enumerator(n: int, r: int, m: int, q: int) -> HomogPoly:
    """
    Enumerador de ⟨v⟩⊥ em GF(q^m)^n para qualquer v de posto r.

    q^{-m}{a_n + (q^m - 1) b_r * a_{n-r}}, avaliado em m.

    Raises:
        ValueError: Se r estiver fora de [0, min(m, n)]
    """
    if not 0 <= r <= min(m, n):
        raise ValueError(f"Esperado 0 <= r <= min(m, n), recebido: r={r}, m={m}, n={n}")
    Q = MParamPoly.generator(q)
    poly = a_poly(n, q) + q_product(b_poly(r, q), a_poly(n - r, q)) * (Q - 1)
    return specialize(poly * MParamPoly(q, {-1: 1}), m)


def cartesian_enumerator(w0: HomogPoly, s: int, m: int) -> HomogPoly:
    """
    Enumerador de C0 × GF(q^m)^s pela forma fechada
    B_{s,u} = Σ_i q^{is} B_{0,i} [s u-i] α(m-i, u-i).

    Args:
        w0: Enumerador de C0 (coeficientes constantes)
        s: Número de coordenadas livres acrescentadas
        m: Grau da extensão

    Returns:
        HomogPoly de grau r + s
    """
    q = w0.q
    base = w0.constant_coefficients()
    r = w0.degree
    coeffs: List[Exact] = []
    for u in range(r + s + 1):
        total: Exact = 0
        for i in range(max(0, u - s), min(r, u) + 1):
            total += q ** (i * s) * base[i] * gaussian(s, u - i, q) * alpha(m - i, u - i, q)
        coeffs.append(normalize(total))
    return HomogPoly(q, coeffs)


# =========================================================================
# Transformada
# =========================================================================

@lru_cache(maxsize=None)
def _kernel(i: int, n: int, q: int) -> HomogPoly:
    return q_product(b_poly(i, q), a_poly(n - i, q))


def kernel_coefficients(i: int, n: int, m: int, q: int) -> List[Exact]:
    """Coeficientes de (x - y)^{[i]} * a_{n-i} avaliados em m."""
    return coefficient_values(_kernel(i, n, q), m)


def macwilliams_functional(
    A: Sequence[int], k: int, q: int, m: int
) -> RankDistribution:
    """
    Distribuição do dual pela forma funcional da identidade.

    Args:
        A: A_0, ..., A_n
        k: Dimensão do código
        q, m: Corpo GF(q^m)

    Returns:
        B_0, ..., B_n

    Raises:
        NotACodeDistributionError: Se algum B_j não for inteiro

    Examples:
        >>> macwilliams_functional([1, 3, 0], 1, 2, 2).counts
        (1, 3, 0)
    """
    n = len(A) - 1
    poly = HomogPoly.zero(q, n)
    for i, count in enumerate(A):
        if count:
            poly = poly + _kernel(i, n, q) * count
    scale = Fraction(1, q ** (m * k))
    return _to_distribution([normalize(Fraction(v) * scale) for v in coefficient_values(poly, m)])


def krawtchouk(j: int, i: int, m: int, n: int, q: int) -> Exact:
    """
    Polinômio de Krawtchouk generalizado P_j(i; m, n).

    P_j(i; m, n) = Σ_l [i l][n-i j-l] (-1)^l q^{σ_l + l(n-i)} α(m-l, j-l),
    o coeficiente de y^j x^{n-j} em (x - y)^{[i]} * a_{n-i}.

    Examples:
        >>> krawtchouk(1, 0, 2, 2, 2)
        9
        >>> krawtchouk(2, 1, 2, 2, 2)
        -2
    """
    if not 0 <= j <= n or not 0 <= i <= n:
        raise ValueError(f"Esperado 0 <= i, j <= n, recebido: i={i}, j={j}, n={n}")
    total: Exact = 0
    for l in range(j + 1):
        term = (
            gaussian(i, l, q)
            * gaussian(n - i, j - l, q)
            * q ** (sigma(l) + l * (n - i))
            * alpha(m - l, j - l, q)
        )
        total += -term if l % 2 else term
    return normalize(total)


def macwilliams_krawtchouk(
    A: Sequence[int], k: int, q: int, m: int
) -> RankDistribution:
    """
    Distribuição do dual por B_j = q^{-mk} Σ_i A_i P_j(i; m, n).

    Raises:
        NotACodeDistributionError: Se algum B_j não for inteiro
    """
    n = len(A) - 1
    scale = Fraction(1, q ** (m * k))
    values = []
    for j in range(n + 1):
        total = sum(count * krawtchouk(j, i, m, n, q) for i, count in enumerate(A) if count)
        values.append(normalize(Fraction(total) * scale))
    return _to_distribution(values)


def transform(
    A: Sequence[int], k: int, q: int, m: int, method: str = "functional"
) -> TransformReport:
    """
    Aplica a identidade de MacWilliams pelo método escolhido.

    Args:
        A: Distribuição do código
        k: Dimensão do código
        q, m: Corpo GF(q^m)
        method: 'functional' ou 'krawtchouk'

    Returns:
        TransformReport com a distribuição do dual
    """
    source = RankDistribution(tuple(A))
    if method == "functional":
        result = macwilliams_functional(source, k, q, m)
    elif method == "krawtchouk":
        result = macwilliams_krawtchouk(source, k, q, m)
    else:
        raise ValueError(
            f"Método '{method}' inválido para distribuições. Use 'functional' ou 'krawtchouk'"
        )
    logger.debug("Transformada %s: %s -> %s", method, source.counts, result.counts)
    return TransformReport(source, result, method, q, m, source.n, k)


def brute_transform(code: LinearCode, cap: Optional[int] = None) -> TransformReport:
    """Distribuições de C e de C⊥ por enumeração direta."""
    source = brute_distribution(code, cap=cap)
    result = brute_distribution(dual_code(code), cap=cap)
    spec = code.field
    return TransformReport(source, result, "brute", spec.q, spec.m, code.n, code.k)


def dual_pair(
    code: LinearCode, method: str, cap: Optional[int] = None
) -> Tuple[RankDistribution, RankDistribution]:
    """
    (A, B) de um código concreto, com B calculada pelo método indicado.
    """
    if method == "brute":
        report = brute_transform(code, cap=cap)
    else:
        A = brute_distribution(code, cap=cap)
        report = transform(A, code.k, code.field.q, code.field.m, method)
    return report.source, report.result
