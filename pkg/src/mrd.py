"""
Cota de Singleton na métrica do posto e distribuição de códigos MRD.

Classe I: n <= m, distribuição fechada em função de (q, m, n, k).
Classe II: n > m, obtida por transposição de um código de Classe I sobre
GF(q^n) de comprimento m, o que preserva o posto.
"""

from dataclasses import dataclass
import logging
from typing import List, Optional, Sequence

from .exactnum import Exact, gaussian, normalize, sigma
from .gfcodes import LinearCode, RankDistribution, brute_distribution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MrdParams:
    """
    Parâmetros (n, k, d_R) de um código MRD sobre GF(q^m).

    Para a Classe I (n <= m) vale d_R = n - k + 1.
    """

    q: int
    m: int
    n: int
    k: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= min(self.m, self.n):
            raise ValueError(
                f"d={self.d} fora de [1, min(m, n)] = [1, {min(self.m, self.n)}]"
            )
        if self.n <= self.m and self.d != self.n - self.k + 1:
            raise ValueError(
                f"Código de Classe I exige d = n - k + 1, recebido: n={self.n}, k={self.k}, d={self.d}"
            )

    @classmethod
    def class_one(cls, q: int, m: int, n: int, k: int) -> "MrdParams":
        return cls(q, m, n, k, n - k + 1)

    @property
    def is_class_one(self) -> bool:
        return self.n <= self.m


def singleton_bound(q: int, m: int, n: int, d: int) -> int:
    """
    Cardinalidade máxima min{q^{m(n-d+1)}, q^{n(m-d+1)}}.

    Raises:
        ValueError: Se d estiver fora de [1, min(m, n)]

    Examples:
        >>> singleton_bound(2, 3, 2, 2)
        8
    """
    if not 1 <= d <= min(m, n):
        raise ValueError(f"d={d} fora de [1, min(m, n)] = [1, {min(m, n)}]")
    return min(q ** (m * (n - d + 1)), q ** (n * (m - d + 1)))


def is_mrd(code: LinearCode, cap: Optional[int] = None) -> bool:
    """
    Verdadeiro se o código atinge a cota de Singleton.

    O código nulo não tem distância definida e não é MRD.
    """
    d = brute_distribution(code, cap=cap).min_nonzero_weight()
    if d is None:
        return False
    spec = code.field
    return code.size == singleton_bound(spec.q, spec.m, code.n, d)


def mrd_distribution(q: int, m: int, n: int, k: int) -> RankDistribution:
    """
    Distribuição de um código MRD linear (n, k) de Classe I sobre GF(q^m).

    A_0 = 1, A_i = 0 para 0 < i < d e, para 0 <= i <= n - d,
    A_{d+i} = [n d+i] Σ_{j<=i} (-1)^{i-j} q^{σ_{i-j}} [d+i d+j] (q^{m(j+1)} - 1).

    Raises:
        ValueError: Se não valer 1 <= k <= n <= m

    Examples:
        >>> mrd_distribution(2, 2, 2, 1).counts
        (1, 0, 3)
    """
    if not 1 <= k <= n:
        raise ValueError(f"Esperado 1 <= k <= n, recebido: k={k}, n={n}")
    if n > m:
        raise ValueError(f"n={n} > m={m}: use class2_distribution para a Classe II")

    d = n - k + 1
    counts = [1] + [0] * n
    for i in range(n - d + 1):
        total = 0
        for j in range(i + 1):
            term = q ** sigma(i - j) * gaussian(d + i, d + j, q) * (q ** (m * (j + 1)) - 1)
            total += -term if (i - j) % 2 else term
        counts[d + i] = gaussian(n, d + i, q) * total

    distribution = RankDistribution(tuple(counts))
    if distribution.total != q ** (m * k):
        raise ArithmeticError(f"Distribuição MRD inconsistente: {distribution.counts}")
    return distribution


def class2_distribution(q: int, m: int, n: int, k_eff: int) -> RankDistribution:
    """
    Distribuição de um código MRD de Classe II (n >= m) sobre GF(q^m).

    É a transposta de um código MRD (m, k_eff) de Classe I sobre GF(q^n):
    a distribuição troca os papéis de m e n e é completada com zeros
    até o comprimento n. A cardinalidade é q^{n k_eff}.

    Args:
        q: Primo
        m: Grau da extensão (m <= n)
        n: Comprimento
        k_eff: Dimensão do código transposto (1 <= k_eff <= m)

    Raises:
        ValueError: Se os parâmetros forem inconsistentes

    Examples:
        >>> class2_distribution(2, 2, 3, 1).counts
        (1, 0, 7, 0)
    """
    if n < m:
        raise ValueError(f"Classe II exige n >= m, recebido: n={n}, m={m}")
    if not 1 <= k_eff <= m:
        raise ValueError(f"Esperado 1 <= k_eff <= m, recebido: k_eff={k_eff}, m={m}")
    transposed = mrd_distribution(q, n, m, k_eff)
    return RankDistribution(transposed.counts + (0,) * (n - m))


def gaussian_forward(b: Sequence[Exact], q: int) -> List[Exact]:
    """
    a_j = Σ_{i<=j} [l-i l-j] b_i, com l = len(b) - 1.
    """
    l = len(b) - 1
    return [
        normalize(sum(gaussian(l - i, l - j, q) * b[i] for i in range(j + 1)))
        for j in range(l + 1)
    ]


def gaussian_inversion(a: Sequence[Exact], q: int) -> List[Exact]:
    """
    Inversa de gaussian_forward:
    b_i = Σ_{j<=i} (-1)^{i-j} q^{σ_{i-j}} [l-j l-i] a_j.
    """
    l = len(a) - 1
    result = []
    for i in range(l + 1):
        total = 0
        for j in range(i + 1):
            term = q ** sigma(i - j) * gaussian(l - j, l - i, q) * a[j]
            total += -term if (i - j) % 2 else term
        result.append(normalize(total))
    return result
