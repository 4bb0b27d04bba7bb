"""
Módulo de aritmética exata e funções combinatórias q-análogas.

Todas as grandezas são inteiros de precisão arbitrária (int) ou racionais
canônicos (fractions.Fraction). Não há ponto flutuante em nenhum caminho.

Funções principais:
- alpha(m, u, q): número de u-uplas linearmente independentes em GF(q)^m
- gaussian(n, u, q): binomial gaussiano [n u]
- beta(m, u, q): produto de inteiros q-análogos [m-i 1]
- q_stirling2(nu, l, q): números de Stirling q-análogos de segunda espécie
- variantes em p = 1/q (alpha_p, gaussian_p, beta_p, p_stirling2)

Também define MParamPoly, um polinômio de Laurent na indeterminada
Q = q^m, usado para representar coeficientes que dependem de m.
"""

from fractions import Fraction
from functools import lru_cache
import itertools
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

Exact = Union[int, Fraction]


def normalize(value: Exact) -> Exact:
    """
    Converte uma fração de denominador 1 em int.

    Args:
        value: Inteiro ou fração

    Returns:
        O mesmo valor, como int sempre que possível

    Examples:
        >>> normalize(Fraction(6, 3))
        2
        >>> normalize(Fraction(3, 2))
        Fraction(3, 2)
    """
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def qpow(base: Exact, exponent: int) -> Exact:
    """
    Potência exata, inclusive para expoentes negativos.

    Args:
        base: Base inteira ou racional (não nula se exponent < 0)
        exponent: Expoente inteiro

    Returns:
        base**exponent sem passar por float
    """
    if exponent >= 0:
        return normalize(base ** exponent) if isinstance(base, Fraction) else base ** exponent
    return normalize(Fraction(base) ** exponent)


def sigma(i: int) -> int:
    """Número triangular σ_i = i(i-1)/2."""
    return i * (i - 1) // 2


def _divide(numerator: Exact, denominator: Exact) -> Exact:
    # Divisão exata: entre inteiros o resto é sempre zero
    if isinstance(numerator, int) and isinstance(denominator, int):
        quotient, remainder = divmod(numerator, denominator)
        if remainder != 0:
            raise ArithmeticError(
                f"Divisão não exata: {numerator} / {denominator}"
            )
        return quotient
    return normalize(Fraction(numerator) / Fraction(denominator))


# =========================================================================
# Funções genéricas na base (q ou p = 1/q)
# =========================================================================

@lru_cache(maxsize=None)
def _alpha(base: Exact, m: int, u: int) -> Exact:
    if u < 0:
        raise ValueError(f"u deve ser >= 0, recebido: {u}")
    result: Exact = 1
    top = qpow(base, m)
    for i in range(u):
        result = result * (top - qpow(base, i))
    return normalize(result)


@lru_cache(maxsize=None)
def _gaussian(base: Exact, n: int, u: int) -> Exact:
    if u < 0 or u > n:
        return 0
    return _divide(_alpha(base, n, u), _alpha(base, u, u))


@lru_cache(maxsize=None)
def _beta(base: Exact, m: int, u: int) -> Exact:
    if u < 0:
        raise ValueError(f"u deve ser >= 0, recebido: {u}")
    result: Exact = 1
    for i in range(u):
        result = result * _gaussian(base, m - i, 1)
    return normalize(result)


@lru_cache(maxsize=None)
def _stirling2(base: Exact, nu: int, l: int) -> Exact:
    if nu < 0 or l < 0:
        raise ValueError(f"nu e l devem ser >= 0, recebidos: nu={nu}, l={l}")
    total: Exact = 0
    for i in range(l + 1):
        term = qpow(base, sigma(i)) * _gaussian(base, l, i) * _gaussian(base, l - i, 1) ** nu
        total += -term if i % 2 else term
    return normalize(Fraction(qpow(base, -sigma(l))) * total / _beta(base, l, l))


# =========================================================================
# Funções na base q
# =========================================================================

def alpha(m: int, u: int, q: int) -> Exact:
    """
    Calcula α(m, u) = ∏_{i=0}^{u-1} (q^m - q^i), com α(m, 0) = 1.

    Para m >= 0 o resultado é inteiro e vale 0 quando u > m. Para m < 0
    o produto é avaliado com potências racionais (extensão polinomial em q^m).

    Args:
        m: Expoente do corpo (GF(q^m))
        u: Número de fatores (u >= 0)
        q: Base (primo)

    Returns:
        Valor exato de α(m, u)

    Examples:
        >>> alpha(2, 1, 2)
        3
        >>> alpha(3, 2, 2)
        42
    """
    return _alpha(q, m, u)


def gaussian(n: int, u: int, q: int) -> Exact:
    """
    Binomial gaussiano [n u] = α(n, u) / α(u, u).

    Conta os subespaços de dimensão u de GF(q)^n. Retorna 0 quando
    u < 0 ou u > n.

    Args:
        n: Dimensão do espaço ambiente
        u: Dimensão do subespaço
        q: Base (primo)

    Returns:
        [n u] como inteiro

    Examples:
        >>> gaussian(2, 1, 2)
        3
        >>> gaussian(4, 2, 2)
        35
    """
    return _gaussian(q, n, u)


def q_int(k: int, q: int) -> Exact:
    """Inteiro q-análogo [k 1] = (q^k - 1)/(q - 1)."""
    return _gaussian(q, k, 1)


def beta(m: int, u: int, q: int) -> Exact:
    """
    Calcula β(m, u) = ∏_{i=0}^{u-1} [m-i 1], com β(m, 0) = 1.

    Examples:
        >>> beta(3, 2, 2)
        21
    """
    return _beta(q, m, u)


def q_stirling2(nu: int, l: int, q: int) -> Exact:
    """
    Número de Stirling q-análogo de segunda espécie S_q(ν, l).

    S_q(ν, l) = q^{-σ_l}/β(l, l) Σ_i (-1)^i q^{σ_i} [l i] [l-i 1]^ν,
    com a convenção 0^0 = 1. Satisfaz [m 1]^ν = Σ_l q^{σ_l} S_q(ν, l) β(m, l).

    Examples:
        >>> q_stirling2(0, 0, 2)
        1
        >>> q_stirling2(2, 2, 2)
        1
    """
    return _stirling2(q, nu, l)


# =========================================================================
# Variantes em p = 1/q
# =========================================================================

def _p(q: int) -> Fraction:
    return Fraction(1, q)


def alpha_p(m: int, u: int, q: int) -> Exact:
    """α_p(m, u): α com q substituído por p = 1/q."""
    return _alpha(_p(q), m, u)


def gaussian_p(n: int, u: int, q: int) -> Exact:
    """
    [n u]_p: binomial gaussiano com q substituído por p = 1/q.

    Examples:
        >>> gaussian_p(2, 1, 2)
        Fraction(3, 2)
    """
    return _gaussian(_p(q), n, u)


def q_int_p(k: int, q: int) -> Exact:
    """[k 1]_p = (p^k - 1)/(p - 1)."""
    return _gaussian(_p(q), k, 1)


def beta_p(m: int, u: int, q: int) -> Exact:
    """
    β_p(m, u): β com q substituído por p = 1/q.

    Examples:
        >>> beta_p(3, 2, 2)
        Fraction(21, 8)
    """
    return _beta(_p(q), m, u)


def p_stirling2(nu: int, l: int, q: int) -> Exact:
    """S_p(ν, l): Stirling q-análogo com q substituído por p = 1/q."""
    return _stirling2(_p(q), nu, l)


_P_VARIANTS = {
    "alpha": alpha_p,
    "beta": beta_p,
    "gaussian": gaussian_p,
}


def p_variant(kind: str, *args: int, q: int) -> Exact:
    """
    Despacha para a variante em p = 1/q pedida.

    Args:
        kind: 'alpha', 'beta' ou 'gaussian'
        *args: Argumentos inteiros da função (m, u) ou (n, u)
        q: Base (primo)

    Returns:
        Valor exato da variante

    Raises:
        ValueError: Se kind não for reconhecido
    """
    if kind not in _P_VARIANTS:
        available = ", ".join(_P_VARIANTS)
        raise ValueError(f"Variante '{kind}' desconhecida. Disponíveis: {available}")
    return _P_VARIANTS[kind](*args, q=q)


# =========================================================================
# Censo de subespaços (oráculo independente para [n u])
# =========================================================================

def count_subspaces(n: int, u: int, q: int) -> int:
    """
    Conta por enumeração os subespaços de dimensão u de GF(q)^n.

    Os subespaços são gerados dimensão a dimensão: cada subespaço de
    dimensão d+1 é o span de um de dimensão d com um vetor fora dele.
    Viável apenas para q^n pequeno.

    Args:
        n: Dimensão do espaço ambiente
        u: Dimensão procurada
        q: Primo

    Returns:
        Número de subespaços distintos
    """
    if u < 0 or u > n:
        return 0

    vectors = list(itertools.product(range(q), repeat=n))
    zero = tuple([0] * n)
    layer = {frozenset([zero])}

    for _ in range(u):
        next_layer = set()
        for subspace in layer:
            for v in vectors:
                if v in subspace:
                    continue
                span = frozenset(
                    tuple((s_i + a * v_i) % q for s_i, v_i in zip(s, v))
                    for s in subspace
                    for a in range(q)
                )
                next_layer.add(span)
        layer = next_layer

    return len(layer)


# =========================================================================
# Polinômios de Laurent em Q = q^m
# =========================================================================

Scalar = Union[int, Fraction]


class MParamPoly:
    """
    Polinômio de Laurent Σ c_e Q^e com coeficientes racionais, Q ≡ q^m.

    Representa uma função de m de forma exata e comparável. Coeficientes
    nulos nunca são armazenados. Instâncias são imutáveis.

    Example:
        >>> Q = MParamPoly.generator(2)
        >>> (Q - 1).evaluate(3)
        7
    """

    __slots__ = ("_q", "_coeffs", "_hash")

    def __init__(self, q: int, coeffs: Optional[Mapping[int, Scalar]] = None):
        if q < 2:
            raise ValueError(f"q deve ser >= 2, recebido: {q}")
        cleaned: Dict[int, Fraction] = {}
        for exponent, value in (coeffs or {}).items():
            value = Fraction(value)
            if value != 0:
                cleaned[int(exponent)] = value
        self._q = q
        self._coeffs = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def constant(cls, q: int, value: Scalar) -> "MParamPoly":
        """Polinômio constante (independente de m)."""
        return cls(q, {0: value})

    @classmethod
    def generator(cls, q: int) -> "MParamPoly":
        """A indeterminada Q = q^m."""
        return cls(q, {1: 1})

    @property
    def q(self) -> int:
        return self._q

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        """Cópia do mapa expoente → coeficiente."""
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return set(self._coeffs) <= {0}

    def constant_value(self) -> Exact:
        """
        Valor do polinômio constante.

        Raises:
            ValueError: Se o polinômio depender de m
        """
        if not self.is_constant():
            raise ValueError(f"Polinômio depende de m: {self!r}")
        return normalize(self._coeffs.get(0, Fraction(0)))

    def _coerce(self, other: object) -> Optional["MParamPoly"]:
        if isinstance(other, MParamPoly):
            if other._q != self._q:
                raise ValueError(f"Bases incompatíveis: q={self._q} e q={other._q}")
            return other
        if isinstance(other, (int, Fraction)):
            return MParamPoly.constant(self._q, other)
        return None

    def __add__(self, other: object) -> "MParamPoly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        result = dict(self._coeffs)
        for exponent, value in other_poly._coeffs.items():
            result[exponent] = result.get(exponent, Fraction(0)) + value
        return MParamPoly(self._q, result)

    __radd__ = __add__

    def __neg__(self) -> "MParamPoly":
        return MParamPoly(self._q, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: object) -> "MParamPoly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: object) -> "MParamPoly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly - self

    def __mul__(self, other: object) -> "MParamPoly":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        result: Dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other_poly._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, Fraction(0)) + c1 * c2
        return MParamPoly(self._q, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MParamPoly":
        if exponent < 0:
            raise ValueError("Potências negativas de MParamPoly não são suportadas")
        result = MParamPoly.constant(self._q, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self._coeffs.get(0, Fraction(0)) == other
        if isinstance(other, MParamPoly):
            return self._q == other._q and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._q, frozenset(self._coeffs.items())))
        return self._hash

    def shift(self, s: int) -> "MParamPoly":
        """
        Substituição m → m - s, isto é, Q → q^{-s} Q.

        Cada coeficiente c_e é multiplicado por q^{-s e}; os expoentes
        não mudam.
        """
        if s == 0:
            return self
        return MParamPoly(
            self._q,
            {e: c * Fraction(qpow(self._q, -s * e)) for e, c in self._coeffs.items()},
        )

    def evaluate(self, m: int) -> Exact:
        """Substitui Q = q^m e retorna o valor exato."""
        total = Fraction(0)
        for exponent, value in self._coeffs.items():
            total += value * Fraction(qpow(self._q, m * exponent))
        return normalize(total)

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """Itera sobre (expoente, coeficiente) em ordem crescente de expoente."""
        for exponent in sorted(self._coeffs):
            yield exponent, self._coeffs[exponent]

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"MParamPoly(q={self._q}, 0)"
        parts = []
        for exponent, value in self.terms():
            if exponent == 0:
                parts.append(f"{value}")
            else:
                parts.append(f"{value}*Q^{exponent}")
        return f"MParamPoly(q={self._q}, {' + '.join(parts)})"


def alpha_param(u: int, q: int, shift: int = 0) -> MParamPoly:
    """
    α(m - shift, u) como polinômio em Q = q^m.

    Args:
        u: Número de fatores (u >= 0)
        q: Base (primo)
        shift: Deslocamento s em m - s

    Returns:
        ∏_{i<u} (q^{-shift} Q - q^i)

    Example:
        >>> alpha_param(1, 2).evaluate(2)
        3
    """
    if u < 0:
        raise ValueError(f"u deve ser >= 0, recebido: {u}")
    factor = MParamPoly(q, {1: qpow(q, -shift)})
    result = MParamPoly.constant(q, 1)
    for i in range(u):
        result = result * (factor - q ** i)
    return result
