"""
Cálculo q-análogo sobre polinômios homogêneos em (x, y).

Um HomogPoly de grau r guarda r+1 coeficientes MParamPoly, indexados pelo
grau u em y (monômio y^u x^{r-u}). Como os coeficientes são funções de m
(polinômios em Q = q^m), os deslocamentos m → m - i do q-produto são
substituições algébricas exatas.

Operações principais:
- q_product, q_power: q-produto e q-potência
- a_poly, b_poly: [x + (q^m - 1)y]^{[l]} e (x - y)^{[l]}
- q_transform: transformada q
- q_derivative, q_inv_derivative: derivadas q e q^{-1}
- evaluate, specialize, shift_m: avaliação e substituições em m
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .exactnum import (
    Exact,
    MParamPoly,
    alpha_param,
    beta,
    gaussian,
    normalize,
    q_int_p,
    qpow,
    sigma,
)

Coefficient = Union[MParamPoly, int, Fraction]


def _as_param(q: int, value: Coefficient) -> MParamPoly:
    if isinstance(value, MParamPoly):
        if value.q != q:
            raise ValueError(f"Bases incompatíveis: q={q} e q={value.q}")
        return value
    return MParamPoly.constant(q, value)


class HomogPoly:
    """
    Polinômio homogêneo Σ_u c_u(m) y^u x^{r-u}.

    Instâncias são imutáveis. O polinômio nulo existe em todos os graus e
    funciona como elemento neutro da soma independentemente do grau.

    Example:
        >>> f = HomogPoly.from_coefficients(2, [1, 3, 0])
        >>> f.degree
        2
    """

    __slots__ = ("_q", "_coeffs")

    def __init__(self, q: int, coeffs: Sequence[Coefficient]):
        if len(coeffs) == 0:
            raise ValueError("Um HomogPoly precisa de ao menos um coeficiente")
        self._q = q
        self._coeffs: Tuple[MParamPoly, ...] = tuple(_as_param(q, c) for c in coeffs)

    @classmethod
    def from_coefficients(cls, q: int, coeffs: Sequence[Coefficient]) -> "HomogPoly":
        return cls(q, coeffs)

    @classmethod
    def zero(cls, q: int, degree: int = 0) -> "HomogPoly":
        """Polinômio nulo de grau dado."""
        if degree < 0:
            raise ValueError(f"Grau deve ser >= 0, recebido: {degree}")
        return cls(q, [0] * (degree + 1))

    @classmethod
    def one(cls, q: int) -> "HomogPoly":
        return cls(q, [1])

    @classmethod
    def x(cls, q: int) -> "HomogPoly":
        return cls(q, [1, 0])

    @classmethod
    def y(cls, q: int) -> "HomogPoly":
        return cls(q, [0, 1])

    @classmethod
    def monomial(cls, q: int, degree: int, u: int, coeff: Coefficient = 1) -> "HomogPoly":
        """c · y^u x^{degree-u}."""
        if not 0 <= u <= degree:
            raise ValueError(f"Expoente de y fora do intervalo: u={u}, grau={degree}")
        coeffs: List[Coefficient] = [0] * (degree + 1)
        coeffs[u] = coeff
        return cls(q, coeffs)

    @property
    def q(self) -> int:
        return self._q

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[MParamPoly, ...]:
        return self._coeffs

    def __getitem__(self, u: int) -> MParamPoly:
        return self._coeffs[u]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._coeffs)

    def is_constant(self) -> bool:
        """Verdadeiro se nenhum coeficiente depende de m."""
        return all(c.is_constant() for c in self._coeffs)

    def constant_coefficients(self) -> List[Exact]:
        """
        Coeficientes como números exatos.

        Raises:
            ValueError: Se algum coeficiente depender de m
        """
        return [c.constant_value() for c in self._coeffs]

    def _check(self, other: "HomogPoly") -> None:
        if other._q != self._q:
            raise ValueError(f"Bases incompatíveis: q={self._q} e q={other._q}")

    def __add__(self, other: object) -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError(
                f"Soma de polinômios homogêneos de graus distintos: {self.degree} e {other.degree}"
            )
        return HomogPoly(self._q, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self._q, [-c for c in self._coeffs])

    def __sub__(self, other: object) -> "HomogPoly":
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "HomogPoly":
        # Multiplicação escalar comum (por número ou função de m)
        if isinstance(other, (int, Fraction, MParamPoly)):
            factor = _as_param(self._q, other)
            return HomogPoly(self._q, [c * factor for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self._q != other._q:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self.is_zero():
            return hash((self._q, "zero"))
        return hash((self._q, self._coeffs))

    def __repr__(self) -> str:
        terms = []
        for u, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            terms.append(f"({c})·y^{u}x^{self.degree - u}")
        body = " + ".join(terms) if terms else "0"
        return f"HomogPoly(q={self._q}, r={self.degree}: {body})"


# =========================================================================
# q-produto e polinômios especiais
# =========================================================================

def q_product(a: HomogPoly, b: HomogPoly) -> HomogPoly:
    """
    q-produto a * b de dois polinômios homogêneos.

    Para a de grau r e b de grau s, o resultado tem grau r+s e coeficientes
    c_u(m) = Σ_i q^{is} a_i(m) b_{u-i}(m-i). A ordem dos operandos importa.

    Args:
        a: Fator à esquerda
        b: Fator à direita

    Returns:
        O q-produto, de grau r+s

    Raises:
        ValueError: Se os polinômios tiverem bases q distintas

    Examples:
        >>> x, y = HomogPoly.x(2), HomogPoly.y(2)
        >>> q_product(y, x) == 2 * q_product(x, y)
        True
    """
    if a.q != b.q:
        raise ValueError(f"Bases incompatíveis: q={a.q} e q={b.q}")
    q = a.q
    r, s = a.degree, b.degree
    result = [MParamPoly.constant(q, 0) for _ in range(r + s + 1)]

    for i, a_i in enumerate(a.coeffs):
        if a_i.is_zero():
            continue
        weight = a_i * (q ** (i * s))
        for t, b_t in enumerate(b.coeffs):
            if b_t.is_zero():
                continue
            result[i + t] = result[i + t] + weight * b_t.shift(i)

    return HomogPoly(q, result)


def q_power(a: HomogPoly, n: int) -> HomogPoly:
    """
    n-ésima q-potência: a^{[0]} = 1 e a^{[n]} = a^{[n-1]} * a.

    Examples:
        >>> q_power(HomogPoly.y(2), 2) == HomogPoly.from_coefficients(2, [0, 0, 2])
        True
    """
    if n < 0:
        raise ValueError(f"n deve ser >= 0, recebido: {n}")
    result = HomogPoly.one(a.q)
    for _ in range(n):
        result = q_product(result, a)
    return result


def a_poly(l: int, q: int) -> HomogPoly:
    """
    a_l = [x + (q^m - 1)y]^{[l]}, enumerador de posto de GF(q^m)^l.

    Coeficiente de y^u: [l u] α(m, u), como polinômio em Q.

    Args:
        l: Grau (comprimento do espaço)
        q: Base

    Returns:
        HomogPoly de grau l
    """
    if l < 0:
        raise ValueError(f"l deve ser >= 0, recebido: {l}")
    return HomogPoly(q, [alpha_param(u, q) * gaussian(l, u, q) for u in range(l + 1)])


def b_poly(l: int, q: int) -> HomogPoly:
    """
    b_l = (x - y)^{[l]}, com coeficientes constantes [l u](-1)^u q^{σ_u}.
    """
    if l < 0:
        raise ValueError(f"l deve ser >= 0, recebido: {l}")
    return HomogPoly(
        q, [(-1) ** u * q ** sigma(u) * gaussian(l, u, q) for u in range(l + 1)]
    )


def q_transform(a: HomogPoly) -> HomogPoly:
    """
    Transformada q: ā = Σ_i a_i(m) · y^{[i]} * x^{[r-i]}.

    Examples:
        >>> q_transform(HomogPoly.monomial(2, 2, 1)) == HomogPoly.monomial(2, 2, 1, 2)
        True
    """
    q = a.q
    r = a.degree
    y, x = HomogPoly.y(q), HomogPoly.x(q)
    result = HomogPoly.zero(q, r)
    for i, a_i in enumerate(a.coeffs):
        if a_i.is_zero():
            continue
        result = result + q_product(q_power(y, i), q_power(x, r - i)) * a_i
    return result


# =========================================================================
# Derivadas
# =========================================================================

def q_derivative(f: HomogPoly, nu: int) -> HomogPoly:
    """
    ν-ésima q-derivada em x.

    O monômio y^i x^{r-i} vai em β(r-i, ν) y^i x^{r-i-ν}; termos com
    r - i < ν desaparecem. Para ν > r o resultado é o polinômio nulo de
    grau 0.

    Args:
        f: Polinômio de grau r
        nu: Ordem da derivada (>= 0)

    Returns:
        Polinômio de grau max(r - ν, 0)

    Examples:
        >>> q_derivative(HomogPoly.monomial(2, 3, 0), 1) == HomogPoly.monomial(2, 2, 0, 7)
        True
    """
    if nu < 0:
        raise ValueError(f"nu deve ser >= 0, recebido: {nu}")
    r = f.degree
    if nu > r:
        return HomogPoly.zero(f.q, 0)
    return HomogPoly(
        f.q, [f.coeffs[i] * beta(r - i, nu, f.q) for i in range(r - nu + 1)]
    )


def q_inv_derivative(g: HomogPoly, nu: int) -> HomogPoly:
    """
    ν-ésima q^{-1}-derivada em y.

    Cada aplicação leva y^l x^s em [l 1]_{p} y^{l-1} x^s, com p = 1/q, e
    anula os termos sem y. Aplicada ν vezes, dá o fator
    q^{ν(1-l)+σ_ν} β(l, ν).

    Examples:
        >>> q_inv_derivative(HomogPoly.y(2), 1) == HomogPoly.one(2)
        True
    """
    if nu < 0:
        raise ValueError(f"nu deve ser >= 0, recebido: {nu}")
    q = g.q
    current = g
    for _ in range(nu):
        if current.degree == 0:
            return HomogPoly.zero(q, 0)
        current = HomogPoly(
            q,
            [current.coeffs[l] * q_int_p(l, q) for l in range(1, current.degree + 1)],
        )
    return current


# =========================================================================
# Avaliação e substituições
# =========================================================================

def evaluate(f: HomogPoly, m: int, x: Exact, y: Exact) -> Exact:
    """
    Avalia f em m, x e y concretos.

    Examples:
        >>> evaluate(a_poly(2, 2), 2, 1, 1)
        16
    """
    r = f.degree
    total = Fraction(0)
    for u, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        total += Fraction(c.evaluate(m)) * Fraction(y) ** u * Fraction(x) ** (r - u)
    return normalize(total)


def coefficient_values(f: HomogPoly, m: int) -> List[Exact]:
    """Coeficientes de f avaliados em m, em ordem crescente de grau em y."""
    return [c.evaluate(m) for c in f.coeffs]


def specialize(f: HomogPoly, m: int) -> HomogPoly:
    """Substitui Q = q^m em todos os coeficientes."""
    return HomogPoly(f.q, coefficient_values(f, m))


def shift_m(f: HomogPoly, s: int) -> HomogPoly:
    """Substituição m → m - s em todos os coeficientes."""
    return HomogPoly(f.q, [c.shift(s) for c in f.coeffs])


def scale_y(f: HomogPoly, c: Exact) -> HomogPoly:
    """f(x, c·y)."""
    return HomogPoly(f.q, [coeff * qpow(c, u) for u, coeff in enumerate(f.coeffs)])


def divide_by_x(f: HomogPoly) -> HomogPoly:
    """
    f / x, para f com coeficiente de y^r nulo.

    Raises:
        ValueError: Se f não for divisível por x
    """
    if f.degree == 0 or not f.coeffs[-1].is_zero():
        raise ValueError("Polinômio não é divisível por x")
    return HomogPoly(f.q, f.coeffs[:-1])


def divide_by_y(f: HomogPoly) -> HomogPoly:
    """
    f / y, para f com coeficiente de x^r nulo.

    Raises:
        ValueError: Se f não for divisível por y
    """
    if f.degree == 0 or not f.coeffs[0].is_zero():
        raise ValueError("Polinômio não é divisível por y")
    return HomogPoly(f.q, f.coeffs[1:])


def from_distribution(counts: Iterable[Exact], q: int) -> HomogPoly:
    """
    Enumerador de pesos de posto Σ A_i y^i x^{n-i}.

    Args:
        counts: A_0, ..., A_n
        q: Base

    Returns:
        HomogPoly de grau n com coeficientes constantes
    """
    return HomogPoly(q, list(counts))
