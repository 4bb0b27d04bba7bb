"""
Módulo de corpos finitos e códigos lineares na métrica do posto.

Elementos de GF(q^m) são codificados como inteiros Σ a_i q^i, onde
(a_0, ..., a_{m-1}) são as coordenadas na base de potências do módulo
irredutível. Esta é a mesma representação inteira usada pelo galois.

O peso de posto de um vetor é o posto sobre GF(q) da matriz m×n cujas
colunas são as coordenadas das entradas. As distribuições por força bruta
deste módulo são o oráculo independente contra o qual as identidades
analíticas são conferidas.
"""

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
import logging
from typing import Iterator, List, Optional, Sequence, Tuple, Type

import galois
import numpy as np
from tqdm import tqdm

from .qpoly import HomogPoly

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 2**16
# Índices de mensagem são gerados em int64
MAX_ENUMERABLE = int(np.iinfo(np.int64).max)


class EnumerationCapError(ValueError):
    """Enumeração recusada por exceder o limite configurado."""

    def __init__(self, required: int, cap: int, what: str = "palavras-código"):
        self.required = required
        self.cap = cap
        super().__init__(
            f"Enumeração de {required} {what} excede o limite de {cap} "
            f"(ajuste --cap ou RANKMAC_CAP)"
        )


class UnsupportedFieldError(ValueError):
    """Operação não suportada para o corpo informado."""


# =========================================================================
# Corpos
# =========================================================================

@lru_cache(maxsize=None)
def _field_class(q: int, m: int, modulus: Tuple[int, ...]) -> Type[galois.FieldArray]:
    if m == 1:
        return galois.GF(q)
    irreducible = galois.Poly(list(modulus), field=galois.GF(q), order="asc")
    return galois.GF(q**m, irreducible_poly=irreducible)


@dataclass(frozen=True)
class FieldSpec:
    """
    Especificação da torre GF(q) ⊂ GF(q^m).

    Attributes:
        q: Característica (primo)
        m: Grau da extensão (>= 1)
        modulus: m+1 coeficientes em GF(q), little-endian, mônico e irredutível
    """

    q: int
    m: int
    modulus: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))

        if not galois.is_prime(self.q):
            raise ValueError(f"q deve ser primo, recebido: {self.q}")
        if self.m < 1:
            raise ValueError(f"m deve ser >= 1, recebido: {self.m}")
        if len(self.modulus) != self.m + 1:
            raise ValueError(
                f"Módulo deve ter {self.m + 1} coeficientes, recebidos: {len(self.modulus)}"
            )
        if any(not 0 <= c < self.q for c in self.modulus):
            raise ValueError(f"Coeficientes do módulo devem estar em [0, {self.q}): {self.modulus}")
        if self.modulus[-1] != 1:
            raise ValueError(f"Módulo deve ser mônico: {self.modulus}")

        poly = galois.Poly(list(self.modulus), field=galois.GF(self.q), order="asc")
        if not poly.is_irreducible():
            raise ValueError(f"Módulo {self.modulus} não é irredutível sobre GF({self.q})")

    @classmethod
    def default(cls, q: int, m: int) -> "FieldSpec":
        """
        Corpo GF(q^m) com um polinômio primitivo escolhido pelo galois.

        Examples:
            >>> FieldSpec.default(2, 2).modulus
            (1, 1, 1)
        """
        if m == 1:
            return cls(q, 1, (0, 1))
        poly = galois.primitive_poly(q, m)
        return cls(q, m, tuple(int(c) for c in poly.coefficients(order="asc")))

    @property
    def order(self) -> int:
        """Número de elementos, q^m."""
        return self.q**self.m

    @property
    def gf(self) -> Type[galois.FieldArray]:
        """Classe FieldArray do galois para GF(q^m)."""
        return _field_class(self.q, self.m, self.modulus)

    def __str__(self) -> str:
        return f"GF({self.q}^{self.m})"


def element_coordinates(value: int, spec: FieldSpec) -> Tuple[int, ...]:
    """
    Coordenadas little-endian de um elemento na base de potências.

    Examples:
        >>> element_coordinates(2, FieldSpec.default(2, 2))
        (0, 1)
    """
    if not 0 <= value < spec.order:
        raise ValueError(f"Elemento {value} fora de {spec}")
    return tuple((value // spec.q**i) % spec.q for i in range(spec.m))


def element_from_coordinates(coords: Sequence[int], spec: FieldSpec) -> int:
    """Inverso de element_coordinates."""
    if len(coords) != spec.m:
        raise ValueError(f"Esperadas {spec.m} coordenadas, recebidas: {len(coords)}")
    if any(not 0 <= c < spec.q for c in coords):
        raise ValueError(f"Coordenadas devem estar em [0, {spec.q}): {tuple(coords)}")
    return sum(int(c) * spec.q**i for i, c in enumerate(coords))


def _as_ints(values) -> np.ndarray:
    return np.asarray(values).view(np.ndarray).astype(np.int64)


# =========================================================================
# Posto sobre GF(q)
# =========================================================================

def coordinate_matrices(words: np.ndarray, spec: FieldSpec) -> np.ndarray:
    """
    Expande palavras (N, n) de GF(q^m) em matrizes (N, m, n) sobre GF(q).

    A coluna j da matriz i contém as coordenadas de words[i, j].
    """
    words = _as_ints(words)
    if words.ndim == 1:
        words = words[None, :]
    powers = spec.q ** np.arange(spec.m, dtype=np.int64)
    return (words[:, None, :] // powers[None, :, None]) % spec.q


def batched_rank(matrices: np.ndarray, q: int) -> np.ndarray:
    """
    Posto sobre GF(q) de um lote de matrizes, por eliminação gaussiana
    vetorizada.

    Args:
        matrices: Array (N, linhas, colunas) com entradas inteiras
        q: Primo

    Returns:
        Array (N,) com os postos
    """
    mats = np.array(matrices, dtype=np.int64) % q
    n_mats, n_rows, n_cols = mats.shape
    rank = np.zeros(n_mats, dtype=np.int64)
    if n_mats == 0 or n_rows == 0:
        return rank

    inverse = np.array([0] + [pow(a, q - 2, q) for a in range(1, q)], dtype=np.int64)
    rows = np.arange(n_rows)
    batch = np.arange(n_mats)

    for col in range(n_cols):
        candidates = (mats[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        has_pivot = candidates.any(axis=1)
        if not has_pivot.any():
            continue

        idx = batch[has_pivot]
        pivot_rows = candidates[idx].argmax(axis=1)
        target = rank[idx]

        # Troca a linha pivô com a linha alvo
        pivot_vals = mats[idx, pivot_rows].copy()
        mats[idx, pivot_rows] = mats[idx, target]
        pivot_vals = (pivot_vals * inverse[pivot_vals[:, col]][:, None]) % q
        mats[idx, target] = pivot_vals

        # Elimina abaixo do pivô
        factors = np.where(rows[None, :] > target[:, None], mats[idx, :, col], 0)
        mats[idx] = (mats[idx] - factors[:, :, None] * pivot_vals[:, None, :]) % q
        rank[idx] += 1

    return rank


def rank_weight(v: Sequence[int], spec: FieldSpec) -> int:
    """
    Peso de posto de um vetor de GF(q^m)^n.

    Args:
        v: Entradas do vetor (inteiros ou FieldArray)
        spec: Corpo

    Returns:
        Posto sobre GF(q) da matriz de coordenadas, entre 0 e min(m, n)

    Examples:
        >>> rank_weight([1, 2], FieldSpec.default(2, 2))
        2
        >>> rank_weight([3, 3], FieldSpec.default(2, 2))
        1
    """
    words = _as_ints(v)
    if words.size == 0:
        return 0
    return int(batched_rank(coordinate_matrices(words, spec), spec.q)[0])


# =========================================================================
# Códigos lineares
# =========================================================================

@dataclass(frozen=True)
class RankDistribution:
    """
    Distribuição de pesos de posto A_0, ..., A_n.

    Aceita contagens analíticas além das obtidas por enumeração; as
    invariantes de código linear são conferidas por quem a produz.
    """

    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) == 0:
            raise ValueError("Distribuição vazia")

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def min_nonzero_weight(self) -> Optional[int]:
        """Menor i > 0 com A_i != 0, ou None."""
        return next((i for i in range(1, len(self.counts)) if self.counts[i] != 0), None)

    def max_nonzero_weight(self) -> Optional[int]:
        """Maior i > 0 com A_i != 0, ou None."""
        return next(
            (i for i in range(len(self.counts) - 1, 0, -1) if self.counts[i] != 0), None
        )

    def as_strings(self) -> List[str]:
        """Contagens como strings decimais."""
        return [str(c) for c in self.counts]

    def enumerator(self, q: int) -> HomogPoly:
        """Enumerador Σ A_i y^i x^{n-i}."""
        return HomogPoly(q, list(self.counts))


@dataclass(frozen=True)
class LinearCode:
    """
    Código linear (n, k) sobre GF(q^m), dado por uma matriz geradora.

    Attributes:
        field: Corpo GF(q^m)
        n: Comprimento
        generator: k linhas de n elementos (codificação inteira)
    """

    field: FieldSpec
    n: int
    generator: Tuple[Tuple[int, ...], ...] = dataclass_field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(e) for e in row) for row in self.generator)
        object.__setattr__(self, "generator", rows)

        if self.n < 0:
            raise ValueError(f"n deve ser >= 0, recebido: {self.n}")
        for row in rows:
            if len(row) != self.n:
                raise ValueError(f"Linha da geradora com {len(row)} entradas, esperadas {self.n}")
            if any(not 0 <= e < self.field.order for e in row):
                raise ValueError(f"Elemento fora de {self.field}: {row}")
        if len(rows) > self.n:
            raise ValueError(f"k={len(rows)} excede n={self.n}")
        if rows and _extension_rank(self.field, rows) != len(rows):
            raise ValueError("Linhas da matriz geradora são linearmente dependentes")

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def size(self) -> int:
        """|C| = q^{mk}."""
        return self.field.order**self.k

    def generator_matrix(self) -> galois.FieldArray:
        """Matriz geradora como FieldArray (k × n)."""
        if self.k == 0:
            return self.field.gf.Zeros((0, self.n))
        return self.field.gf(np.array(self.generator, dtype=np.int64))

    def __str__(self) -> str:
        return f"({self.n}, {self.k}) sobre {self.field}"


def _extension_rank(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    # Posto sobre GF(q^m) pelo número de linhas não nulas da forma escalonada
    reduced = spec.gf(np.array(rows, dtype=np.int64)).row_reduce()
    return int(np.count_nonzero(np.any(reduced, axis=1)))


def whole_space(spec: FieldSpec, n: int) -> LinearCode:
    """GF(q^m)^n, com geradora identidade."""
    return LinearCode(spec, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def zero_code(spec: FieldSpec, n: int) -> LinearCode:
    """Código {0} de comprimento n (k = 0)."""
    return LinearCode(spec, n, ())


def repetition_code(spec: FieldSpec, n: int) -> LinearCode:
    """Código de repetição {(a, ..., a)}."""
    return LinearCode(spec, n, ((1,) * n,))


def random_code(spec: FieldSpec, n: int, k: int, seed: int) -> LinearCode:
    """
    Código (n, k) com geradora aleatória de posto completo.

    Reamostra até obter linhas independentes; determinístico para a mesma seed.
    """
    if not 0 <= k <= n:
        raise ValueError(f"Esperado 0 <= k <= n, recebido: k={k}, n={n}")
    rng = np.random.default_rng(seed)
    while True:
        rows = rng.integers(0, spec.order, size=(k, n)).tolist()
        if k == 0 or _extension_rank(spec, rows) == k:
            return LinearCode(spec, n, tuple(tuple(r) for r in rows))


def row_space_equal(c1: LinearCode, c2: LinearCode) -> bool:
    """Verdadeiro se os dois códigos geram o mesmo subespaço."""
    if c1.field != c2.field or c1.n != c2.n or c1.k != c2.k:
        return False
    if c1.k == 0:
        return True
    return _extension_rank(c1.field, c1.generator + c2.generator) == c1.k


def dual_code(code: LinearCode) -> LinearCode:
    """
    Código dual sob o produto interno padrão de GF(q^m)^n.

    Returns:
        Código (n, n-k) cuja geradora gera o núcleo da geradora original
    """
    spec, n = code.field, code.n
    if code.k == 0:
        return whole_space(spec, n)
    if code.k == n:
        return zero_code(spec, n)
    kernel = code.generator_matrix().null_space()
    return LinearCode(spec, n, tuple(tuple(row) for row in _as_ints(kernel).tolist()))


def direct_sum(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """
    Soma direta C1 × C2, com geradora bloco-diagonal.

    Raises:
        ValueError: Se os códigos estiverem sobre corpos distintos
    """
    if c1.field != c2.field:
        raise ValueError(f"Corpos distintos: {c1.field} e {c2.field}")
    rows = [row + (0,) * c2.n for row in c1.generator]
    rows += [(0,) * c1.n + row for row in c2.generator]
    return LinearCode(c1.field, c1.n + c2.n, tuple(rows))


def cartesian_product(c0: LinearCode, s: int) -> LinearCode:
    """
    C0 × GF(q^m)^s.

    Examples:
        >>> spec = FieldSpec.default(2, 2)
        >>> cartesian_product(zero_code(spec, 0), 1).k
        1
    """
    if s < 0:
        raise ValueError(f"s deve ser >= 0, recebido: {s}")
    if s == 0:
        return c0
    return direct_sum(c0, whole_space(c0.field, s))


def gabidulin_code(spec: FieldSpec, n: int, k: int, points: Sequence[int]) -> LinearCode:
    """
    Código de Gabidulin (n, k) com geradora de Moore g_j^{q^i}.

    Args:
        spec: Corpo GF(q^m)
        n: Comprimento (n <= m)
        k: Dimensão (0 <= k <= n)
        points: n elementos linearmente independentes sobre GF(q)

    Returns:
        Código MRD com distância mínima n - k + 1

    Raises:
        ValueError: Se os parâmetros ou os pontos forem inválidos
    """
    if not 0 <= k <= n <= spec.m:
        raise ValueError(f"Esperado 0 <= k <= n <= m, recebido: k={k}, n={n}, m={spec.m}")
    if len(points) != n:
        raise ValueError(f"Esperados {n} pontos, recebidos: {len(points)}")
    if rank_weight(points, spec) != n:
        raise ValueError(f"Pontos linearmente dependentes sobre GF({spec.q}): {tuple(points)}")

    g = spec.gf(np.array(points, dtype=np.int64))
    rows = [tuple(_as_ints(g ** (spec.q**i)).tolist()) for i in range(k)]
    return LinearCode(spec, n, tuple(rows))


def default_gabidulin(spec: FieldSpec, n: int, k: int) -> LinearCode:
    """Gabidulin com pontos 1, x, ..., x^{n-1} da base de potências."""
    return gabidulin_code(spec, n, k, [spec.q**i for i in range(n)])


# =========================================================================
# Enumeração (oráculo)
# =========================================================================

def _message_chunks(k: int, order: int, total: int, chunk_size: int) -> Iterator[np.ndarray]:
    digits = order ** np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk_size):
        indices = np.arange(start, min(start + chunk_size, total), dtype=np.int64)
        yield (indices[:, None] // digits[None, :]) % order


def codewords(code: LinearCode, chunk_size: int = DEFAULT_CHUNK_SIZE) -> Iterator[np.ndarray]:
    """
    Itera sobre todas as palavras-código em blocos (N, n) de inteiros.

    Raises:
        EnumerationCapError: Se q^{mk} não couber em int64
    """
    _check_cap(code.size, MAX_ENUMERABLE, "palavras-código (índices int64)")
    if code.k == 0:
        yield np.zeros((1, code.n), dtype=np.int64)
        return
    generator = code.generator_matrix()
    for messages in _message_chunks(code.k, code.field.order, code.size, chunk_size):
        yield _as_ints(code.field.gf(messages) @ generator)


def _check_cap(required: int, cap: Optional[int], what: str = "palavras-código") -> None:
    if cap is not None and required > cap:
        raise EnumerationCapError(required, cap, what)


def brute_distribution(
    code: LinearCode,
    cap: Optional[int] = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    progress: bool = False,
) -> RankDistribution:
    """
    Censo exato dos pesos de posto de todas as q^{mk} palavras-código.

    Args:
        code: Código linear
        cap: Limite de palavras enumeradas (None = sem limite)
        chunk_size: Tamanho dos blocos de mensagens
        progress: Exibir barra de progresso

    Returns:
        RankDistribution com Σ A_i = q^{mk}

    Raises:
        EnumerationCapError: Se q^{mk} exceder cap
    """
    _check_cap(code.size, cap)
    logger.debug("Enumerando %d palavras do código %s", code.size, code)

    counts = np.zeros(code.n + 1, dtype=np.int64)
    n_chunks = -(-code.size // chunk_size)
    for words in tqdm(codewords(code, chunk_size), total=n_chunks,
                      desc="Enumerando", disable=not progress):
        ranks = batched_rank(coordinate_matrices(words, code.field), code.field.q)
        counts += np.bincount(ranks, minlength=code.n + 1)

    return RankDistribution(tuple(int(c) for c in counts))


def brute_dual_distribution(code: LinearCode, cap: Optional[int] = None) -> RankDistribution:
    """Censo do código dual."""
    return brute_distribution(dual_code(code), cap=cap)


def min_rank_distance(code: LinearCode, cap: Optional[int] = None) -> Optional[int]:
    """
    Distância mínima de posto; None para o código nulo.

    Por linearidade é o menor peso de uma palavra não nula.
    """
    return brute_distribution(code, cap=cap).min_nonzero_weight()


def diameter(code: LinearCode, cap: Optional[int] = None) -> Optional[int]:
    """Maior distância de posto entre palavras; None para o código nulo."""
    return brute_distribution(code, cap=cap).max_nonzero_weight()


def hadamard_rank_enumerator(
    v: Sequence[int],
    spec: FieldSpec,
    cap: Optional[int] = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> HomogPoly:
    """
    Transformada de Hadamard f̂_R(v) = Σ_u χ(u·v) y^{rk(u)} x^{n-rk(u)}.

    Para q = 2, χ(a) = (-1)^{a_0}, onde a_0 é a coordenada de a no
    elemento 1 da base.

    Args:
        v: Vetor de GF(2^m)^n
        spec: Corpo (q = 2)
        cap: Limite para q^{mn}

    Returns:
        HomogPoly de grau n com coeficientes inteiros

    Raises:
        UnsupportedFieldError: Se q != 2
        EnumerationCapError: Se q^{mn} exceder cap
    """
    if spec.q != 2:
        raise UnsupportedFieldError(
            f"Transformada de Hadamard implementada apenas para q=2, recebido: q={spec.q}"
        )
    n = len(v)
    total = spec.order**n
    _check_cap(total, cap, "vetores")

    gf = spec.gf
    target = gf(np.array(v, dtype=np.int64))
    counts = np.zeros(n + 1, dtype=np.int64)
    for messages in _message_chunks(n, spec.order, total, chunk_size):
        ranks = batched_rank(coordinate_matrices(messages, spec), spec.q)
        signs = _as_ints(gf(messages) @ target) % 2
        counts += np.bincount(ranks[signs == 0], minlength=n + 1)
        counts -= np.bincount(ranks[signs == 1], minlength=n + 1)

    return HomogPoly(spec.q, [int(c) for c in counts])
