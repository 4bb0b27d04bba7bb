"""
Suítes de verificação das identidades.

Cada suíte percorre uma grade de parâmetros e devolve linhas
IdentityResult com os dois lados de cada identidade calculados de forma
exata. As linhas são consolidadas em um DataFrame, resumidas e
formatadas como relatório pela CLI.

Suítes:
- gaussian: binomiais gaussianos, q-Stirling e variantes em p = 1/q
- qpoly: q-produto, q-derivadas, regras de Leibniz e divisões
- krawtchouk: recorrência, condições iniciais e expansão em q-produto
- codes: MacWilliams contra força bruta e momentos, código a código
- vector_duals: enumeradores de ⟨v⟩⊥ (q = 2)
- hadamard: transformada de Hadamard dos enumeradores de posto (q = 2)
- mrd: distribuições MRD de Classe I e II
- auxiliary: somas δ, θ, S e ortogonalidade
"""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
import itertools
import logging
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from tqdm import tqdm

from .codefile import code_to_model
from .exactnum import (
    MParamPoly,
    alpha,
    alpha_param,
    beta,
    count_subspaces,
    gaussian,
    normalize,
    p_variant,
    q_int,
    q_stirling2,
    qpow,
    sigma,
)
from .gfcodes import (
    FieldSpec,
    LinearCode,
    RankDistribution,
    brute_distribution,
    cartesian_product,
    default_gabidulin,
    direct_sum,
    dual_code,
    hadamard_rank_enumerator,
    random_code,
    rank_weight,
    repetition_code,
    whole_space,
    zero_code,
)
from .macwilliams import (
    NotACodeDistributionError,
    cartesian_enumerator,
    dual_vector_enumerator,
    kernel_coefficients,
    krawtchouk,
    macwilliams_functional,
    macwilliams_krawtchouk,
    mrd_r_enumerator,
    vector_rank_enumerator,
)
from .moments import (
    MomentCheck,
    delta_closed,
    delta_sum,
    moment_suite,
    orthogonality_sum,
    s_sum,
    theta_closed,
    theta_sum,
)
from .mrd import (
    class2_distribution,
    gaussian_forward,
    gaussian_inversion,
    mrd_distribution,
    singleton_bound,
)
from .qpoly import (
    HomogPoly,
    a_poly,
    b_poly,
    divide_by_x,
    divide_by_y,
    evaluate,
    from_distribution,
    q_derivative,
    q_inv_derivative,
    q_power,
    q_product,
    scale_y,
    shift_m,
    specialize,
)

logger = logging.getLogger(__name__)

SUITES = (
    "gaussian",
    "qpoly",
    "krawtchouk",
    "codes",
    "vector_duals",
    "hadamard",
    "mrd",
    "auxiliary",
)

RESULT_COLUMNS = [
    "suite", "identity", "cell", "parameters", "status", "lhs", "rhs", "reason", "reproducer",
]


@dataclass(frozen=True)
class IdentityResult:
    """
    Uma identidade avaliada em uma célula da grade.

    Attributes:
        suite: Nome da suíte
        identity: Nome da identidade
        cell: Rótulo da célula (parâmetros legíveis)
        parameters: Parâmetros numéricos da identidade
        status: 'held', 'failed' ou 'skipped'
        lhs, rhs: Os dois lados como texto exato
        reason: Motivo do salto
        reproducer: Documento de código mínimo que reproduz uma falha
    """

    suite: str
    identity: str
    cell: str
    parameters: Dict[str, int] = field(default_factory=dict)
    status: str = "held"
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    reason: Optional[str] = None
    reproducer: Optional[Dict[str, Any]] = None

    @property
    def failed(self) -> bool:
        return self.status == "failed"


def _fmt(value: Any) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, RankDistribution):
        return str(list(value.counts))
    if isinstance(value, Fraction):
        return str(normalize(value))
    return str(value)


def _compare(
    suite: str,
    identity: str,
    cell: str,
    lhs: Any,
    rhs: Any,
    reproducer: Optional[Dict[str, Any]] = None,
    **parameters: int,
) -> IdentityResult:
    if lhs == rhs:
        return IdentityResult(suite, identity, cell, parameters, "held", _fmt(lhs), _fmt(rhs))
    logger.warning("Identidade %s falhou em %s: %s != %s", identity, cell, lhs, rhs)
    return IdentityResult(
        suite, identity, cell, parameters, "failed", _fmt(lhs), _fmt(rhs), reproducer=reproducer
    )


def _skip(suite: str, identity: str, cell: str, reason: str, **parameters: int) -> IdentityResult:
    logger.debug("Pulando %s em %s: %s", identity, cell, reason)
    return IdentityResult(suite, identity, cell, parameters, "skipped", reason=reason)


def _from_moment(
    check: MomentCheck, cell: str, reproducer: Optional[Dict[str, Any]]
) -> IdentityResult:
    return IdentityResult(
        "moments",
        check.identity,
        cell,
        dict(check.parameters),
        check.status,
        _fmt(check.lhs),
        _fmt(check.rhs),
        check.reason,
        reproducer if check.status == "failed" else None,
    )


# =========================================================================
# Binomiais gaussianos e funções escalares
# =========================================================================

def gaussian_suite(q: int, max_n: int = 8, max_nu: int = 5) -> List[IdentityResult]:
    """
    Propriedades dos binomiais gaussianos, q-Stirling e variantes em p.

    Args:
        q: Primo
        max_n: Maior n das identidades de Pascal e do produto
        max_nu: Maior ν (e m) das grades de Stirling e das conversões

    Returns:
        Lista de IdentityResult
    """
    suite = "gaussian"
    results: List[IdentityResult] = []

    for n in range(max_n + 1):
        for k in range(n + 1):
            cell = f"q={q},n={n},k={k}"
            g = gaussian(n, k, q)
            results.append(_compare(suite, "gaussian_symmetry", cell, g, gaussian(n, n - k, q), n=n, k=k))
            if n >= 1:
                results.append(_compare(
                    suite, "pascal_a1", cell, g,
                    gaussian(n - 1, k, q) + q ** (n - k) * gaussian(n - 1, k - 1, q), n=n, k=k,
                ))
                results.append(_compare(
                    suite, "pascal_a2", cell, g,
                    q**k * gaussian(n - 1, k, q) + gaussian(n - 1, k - 1, q), n=n, k=k,
                ))
            if k < n:
                results.append(_compare(
                    suite, "pascal_a3", cell, g * (q ** (n - k) - 1),
                    (q**n - 1) * gaussian(n - 1, k, q), n=n, k=k,
                ))
            if k >= 1:
                results.append(_compare(
                    suite, "pascal_a4", cell, g * (q**k - 1),
                    (q ** (n - k + 1) - 1) * gaussian(n, k - 1, q), n=n, k=k,
                ))
            for l in range(k + 1):
                results.append(_compare(
                    suite, "gaussian_product_rule", cell, g * gaussian(k, l, q),
                    gaussian(n, l, q) * gaussian(n - l, n - k, q), n=n, k=k, l=l,
                ))

    # Censo de subespaços apenas para espaços com até 81 vetores
    for n in range(max_n + 1):
        if q**n > 81:
            break
        for u in range(n + 1):
            results.append(_compare(
                suite, "subspace_census", f"q={q},n={n},u={u}",
                count_subspaces(n, u, q), gaussian(n, u, q), n=n, u=u,
            ))

    for nu in range(max_nu + 1):
        for m in range(1, max_nu + 1):
            rhs = normalize(sum(
                Fraction(q_stirling2(nu, l, q)) * q ** sigma(l) * beta(m, l, q)
                for l in range(nu + 1)
            ))
            results.append(_compare(
                suite, "q_stirling_expansion", f"q={q},nu={nu},m={m}",
                q_int(m, q) ** nu, rhs, nu=nu, m=m,
            ))

    for m in range(max_nu + 1):
        for u in range(m + 2):
            cell = f"q={q},m={m},u={u}"
            results.append(_compare(
                suite, "p_conversion_alpha", cell, alpha(m, u, q),
                normalize((-1) ** u * Fraction(qpow(q, m * u + sigma(u))) * p_variant("alpha", m, u, q=q)),
                m=m, u=u,
            ))
            results.append(_compare(
                suite, "p_conversion_gaussian", cell, gaussian(m, u, q),
                normalize(Fraction(qpow(q, u * (m - u))) * p_variant("gaussian", m, u, q=q)),
                m=m, u=u,
            ))
            results.append(_compare(
                suite, "p_conversion_beta", cell, beta(m, u, q),
                normalize(Fraction(qpow(q, u * (m - u) + sigma(u))) * p_variant("beta", m, u, q=q)),
                m=m, u=u,
            ))

    return results


# =========================================================================
# q-cálculo
# =========================================================================

def _random_param(rng: np.random.Generator, q: int) -> MParamPoly:
    return MParamPoly(q, {e: int(rng.integers(-3, 4)) for e in (-1, 0, 1)})


def _random_poly(rng: np.random.Generator, q: int, degree: int) -> HomogPoly:
    return HomogPoly(q, [_random_param(rng, q) for _ in range(degree + 1)])


def _with_zero(f: HomogPoly, index: int) -> HomogPoly:
    coeffs = list(f.coeffs)
    coeffs[index] = 0
    return HomogPoly(f.q, coeffs)


def leibniz_x_rhs(f: HomogPoly, g: HomogPoly, nu: int) -> HomogPoly:
    """Σ_l [ν l] q^{(ν-l)(r-l)} f^{(l)} * g^{(ν-l)}."""
    q, r = f.q, f.degree
    total = HomogPoly.zero(q)
    for l in range(nu + 1):
        term = q_product(q_derivative(f, l), q_derivative(g, nu - l))
        total = total + term * (gaussian(nu, l, q) * q ** ((nu - l) * (r - l)))
    return total


def leibniz_y_rhs(f: HomogPoly, g: HomogPoly, nu: int) -> HomogPoly:
    """Σ_l [ν l] q^{l(s-ν+l)} f^{{l}} * g^{{ν-l}}(x, y; m-l)."""
    q, s = f.q, g.degree
    total = HomogPoly.zero(q)
    for l in range(nu + 1):
        term = q_product(q_inv_derivative(f, l), shift_m(q_inv_derivative(g, nu - l), l))
        total = total + term * (gaussian(nu, l, q) * Fraction(qpow(q, l * (s - nu + l))))
    return total


def qpoly_suite(
    q: int,
    seed: int = 42,
    trials: int = 100,
    max_degree: int = 5,
    max_nu: int = 4,
) -> List[IdentityResult]:
    """
    Leis do q-cálculo em grades completas e em polinômios aleatórios.

    Os polinômios aleatórios têm coeficientes de Laurent em Q = q^m com
    inteiros em [-3, 3]; o gerador é numpy com a seed informada.

    Args:
        q: Primo
        seed: Seed dos polinômios aleatórios
        trials: Número de sorteios
        max_degree: Grau máximo dos fatores sorteados
        max_nu: Ordem máxima das derivadas sorteadas

    Returns:
        Lista de IdentityResult
    """
    suite = "qpoly"
    results: List[IdentityResult] = []

    for l in range(7):
        cell = f"q={q},l={l}"
        results.append(_compare(suite, "a_poly_q_power", cell, q_power(a_poly(1, q), l), a_poly(l, q), l=l))
        results.append(_compare(suite, "b_poly_q_power", cell, q_power(b_poly(1, q), l), b_poly(l, q), l=l))

    for l in range(6):
        for nu in range(l + 1):
            cell = f"q={q},l={l},nu={nu}"
            factor = beta(l, nu, q)
            results.append(_compare(
                suite, "a_poly_q_derivative", cell,
                q_derivative(a_poly(l, q), nu), a_poly(l - nu, q) * factor, l=l, nu=nu,
            ))
            results.append(_compare(
                suite, "b_poly_q_derivative", cell,
                q_derivative(b_poly(l, q), nu), b_poly(l - nu, q) * factor, l=l, nu=nu,
            ))
            results.append(_compare(
                suite, "b_poly_q_inv_derivative", cell,
                q_inv_derivative(b_poly(l, q), nu), b_poly(l - nu, q) * ((-1) ** nu * factor), l=l, nu=nu,
            ))
            results.append(_compare(
                suite, "a_poly_q_inv_derivative", cell,
                q_inv_derivative(a_poly(l, q), nu),
                shift_m(a_poly(l - nu, q), nu) * alpha_param(nu, q) * Fraction(factor, q ** sigma(nu)),
                l=l, nu=nu,
            ))

    x, y = HomogPoly.x(q), HomogPoly.y(q)
    results.append(_compare(suite, "q_commutation_xy", f"q={q}", q_product(y, x), q_product(x, y) * q))

    rng = np.random.default_rng(seed)
    for trial in range(trials):
        r = int(rng.integers(1, max_degree + 1))
        s = int(rng.integers(1, max_degree + 1))
        nu = int(rng.integers(0, min(r, s, max_nu) + 1))
        f, g = _random_poly(rng, q, r), _random_poly(rng, q, s)
        h = _random_poly(rng, q, r)
        cell = f"q={q},trial={trial},r={r},s={s},nu={nu}"
        params = {"trial": trial, "r": r, "s": s, "nu": nu}

        fg = q_product(f, g)
        results.append(_compare(suite, "leibniz_x", cell, q_derivative(fg, nu), leibniz_x_rhs(f, g, nu), **params))
        results.append(_compare(suite, "leibniz_y", cell, q_inv_derivative(fg, nu), leibniz_y_rhs(f, g, nu), **params))

        u, v = _with_zero(f, r), g
        results.append(_compare(
            suite, "divide_x_left", cell, divide_by_x(q_product(u, v)), q_product(divide_by_x(u), v), **params,
        ))
        u, v = f, _with_zero(g, s)
        results.append(_compare(
            suite, "divide_x_right", cell,
            divide_by_x(q_product(u, v)), q_product(scale_y(u, q), divide_by_x(v)), **params,
        ))
        u, v = _with_zero(f, 0), g
        results.append(_compare(
            suite, "divide_y_left", cell,
            divide_by_y(q_product(u, v)), q_product(divide_by_y(u), shift_m(v, 1)) * q**s, **params,
        ))
        u, v = f, _with_zero(g, 0)
        results.append(_compare(
            suite, "divide_y_right", cell,
            divide_by_y(q_product(u, v)), q_product(scale_y(u, q), divide_by_y(v)), **params,
        ))

        results.append(_compare(
            suite, "distributivity_left", cell, q_product(f + h, g), q_product(f, g) + q_product(h, g), **params,
        ))
        results.append(_compare(
            suite, "distributivity_right", cell, q_product(g, f + h), q_product(g, f) + q_product(g, h), **params,
        ))
        c = int(rng.integers(1, 6))
        constant = HomogPoly(q, [c])
        results.append(_compare(suite, "constant_left", cell, q_product(constant, f), f * c, **params))
        results.append(_compare(suite, "constant_right", cell, q_product(f, constant), f * c, **params))

        shift = int(rng.integers(0, 4))
        m = int(rng.integers(1, 5))
        results.append(_compare(
            suite, "a_poly_product_at_one", cell,
            evaluate(q_product(f, a_poly(shift, q)), m, 1, 1),
            normalize(q ** (m * shift) * Fraction(evaluate(f, m, 1, 1))),
            s_a=shift, m=m, **params,
        ))

    return results


# =========================================================================
# Krawtchouk
# =========================================================================

def krawtchouk_suite(q: int, max_ij: int = 5, max_mn: int = 6) -> List[IdentityResult]:
    """
    Recorrência, condições iniciais e expansão em q-produto de P_j(i; m, n).

    A recorrência só é avaliada quando i + 1 <= n e j + 1 <= n.
    """
    suite = "krawtchouk"
    results: List[IdentityResult] = []
    for m in range(1, max_mn + 1):
        for n in range(max_mn + 1):
            for i in range(min(max_ij, n) + 1):
                for j in range(min(max_ij, n) + 1):
                    cell = f"q={q},m={m},n={n},i={i},j={j}"
                    params = {"i": i, "j": j, "m": m, "n": n}
                    if i + 1 <= n and j + 1 <= n:
                        lhs = krawtchouk(j + 1, i + 1, m + 1, n + 1, q)
                        rhs = (
                            q ** (j + 1) * krawtchouk(j + 1, i, m, n, q)
                            - q**j * krawtchouk(j, i, m, n, q)
                        )
                        results.append(_compare(suite, "krawtchouk_recurrence", cell, lhs, normalize(rhs), **params))
                    results.append(_compare(
                        suite, "krawtchouk_product_expansion", cell,
                        krawtchouk(j, i, m, n, q), kernel_coefficients(i, n, m, q)[j], **params,
                    ))
            for j in range(n + 1):
                cell = f"q={q},m={m},n={n},j={j}"
                results.append(_compare(
                    suite, "krawtchouk_initial_i0", cell,
                    krawtchouk(j, 0, m, n, q), gaussian(n, j, q) * alpha(m, j, q), j=j, m=m, n=n,
                ))
            for i in range(n + 1):
                results.append(_compare(
                    suite, "krawtchouk_initial_j0", f"q={q},m={m},n={n},i={i}",
                    krawtchouk(0, i, m, n, q), 1, i=i, m=m, n=n,
                ))
    return results


# =========================================================================
# Códigos concretos
# =========================================================================

def code_catalog(
    spec: FieldSpec, n: int, seed: int = 42, random_codes: int = 3
) -> Iterator[Tuple[str, LinearCode]]:
    """
    Códigos estruturados e aleatórios de comprimento n sobre spec.

    Yields:
        (rótulo, código)
    """
    yield "zero", zero_code(spec, n)
    yield "whole_space", whole_space(spec, n)
    yield "repetition", repetition_code(spec, n)
    if n <= spec.m:
        for k in range(1, n + 1):
            yield f"gabidulin_k{k}", default_gabidulin(spec, n, k)
    for k in range(1, n):
        for t in range(random_codes):
            yield f"random_k{k}_{t}", random_code(spec, n, k, seed=seed + 100 * k + t)


def _orthogonality_defect(code: LinearCode, dual: LinearCode) -> int:
    if code.k == 0 or dual.k == 0:
        return 0
    product = code.generator_matrix() @ dual.generator_matrix().T
    return int(np.count_nonzero(product))


def _safe_transform(
    func: Callable[..., RankDistribution], A: Sequence[int], k: int, q: int, m: int
) -> Union[RankDistribution, Tuple]:
    try:
        return func(A, k, q, m)
    except NotACodeDistributionError as e:
        return e.values


def check_code(
    code: LinearCode,
    label: str,
    cap: int,
    max_n: Optional[int] = None,
) -> List[IdentityResult]:
    """
    Todas as identidades de um código concreto.

    Compara as duas formas da identidade de MacWilliams com o censo do
    dual, verifica a involução, a ortogonalidade do dual, a suíte de
    momentos e o enumerador de C × GF(q^m)^s para s <= 2.

    Args:
        code: Código a verificar
        label: Rótulo do código na célula
        cap: Limite de palavras enumeradas por código
        max_n: Comprimento máximo dos produtos cartesianos (padrão: n + 2)

    Returns:
        Lista de IdentityResult; um único salto se o código exceder cap
    """
    suite = "codes"
    spec, n, k = code.field, code.n, code.k
    q, m = spec.q, spec.m
    cell = f"q={q},m={m},n={n},{label}"
    required = max(code.size, q ** (m * (n - k)))
    if required > cap:
        return [_skip(suite, "code_cell", cell, f"{required} palavras excedem o limite {cap}", k=k)]

    reproducer = code_to_model(code).model_dump()
    A = brute_distribution(code)
    dual = dual_code(code)
    B = brute_distribution(dual)

    results = [
        _compare(suite, "code_cardinality", cell, A.total, code.size, reproducer, k=k),
        _compare(suite, "dual_dimension", cell, dual.k, n - k, reproducer, k=k),
        _compare(suite, "dual_orthogonality", cell, _orthogonality_defect(code, dual), 0, reproducer, k=k),
        _compare(
            suite, "macwilliams_functional", cell,
            _safe_transform(macwilliams_functional, A, k, q, m), B, reproducer, k=k,
        ),
        _compare(
            suite, "macwilliams_krawtchouk", cell,
            _safe_transform(macwilliams_krawtchouk, A, k, q, m), B, reproducer, k=k,
        ),
        _compare(
            suite, "macwilliams_involution", cell,
            _safe_transform(macwilliams_functional, B, n - k, q, m), A, reproducer, k=k,
        ),
    ]
    if label == "whole_space":
        census = RankDistribution(tuple(gaussian(n, u, q) * alpha(m, u, q) for u in range(n + 1)))
        results.append(_compare(suite, "whole_space_census", cell, A, census, reproducer, k=k))

    d_dual = B.min_nonzero_weight()
    diameter_dual = B.max_nonzero_weight()
    for check in moment_suite(
        A.counts, B.counts, k, q, m,
        n + 1 if d_dual is None else d_dual,
        0 if diameter_dual is None else diameter_dual,
    ):
        results.append(_from_moment(check, cell, reproducer))

    w0 = from_distribution(A.counts, q)
    limit = n + 2 if max_n is None else max_n
    for s in (1, 2):
        if n + s > limit:
            break
        if q ** (m * (k + s)) > cap:
            results.append(_skip(suite, "cartesian_product", cell, f"q^(m(k+s)) excede o limite {cap}", k=k, s=s))
            continue
        census = from_distribution(brute_distribution(cartesian_product(code, s)).counts, q)
        results.append(_compare(
            suite, "cartesian_q_product", cell, census,
            specialize(q_product(w0, a_poly(s, q)), m), reproducer, k=k, s=s,
        ))
        results.append(_compare(
            suite, "cartesian_closed_form", cell, census,
            cartesian_enumerator(w0, s, m), reproducer, k=k, s=s,
        ))
    return results


def codes_suite(
    q: int,
    max_m: int = 3,
    max_n: int = 4,
    cap: int = 2**20,
    seed: int = 42,
    random_codes: int = 3,
    progress: bool = False,
) -> List[IdentityResult]:
    """
    Executa check_code para todos os códigos do catálogo na grade m <= max_m, n <= max_n.
    """
    cells = [(m, n) for m in range(1, max_m + 1) for n in range(1, max_n + 1)]
    results: List[IdentityResult] = []
    n_codes = 0
    for m, n in tqdm(cells, desc=f"Códigos q={q}", disable=not progress):
        spec = FieldSpec.default(q, m)
        for label, code in code_catalog(spec, n, seed=seed, random_codes=random_codes):
            results.extend(check_code(code, label, cap, max_n=max_n))
            n_codes += 1
    logger.info("Suíte de códigos: %d códigos, %d verificações", n_codes, len(results))
    return results


def vector_dual_suite(
    q: int, max_m: int = 3, max_n: int = 3, cap: int = 2**20
) -> List[IdentityResult]:
    """
    Enumerador de ⟨v⟩⊥ para todo v não nulo de GF(2^m)^n.

    O censo de ⟨v⟩⊥ deve coincidir com dual_vector_enumerator(n, rk(v), m)
    e, quando rk(v) = n, com o enumerador MRD de mrd_r_enumerator.
    """
    suite = "vector_duals"
    if q != 2:
        return [_skip(suite, "dual_vector_enumerator", f"q={q}", "implementado apenas para q=2")]

    results: List[IdentityResult] = []
    for m in range(1, max_m + 1):
        for r in range(m + 1):
            results.append(_compare(
                suite, "vector_rank_enumerator", f"q={q},m={m},r={r}",
                vector_rank_enumerator(r, m, q), mrd_r_enumerator(r, m, q), m=m, r=r,
            ))

        spec = FieldSpec.default(q, m)
        for n in range(1, min(max_n, 3) + 1):
            cell = f"q={q},m={m},n={n}"
            required = spec.order**n * q ** (m * (n - 1))
            if required > cap:
                results.append(_skip(suite, "dual_vector_enumerator", cell, f"{required} excede o limite {cap}", m=m, n=n))
                continue
            expected = {r: dual_vector_enumerator(n, r, m, q) for r in range(min(m, n) + 1)}
            mismatches = {r: 0 for r in expected}
            for v in itertools.product(range(spec.order), repeat=n):
                if not any(v):
                    continue
                r = rank_weight(v, spec)
                census = from_distribution(brute_distribution(dual_code(LinearCode(spec, n, (v,)))).counts, q)
                if census != expected[r]:
                    mismatches[r] += 1
                    logger.warning("⟨%s⟩⊥ com enumerador %r diverge de r=%d", v, census, r)
            for r, count in mismatches.items():
                results.append(_compare(suite, "dual_vector_enumerator", f"{cell},r={r}", count, 0, m=m, n=n, r=r))
            if n <= m:
                results.append(_compare(
                    suite, "dual_full_rank_is_mrd", cell, expected[n], mrd_r_enumerator(n, m, q), m=m, n=n,
                ))
    return results


def hadamard_suite(
    q: int, max_m: int = 3, max_n: int = 3, cap: int = 2**20
) -> List[IdentityResult]:
    """
    f̂_R(v) = (x - y)^{[r]} * a_{n-r} para todo v de GF(2^m)^n, r = rk(v).
    """
    suite = "hadamard"
    if q != 2:
        return [_skip(suite, "hadamard_transform", f"q={q}", "implementado apenas para q=2")]

    results: List[IdentityResult] = []
    for m in range(1, max_m + 1):
        spec = FieldSpec.default(q, m)
        for n in range(1, min(max_n, 3) + 1):
            cell = f"q={q},m={m},n={n}"
            if spec.order ** (2 * n) > cap:
                results.append(_skip(suite, "hadamard_transform", cell, f"q^(2mn) excede o limite {cap}", m=m, n=n))
                continue
            expected = {
                r: specialize(q_product(b_poly(r, q), a_poly(n - r, q)), m)
                for r in range(min(m, n) + 1)
            }
            mismatches = {r: 0 for r in expected}
            for v in itertools.product(range(spec.order), repeat=n):
                r = rank_weight(v, spec)
                if hadamard_rank_enumerator(v, spec) != expected[r]:
                    mismatches[r] += 1
            for r, count in mismatches.items():
                results.append(_compare(suite, "hadamard_transform", f"{cell},r={r}", count, 0, m=m, n=n, r=r))
    return results


# =========================================================================
# MRD
# =========================================================================

def _padded(distribution: RankDistribution, n: int) -> RankDistribution:
    return RankDistribution(distribution.counts + (0,) * (n - distribution.n))


def mrd_suite(
    q: int, max_m: int = 3, max_n: int = 4, cap: int = 2**20, seed: int = 42
) -> List[IdentityResult]:
    """
    Distribuição MRD analítica contra censos de Gabidulin, dualidade,
    inversão binomial e a Classe II (transposição e soma direta G^l).
    """
    suite = "mrd"
    results: List[IdentityResult] = []

    for m in range(1, max_m + 1):
        spec = FieldSpec.default(q, m)
        for n in range(1, m + 1):
            for k in range(1, n + 1):
                cell = f"q={q},m={m},n={n},k={k}"
                params = {"m": m, "n": n, "k": k}
                analytic = mrd_distribution(q, m, n, k)
                results.append(_compare(
                    suite, "mrd_singleton_total", cell,
                    analytic.total, singleton_bound(q, m, n, n - k + 1), **params,
                ))
                dual = _safe_transform(macwilliams_functional, analytic, k, q, m)
                expected = mrd_distribution(q, m, n, n - k) if k < n else RankDistribution((1,) + (0,) * n)
                results.append(_compare(suite, "mrd_dual_is_mrd", cell, dual, expected, **params))
                if q ** (m * k) > cap:
                    results.append(_skip(suite, "mrd_gabidulin_census", cell, f"q^(mk) excede o limite {cap}", **params))
                    continue
                code = default_gabidulin(spec, n, k)
                census = brute_distribution(code)
                reproducer = code_to_model(code).model_dump()
                results.append(_compare(suite, "mrd_gabidulin_census", cell, census, analytic, reproducer, **params))
                results.append(_compare(
                    suite, "gabidulin_attains_singleton", cell, census.total,
                    singleton_bound(q, m, n, census.min_nonzero_weight()), reproducer, **params,
                ))

        for n in range(m + 1, max_n + 1):
            for k_eff in range(1, m + 1):
                cell = f"q={q},m={m},n={n},k_eff={k_eff}"
                params = {"m": m, "n": n, "k_eff": k_eff}
                analytic = class2_distribution(q, m, n, k_eff)
                results.append(_compare(
                    suite, "class2_singleton_total", cell,
                    analytic.total, singleton_bound(q, m, n, m - k_eff + 1), **params,
                ))
                if q ** (n * k_eff) > cap:
                    results.append(_skip(suite, "class2_transposed_census", cell, f"q^(n·k) excede o limite {cap}", **params))
                else:
                    transposed = default_gabidulin(FieldSpec.default(q, n), m, k_eff)
                    results.append(_compare(
                        suite, "class2_transposed_census", cell,
                        _padded(brute_distribution(transposed), n), analytic, **params,
                    ))
                if n % m == 0:
                    if q ** (n * k_eff) > cap:
                        results.append(_skip(suite, "class2_direct_sum_census", cell, f"q^(n·k) excede o limite {cap}", **params))
                        continue
                    block = default_gabidulin(spec, m, k_eff)
                    code = block
                    for _ in range(n // m - 1):
                        code = direct_sum(code, block)
                    results.append(_compare(
                        suite, "class2_direct_sum_census", cell, brute_distribution(code), analytic,
                        code_to_model(code).model_dump(), **params,
                    ))

    rng = np.random.default_rng(seed)
    for l in range(7):
        b = [int(v) for v in rng.integers(-20, 21, size=l + 1)]
        results.append(_compare(
            suite, "gaussian_inversion_round_trip", f"q={q},l={l}",
            gaussian_inversion(gaussian_forward(b, q), q), b, l=l,
        ))
    return results


# =========================================================================
# Somas auxiliares
# =========================================================================

def auxiliary_suite(q: int, max_n: int = 6) -> List[IdentityResult]:
    """Somas δ e θ, ortogonalidade dos binomiais e simetrias de S(ν, n, m)."""
    suite = "auxiliary"
    results: List[IdentityResult] = []
    for m in range(max_n + 1):
        for nu in range(m + 1):
            for j in range(nu + 1):
                results.append(_compare(
                    suite, "delta_closed_form", f"q={q},m={m},nu={nu},j={j}",
                    delta_sum(m, nu, j, q), delta_closed(m, nu, j, q), m=m, nu=nu, j=j,
                ))
    for n in range(max_n + 1):
        for nu in range(n + 1):
            for j in range(nu + 1):
                results.append(_compare(
                    suite, "theta_closed_form", f"q={q},n={n},nu={nu},j={j}",
                    theta_sum(n, nu, j, q), theta_closed(n, nu, j, q), n=n, nu=nu, j=j,
                ))
    for nu in range(max_n + 1):
        for l in range(nu + 1):
            results.append(_compare(
                suite, "binomial_orthogonality", f"q={q},nu={nu},l={l}",
                orthogonality_sum(nu, l, q), int(nu == l), nu=nu, l=l,
            ))
    for nu in range(1, 6):
        for n in range(1, 6):
            for m in range(1, 6):
                cell = f"q={q},nu={nu},n={n},m={m}"
                value = s_sum(nu, n, m, q)
                results.append(_compare(suite, "s_sum_symmetry", cell, value, s_sum(n, nu, m, q), nu=nu, n=n, m=m))
                results.append(_compare(
                    suite, "s_sum_swap", cell, value,
                    normalize(Fraction(qpow(q, nu * (n - m))) * s_sum(nu, m, n, q)), nu=nu, n=n, m=m,
                ))
    return results


# =========================================================================
# Execução e relatório
# =========================================================================

def run_verification(
    q: Union[int, Sequence[int]] = (2, 3),
    max_m: int = 3,
    max_n: int = 4,
    cap: int = 2**20,
    seed: int = 42,
    trials: int = 100,
    suites: Optional[Sequence[str]] = None,
    progress: bool = False,
    mrd_max_m: int = 4,
) -> List[IdentityResult]:
    """
    Executa as suítes pedidas na grade (q, m <= max_m, n <= max_n).

    Args:
        q: Primo ou sequência de primos, percorridos em ordem
        max_m: Maior grau de extensão
        max_n: Maior comprimento
        cap: Limite de palavras enumeradas por célula
        seed: Seed dos códigos e polinômios aleatórios
        trials: Sorteios da suíte qpoly
        suites: Subconjunto de SUITES (padrão: todas)
        progress: Exibir barras de progresso
        mrd_max_m: Alcance mínimo de m na suíte mrd, que usa max(max_m, mrd_max_m)

    Returns:
        Lista de IdentityResult, em ordem determinística

    Raises:
        ValueError: Se alguma suíte for desconhecida
    """
    selected = list(SUITES if suites is None else suites)
    unknown = [s for s in selected if s not in SUITES]
    if unknown:
        raise ValueError(f"Suítes desconhecidas: {', '.join(unknown)}. Disponíveis: {', '.join(SUITES)}")

    fields = [q] if isinstance(q, int) else list(q)
    if not fields:
        raise ValueError("Informe ao menos um valor de q")
    mrd_m = max(max_m, mrd_max_m)

    results: List[IdentityResult] = []
    for field_q in fields:
        runners: Dict[str, Callable[[], List[IdentityResult]]] = {
            "gaussian": lambda: gaussian_suite(field_q),
            "qpoly": lambda: qpoly_suite(field_q, seed=seed, trials=trials),
            "krawtchouk": lambda: krawtchouk_suite(field_q),
            "codes": lambda: codes_suite(field_q, max_m, max_n, cap, seed, progress=progress),
            "vector_duals": lambda: vector_dual_suite(field_q, max_m, max_n, cap),
            "hadamard": lambda: hadamard_suite(field_q, max_m, max_n, cap),
            "mrd": lambda: mrd_suite(field_q, mrd_m, max_n, cap, seed),
            "auxiliary": lambda: auxiliary_suite(field_q),
        }
        for name in selected:
            logger.info("Executando suíte %s (q=%d, max_m=%d, max_n=%d)", name, field_q, max_m, max_n)
            suite_results = runners[name]()
            logger.info("Suíte %s: %d verificações", name, len(suite_results))
            results.extend(suite_results)
    return results

def results_to_dataframe(results: Sequence[IdentityResult]) -> pd.DataFrame:
    """Tabela com uma linha por identidade avaliada."""
    return pd.DataFrame([asdict(r) for r in results], columns=RESULT_COLUMNS)


def summarize_results(results_df: pd.DataFrame) -> Dict[str, int]:
    """
    Contagens por status.

    Returns:
        Dicionário com total, held, failed e skipped
    """
    counts = results_df["status"].value_counts() if len(results_df) else pd.Series(dtype=int)
    return {
        "total": int(len(results_df)),
        "held": int(counts.get("held", 0)),
        "failed": int(counts.get("failed", 0)),
        "skipped": int(counts.get("skipped", 0)),
    }


def _cell_key(result: IdentityResult) -> Tuple:
    values: Dict[str, int] = {}
    for part in result.cell.split(","):
        name, _, value = part.partition("=")
        if value.lstrip("-").isdigit():
            values[name] = int(value)
    values.update(result.parameters)
    head = tuple(values.pop(name, 0) for name in ("q", "m", "n"))
    return head + tuple(sorted(values.items()))


def first_failure(results: Sequence[IdentityResult]) -> Optional[IdentityResult]:
    """
    Falha na menor célula, ordenada por (q, m, n) e demais parâmetros.

    Falhas com código reprodutor têm preferência.
    """
    failures = [r for r in results if r.failed]
    if not failures:
        return None
    with_code = [r for r in failures if r.reproducer is not None]
    return min(with_code or failures, key=_cell_key)


def format_verification_report(results_df: pd.DataFrame, summary: Dict[str, int]) -> str:
    """
    Relatório legível da verificação.

    Args:
        results_df: Saída de results_to_dataframe
        summary: Saída de summarize_results

    Returns:
        Texto com resumo geral, tabela por suíte e falhas
    """
    lines = ["=" * 80, "RELATÓRIO DE VERIFICAÇÃO DAS IDENTIDADES", "=" * 80, ""]
    lines.append(f"Total de verificações: {summary['total']}")
    lines.append(f"Válidas: {summary['held']}")
    lines.append(f"Falhas: {summary['failed']}")
    lines.append(f"Puladas: {summary['skipped']}")
    lines.append("")

    if len(results_df):
        by_suite = results_df.groupby(["suite", "status"]).size().unstack(fill_value=0)
        lines.append("Por suíte:")
        lines.append(by_suite.to_string())
        lines.append("")

    failures = results_df[results_df["status"] == "failed"] if len(results_df) else results_df
    if len(failures):
        lines.append("=" * 80)
        lines.append("FALHAS")
        lines.append("=" * 80)
        for _, row in failures.iterrows():
            lines.append(f"✗ {row['suite']}/{row['identity']} [{row['cell']}]")
            lines.append(f"    lhs = {row['lhs']}")
            lines.append(f"    rhs = {row['rhs']}")
    else:
        lines.append("✓ Todas as identidades avaliadas valem")

    lines.append("=" * 80)
    return "\n".join(lines)
