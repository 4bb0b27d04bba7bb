"""
Interface de linha de comando (CLI) do rankmac.

Comandos disponíveis:
- weights: Distribuição de pesos de posto de um código
- dual: Distribuição do dual por força bruta, forma funcional ou Krawtchouk
- verify: Executa as suítes de identidades em uma grade de parâmetros
- krawtchouk: Valor exato de P_j(i; m, n)
- mrd: Distribuição analítica de um código MRD
- moments: Identidades de momentos de um código
- info: Comandos e configurações ativas

Códigos de saída: 0 (tudo válido ou pulado), 1 (falha de identidade),
2 (erro de uso, de leitura ou limite de enumeração excedido).
"""

from contextlib import contextmanager
from dataclasses import dataclass
import json
from pathlib import Path
import time
from typing import Callable, Iterator, List, Optional

import typer

from . import __version__
from .codefile import load_code_file
from .config import get_settings
from .exactnum import Exact
from .gfcodes import LinearCode, RankDistribution, brute_distribution, dual_code
from .logging_config import configure_logging
from .macwilliams import krawtchouk as krawtchouk_value
from .macwilliams import transform
from .moments import MomentCheck, moment_suite
from .mrd import class2_distribution, mrd_distribution, singleton_bound
from .schemas import IdentityOutcome, Report
from .verification import (
    SUITES,
    first_failure,
    format_verification_report,
    results_to_dataframe,
    run_verification,
    summarize_results,
)


app = typer.Typer(
    help="Identidade de MacWilliams para a métrica do posto",
    add_completion=False,
)


@dataclass
class CliState:
    json_output: bool = False
    timing: bool = False
    started: float = 0.0


# =========================================================================
# Auxiliares
# =========================================================================

@contextmanager
def _handled_errors() -> Iterator[None]:
    try:
        yield
    except typer.Exit:
        raise
    except ValueError as e:
        typer.secho(f"\n✗ Erro: {e}", fg=typer.colors.RED, bold=True, err=True)
        raise typer.Exit(code=2)
    except Exception as e:
        typer.secho(f"\n✗ Erro: {e}", fg=typer.colors.RED, bold=True, err=True)
        raise typer.Exit(code=1)


def _banner(state: CliState, title: str) -> None:
    if state.json_output:
        return
    typer.echo("=" * 60)
    typer.echo(title)
    typer.echo("=" * 60)


def _emit(state: CliState, report: Report, render: Callable[[], None]) -> None:
    if state.timing:
        report.elapsed_seconds = round(time.perf_counter() - state.started, 6)
    if state.json_output:
        typer.echo(report.to_json())
        return
    render()
    if report.elapsed_seconds is not None:
        typer.echo(f"\nTempo: {report.elapsed_seconds:.3f} s")


def _format_exact(value: Optional[Exact]) -> Optional[str]:
    return None if value is None else str(value)


def _code_parameters(code: LinearCode) -> dict:
    spec = code.field
    return {"q": spec.q, "m": spec.m, "modulus": list(spec.modulus), "n": code.n, "k": code.k}


def _moment_outcome(check: MomentCheck) -> IdentityOutcome:
    return IdentityOutcome(
        identity=check.identity,
        parameters=dict(check.parameters),
        status=check.status,
        lhs=_format_exact(check.lhs),
        rhs=_format_exact(check.rhs),
        reason=check.reason,
    )


def _echo_distribution(name: str, distribution: RankDistribution) -> None:
    typer.echo(f"{name} = ({', '.join(distribution.as_strings())})")


def _resolve_cap(cap: Optional[int]) -> int:
    return get_settings().cap if cap is None else cap


# =========================================================================
# Opções globais
# =========================================================================

@app.callback()
def main_callback(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Emitir o relatório em JSON"),
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="DEBUG, INFO, WARNING ou ERROR (padrão: RANKMAC_LOG_LEVEL)"
    ),
    log_format: Optional[str] = typer.Option(
        None, "--log-format", help="text ou json (padrão: RANKMAC_LOG_FORMAT)"
    ),
    timing: bool = typer.Option(False, "--timing", help="Incluir o tempo de execução no relatório"),
):
    """
    Identidade de MacWilliams para a métrica do posto.
    """
    settings = get_settings()
    with _handled_errors():
        configure_logging(log_level or settings.LOG_LEVEL, log_format or settings.LOG_FORMAT)
    ctx.obj = CliState(json_output=json_output, timing=timing, started=time.perf_counter())


# =========================================================================
# Comandos
# =========================================================================

@app.command()
def weights(
    ctx: typer.Context,
    code_file: Path = typer.Option(..., "--code-file", "-c", help="Arquivo JSON do código"),
    cap: Optional[int] = typer.Option(None, "--cap", help="Limite de palavras (padrão: RANKMAC_CAP)"),
):
    """
    Distribuição de pesos de posto, distância mínima, diâmetro e MRD.
    """
    state: CliState = ctx.obj
    _banner(state, "DISTRIBUIÇÃO DE PESOS DE POSTO")

    with _handled_errors():
        code = load_code_file(code_file)
        spec = code.field
        A = brute_distribution(code, cap=_resolve_cap(cap))
        d = A.min_nonzero_weight()
        diam = A.max_nonzero_weight()
        is_mrd_code = d is not None and code.size == singleton_bound(spec.q, spec.m, code.n, d)

    report = Report(
        command="weights",
        parameters=_code_parameters(code),
        distributions={"A": A.as_strings()},
        values={"d_R": d, "diameter": diam, "mrd": is_mrd_code},
    )

    def render() -> None:
        typer.echo(f"\nCódigo: {code}")
        _echo_distribution("A", A)
        typer.echo(f"d_R: {d if d is not None else 'indefinida (código nulo)'}")
        typer.echo(f"Diâmetro: {diam if diam is not None else 'indefinido (código nulo)'}")
        typer.echo(f"MRD: {'sim' if is_mrd_code else 'não'}")
        typer.secho("\n✓ Distribuição calculada com sucesso!", fg=typer.colors.GREEN, bold=True)

    _emit(state, report, render)


@app.command()
def dual(
    ctx: typer.Context,
    code_file: Path = typer.Option(..., "--code-file", "-c", help="Arquivo JSON do código"),
    method: str = typer.Option(
        "functional", "--method", "-m", help="brute, functional, krawtchouk ou all"
    ),
    cap: Optional[int] = typer.Option(None, "--cap", help="Limite de palavras (padrão: RANKMAC_CAP)"),
):
    """
    Distribuição do código dual pelo método escolhido.

    Com --method all, os três métodos são comparados e qualquer
    divergência encerra com código 1.
    """
    state: CliState = ctx.obj
    _banner(state, "DISTRIBUIÇÃO DO DUAL")

    methods = ["brute", "functional", "krawtchouk"] if method == "all" else [method]
    with _handled_errors():
        if any(m not in ("brute", "functional", "krawtchouk") for m in methods):
            raise ValueError(f"Método '{method}' inválido. Use brute, functional, krawtchouk ou all")
        code = load_code_file(code_file)
        spec = code.field
        limit = _resolve_cap(cap)
        A = brute_distribution(code, cap=limit)
        duals = {}
        for name in methods:
            if name == "brute":
                duals[name] = brute_distribution(dual_code(code), cap=limit)
            else:
                duals[name] = transform(A, code.k, spec.q, spec.m, name).result

    results: List[IdentityOutcome] = []
    if len(duals) > 1:
        agree = len({d.counts for d in duals.values()}) == 1
        results.append(IdentityOutcome(
            identity="method_agreement",
            status="held" if agree else "failed",
            lhs=str(list(duals["functional"].counts)),
            rhs=str(list(duals["brute"].counts)),
        ))
    failed = any(r.status == "failed" for r in results)

    report = Report(
        command="dual",
        parameters={**_code_parameters(code), "method": method},
        distributions={"A": A.as_strings(), **{f"B_{name}": d.as_strings() for name, d in duals.items()}},
        results=results,
        summary={"failed": int(failed)} if results else {},
    )

    def render() -> None:
        typer.echo(f"\nCódigo: {code}")
        _echo_distribution("A", A)
        for name, distribution in duals.items():
            _echo_distribution(f"B ({name})", distribution)
        if failed:
            typer.secho("\n✗ Os métodos divergem", fg=typer.colors.RED, bold=True)
        else:
            typer.secho("\n✓ Distribuição do dual calculada!", fg=typer.colors.GREEN, bold=True)

    _emit(state, report, render)
    if failed:
        raise typer.Exit(code=1)


@app.command()
def verify(
    ctx: typer.Context,
    q: Optional[List[int]] = typer.Option(
        None, "--q", help="Característica do corpo base; repita para vários (padrão: RANKMAC_VERIFY_Q)"
    ),
    max_m: Optional[int] = typer.Option(None, "--max-m", help="Maior m (padrão: RANKMAC_VERIFY_MAX_M)"),
    mrd_max_m: Optional[int] = typer.Option(
        None, "--mrd-max-m", help="Alcance mínimo de m nos censos MRD (padrão: RANKMAC_VERIFY_MRD_MAX_M)"
    ),
    max_n: Optional[int] = typer.Option(None, "--max-n", help="Maior n (padrão: RANKMAC_VERIFY_MAX_N)"),
    cap: Optional[int] = typer.Option(None, "--cap", help="Limite por célula (padrão: RANKMAC_VERIFY_CAP)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed das amostras (padrão: RANKMAC_SEED)"),
    trials: int = typer.Option(100, "--trials", help="Polinômios aleatórios por identidade"),
    suite: Optional[List[str]] = typer.Option(
        None, "--suite", "-s", help=f"Suítes a executar ({', '.join(SUITES)}); padrão: todas"
    ),
    progress: bool = typer.Option(False, "--progress/--no-progress", help="Exibir barras de progresso"),
):
    """
    Executa as suítes de identidades na grade pedida.

    Termina com código 1 se alguma identidade falhar, imprimindo um
    código reprodutor mínimo.
    """
    state: CliState = ctx.obj
    settings = get_settings()
    _banner(state, "VERIFICAÇÃO DAS IDENTIDADES")

    parameters = {
        "q": list(q) if q else list(settings.VERIFY_Q),
        "max_m": settings.VERIFY_MAX_M if max_m is None else max_m,
        "mrd_max_m": settings.VERIFY_MRD_MAX_M if mrd_max_m is None else mrd_max_m,
        "max_n": settings.VERIFY_MAX_N if max_n is None else max_n,
        "cap": settings.VERIFY_CAP if cap is None else cap,
        "seed": settings.SEED if seed is None else seed,
        "trials": trials,
        "suites": list(suite) if suite else list(SUITES),
    }
    with _handled_errors():
        if min(parameters["max_m"], parameters["max_n"], parameters["mrd_max_m"]) < 1:
            raise ValueError("--max-m, --max-n e --mrd-max-m devem ser >= 1")
        results = run_verification(
            q=parameters["q"],
            max_m=parameters["max_m"],
            mrd_max_m=parameters["mrd_max_m"],
            max_n=parameters["max_n"],
            cap=parameters["cap"],
            seed=parameters["seed"],
            trials=trials,
            suites=parameters["suites"],
            progress=progress and not state.json_output,
        )

    results_df = results_to_dataframe(results)
    summary = summarize_results(results_df)
    failure = first_failure(results)

    report = Report(
        command="verify",
        parameters=parameters,
        values={"reproducer": failure.reproducer} if failure is not None else {},
        results=[
            IdentityOutcome(
                identity=f"{r.suite}/{r.identity}",
                parameters={"cell": r.cell, **r.parameters},
                status=r.status,
                lhs=r.lhs,
                rhs=r.rhs,
                reason=r.reason,
            )
            for r in results
        ],
        summary=summary,
    )

    def render() -> None:
        typer.echo(format_verification_report(results_df, summary))
        if failure is not None:
            typer.secho(
                f"\n✗ Falha em {failure.suite}/{failure.identity} [{failure.cell}]",
                fg=typer.colors.RED, bold=True,
            )
            if failure.reproducer is not None:
                typer.echo("Reprodutor mínimo (arquivo de código):")
                typer.echo(json.dumps(failure.reproducer))
        else:
            typer.secho("\n✓ Verificação concluída sem falhas!", fg=typer.colors.GREEN, bold=True)

    _emit(state, report, render)
    if summary["failed"]:
        raise typer.Exit(code=1)


@app.command()
def krawtchouk(
    ctx: typer.Context,
    j: int = typer.Option(..., "--j", help="Índice j (0 <= j <= n)"),
    i: int = typer.Option(..., "--i", help="Índice i (0 <= i <= n)"),
    m: int = typer.Option(..., "--m", help="Grau da extensão"),
    n: int = typer.Option(..., "--n", help="Comprimento"),
    q: int = typer.Option(2, "--q", help="Característica"),
):
    """
    Polinômio de Krawtchouk generalizado P_j(i; m, n).
    """
    state: CliState = ctx.obj
    _banner(state, "POLINÔMIO DE KRAWTCHOUK")

    with _handled_errors():
        value = krawtchouk_value(j, i, m, n, q)

    report = Report(
        command="krawtchouk",
        parameters={"j": j, "i": i, "m": m, "n": n, "q": q},
        values={"P": str(value)},
    )

    def render() -> None:
        typer.echo(f"\nP_{j}({i}; {m}, {n}) = {value}")

    _emit(state, report, render)


@app.command()
def mrd(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Comprimento"),
    k: int = typer.Option(..., "--k", help="Dimensão (para n > m, dimensão do código transposto)"),
    m: int = typer.Option(..., "--m", help="Grau da extensão"),
    q: int = typer.Option(2, "--q", help="Característica"),
):
    """
    Distribuição de pesos de posto de um código MRD linear.

    Para n <= m usa a fórmula da Classe I; para n > m, a Classe II obtida
    por transposição de um código (m, k) sobre GF(q^n).
    """
    state: CliState = ctx.obj
    _banner(state, "DISTRIBUIÇÃO MRD")

    with _handled_errors():
        if n <= m:
            distribution = mrd_distribution(q, m, n, k)
            d = n - k + 1
        else:
            distribution = class2_distribution(q, m, n, k)
            d = m - k + 1

    mrd_class = "I" if n <= m else "II"
    report = Report(
        command="mrd",
        parameters={"n": n, "k": k, "m": m, "q": q},
        distributions={"A": distribution.as_strings()},
        values={"class": mrd_class, "d_R": d, "size": str(distribution.total)},
    )

    def render() -> None:
        typer.echo(f"\nClasse {mrd_class}, d_R = {d}")
        _echo_distribution("A", distribution)

    _emit(state, report, render)


@app.command()
def moments(
    ctx: typer.Context,
    code_file: Path = typer.Option(..., "--code-file", "-c", help="Arquivo JSON do código"),
    nu: Optional[int] = typer.Option(None, "--nu", help="Valor de ν (padrão: todos de 0 a n)"),
    cap: Optional[int] = typer.Option(None, "--cap", help="Limite de palavras (padrão: RANKMAC_CAP)"),
):
    """
    Identidades de momentos do código e de seu dual, por ν.
    """
    state: CliState = ctx.obj
    _banner(state, "IDENTIDADES DE MOMENTOS")

    with _handled_errors():
        code = load_code_file(code_file)
        spec = code.field
        limit = _resolve_cap(cap)
        A = brute_distribution(code, cap=limit)
        B = brute_distribution(dual_code(code), cap=limit)
        d_dual = B.min_nonzero_weight()
        diameter_dual = B.max_nonzero_weight()
        checks = moment_suite(
            A.counts, B.counts, code.k, spec.q, spec.m,
            code.n + 1 if d_dual is None else d_dual,
            0 if diameter_dual is None else diameter_dual,
            nus=None if nu is None else [nu],
        )

    outcomes = [_moment_outcome(c) for c in checks]
    summary = {
        "total": len(outcomes),
        "held": sum(o.status == "held" for o in outcomes),
        "failed": sum(o.status == "failed" for o in outcomes),
        "skipped": sum(o.status == "skipped" for o in outcomes),
    }
    report = Report(
        command="moments",
        parameters={**_code_parameters(code), "nu": nu},
        distributions={"A": A.as_strings(), "B": B.as_strings()},
        results=outcomes,
        summary=summary,
    )

    def render() -> None:
        typer.echo(f"\nCódigo: {code}")
        _echo_distribution("A", A)
        _echo_distribution("B", B)
        typer.echo("")
        for outcome in outcomes:
            params = ", ".join(f"{key}={value}" for key, value in outcome.parameters.items())
            if outcome.status == "skipped":
                typer.echo(f"  - {outcome.identity} ({params}): pulada, {outcome.reason}")
            elif outcome.status == "held":
                typer.secho(f"  ✓ {outcome.identity} ({params}): {outcome.lhs}", fg=typer.colors.GREEN)
            else:
                typer.secho(
                    f"  ✗ {outcome.identity} ({params}): {outcome.lhs} != {outcome.rhs}",
                    fg=typer.colors.RED,
                )
        typer.echo(
            f"\nVálidas: {summary['held']}  Falhas: {summary['failed']}  Puladas: {summary['skipped']}"
        )

    _emit(state, report, render)
    if summary["failed"]:
        raise typer.Exit(code=1)


@app.command()
def info(ctx: typer.Context):
    """
    Exibe comandos disponíveis e configurações ativas.
    """
    state: CliState = ctx.obj
    settings = get_settings()
    active = {
        "cap": settings.CAP,
        "log_level": settings.LOG_LEVEL,
        "log_format": settings.LOG_FORMAT,
        "seed": settings.SEED,
        "verify_max_m": settings.VERIFY_MAX_M,
        "verify_max_n": settings.VERIFY_MAX_N,
        "verify_cap": settings.VERIFY_CAP,
        "verify_q": settings.VERIFY_Q,
        "verify_mrd_max_m": settings.VERIFY_MRD_MAX_M,
    }
    commands = {
        "weights": "Distribuição de pesos de posto de um código",
        "dual": "Distribuição do dual (brute, functional, krawtchouk, all)",
        "verify": "Suítes de identidades em uma grade de parâmetros",
        "krawtchouk": "Valor exato de P_j(i; m, n)",
        "mrd": "Distribuição analítica de um código MRD",
        "moments": "Identidades de momentos de um código",
        "info": "Exibe esta mensagem",
    }
    report = Report(
        command="info",
        parameters={"version": __version__},
        values={"settings": active, "commands": commands},
    )

    def render() -> None:
        typer.echo("=" * 60)
        typer.echo(f"RANKMAC {__version__}")
        typer.echo("=" * 60)
        typer.echo("\nConfigurações ativas:")
        for key, value in active.items():
            typer.echo(f"  {key}: {value}")
        typer.echo("\nComandos disponíveis:")
        for name, description in commands.items():
            typer.echo(f"  - {name}: {description}")

    _emit(state, report, render)


def main():
    """Entry point para o CLI."""
    app()


if __name__ == "__main__":
    main()
