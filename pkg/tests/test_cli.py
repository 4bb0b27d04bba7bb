"""
Testes para a interface de linha de comando.
"""

import json
import logging

import pytest
from typer.testing import CliRunner

from src.cli import app
from src.codefile import save_code_file

runner = CliRunner()


@pytest.fixture(autouse=True)
def restore_package_logger():
    """A CLI reconfigura o logger do pacote; restaura depois de cada teste."""
    logger = logging.getLogger("src")
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield
    logger.handlers = handlers
    logger.setLevel(level)
    logger.propagate = propagate


@pytest.fixture
def repetition_file(tmp_path, repetition_gf4):
    return save_code_file(repetition_gf4, tmp_path / "repetition.json")


@pytest.fixture
def gabidulin_file(tmp_path, gabidulin_gf8):
    return save_code_file(gabidulin_gf8, tmp_path / "gabidulin.json")


@pytest.fixture
def zero_file(tmp_path, zero_gf4):
    return save_code_file(zero_gf4, tmp_path / "zero.json")


def run_json(*args, **kwargs):
    result = runner.invoke(app, ["--json", *args], **kwargs)
    return result, (json.loads(result.stdout) if result.exit_code in (0, 1) else None)


class TestWeights:
    """Testes para o comando weights."""

    def test_text_output(self, repetition_file):
        """Distribuição impressa como A = (...)."""
        result = runner.invoke(app, ["weights", "-c", str(repetition_file)])
        assert result.exit_code == 0
        assert "A = (1, 3, 0)" in result.stdout

    def test_json_output(self, repetition_file):
        """Relatório JSON com contagens em texto."""
        result, report = run_json("weights", "-c", str(repetition_file))
        assert result.exit_code == 0
        assert report["command"] == "weights"
        assert report["distributions"]["A"] == ["1", "3", "0"]
        assert report["values"] == {"d_R": 1, "diameter": 1, "mrd": False}
        assert report["parameters"]["k"] == 1
        assert "elapsed_seconds" not in report

    def test_mrd_code(self, gabidulin_file):
        """Gabidulin é MRD."""
        _, report = run_json("weights", "-c", str(gabidulin_file))
        assert report["distributions"]["A"] == ["1", "0", "49", "14"]
        assert report["values"]["mrd"] is True
        assert report["values"]["d_R"] == 2

    def test_zero_code(self, zero_file):
        """Distância indefinida para o código nulo."""
        _, report = run_json("weights", "-c", str(zero_file))
        assert report["values"]["d_R"] is None
        assert report["values"]["diameter"] is None

    def test_missing_file(self, tmp_path):
        """Arquivo inexistente encerra com código 2."""
        result = runner.invoke(app, ["weights", "-c", str(tmp_path / "nada.json")])
        assert result.exit_code == 2

    def test_cap_option(self, repetition_file):
        """Limite de enumeração excedido encerra com código 2."""
        result = runner.invoke(app, ["weights", "-c", str(repetition_file), "--cap", "3"])
        assert result.exit_code == 2

    def test_cap_from_environment(self, repetition_file):
        """RANKMAC_CAP é respeitado."""
        result = runner.invoke(app, ["weights", "-c", str(repetition_file)], env={"RANKMAC_CAP": "3"})
        assert result.exit_code == 2

    def test_timing(self, repetition_file):
        """--timing inclui o tempo no relatório."""
        result, report = run_json("--timing", "weights", "-c", str(repetition_file))
        assert result.exit_code == 0
        assert report["elapsed_seconds"] >= 0

    def test_deterministic(self, gabidulin_file):
        """Duas execuções produzem o mesmo JSON."""
        first = runner.invoke(app, ["--json", "weights", "-c", str(gabidulin_file)])
        second = runner.invoke(app, ["--json", "weights", "-c", str(gabidulin_file)])
        assert first.stdout == second.stdout


class TestDual:
    """Testes para o comando dual."""

    def test_functional(self, gabidulin_file):
        """Dual de Gabidulin (3, 2) pela forma funcional."""
        result, report = run_json("dual", "-c", str(gabidulin_file))
        assert result.exit_code == 0
        assert report["distributions"]["B_functional"] == ["1", "0", "0", "7"]

    def test_all_methods_agree(self, repetition_file):
        """Os três métodos coincidem."""
        result, report = run_json("dual", "-c", str(repetition_file), "--method", "all")
        assert result.exit_code == 0
        for name in ("brute", "functional", "krawtchouk"):
            assert report["distributions"][f"B_{name}"] == ["1", "3", "0"]
        assert report["results"][0]["identity"] == "method_agreement"
        assert report["results"][0]["status"] == "held"

    def test_text_output(self, repetition_file):
        """Saída em texto."""
        result = runner.invoke(app, ["dual", "-c", str(repetition_file), "-m", "krawtchouk"])
        assert result.exit_code == 0
        assert "B (krawtchouk) = (1, 3, 0)" in result.stdout

    def test_invalid_method(self, repetition_file):
        """Método desconhecido encerra com código 2."""
        result = runner.invoke(app, ["dual", "-c", str(repetition_file), "--method", "fft"])
        assert result.exit_code == 2


class TestKrawtchouk:
    """Testes para o comando krawtchouk."""

    def test_values(self):
        """P_1(0; 2, 2) = 9 e P_2(1; 2, 2) = -2."""
        _, report = run_json("krawtchouk", "--j", "1", "--i", "0", "--m", "2", "--n", "2")
        assert report["values"] == {"P": "9"}
        _, report = run_json("krawtchouk", "--j", "2", "--i", "1", "--m", "2", "--n", "2")
        assert report["values"] == {"P": "-2"}

    def test_text_output(self):
        """Valor impresso."""
        result = runner.invoke(app, ["krawtchouk", "--j", "1", "--i", "0", "--m", "2", "--n", "2"])
        assert "P_1(0; 2, 2) = 9" in result.stdout

    def test_out_of_range(self):
        """j > n encerra com código 2."""
        result = runner.invoke(app, ["krawtchouk", "--j", "3", "--i", "0", "--m", "2", "--n", "2"])
        assert result.exit_code == 2


class TestMrd:
    """Testes para o comando mrd."""

    def test_class_one(self):
        """n <= m."""
        result, report = run_json("mrd", "--n", "3", "--k", "1", "--m", "3")
        assert result.exit_code == 0
        assert report["distributions"]["A"] == ["1", "0", "0", "7"]
        assert report["values"] == {"class": "I", "d_R": 3, "size": "8"}

    def test_class_two(self):
        """n > m usa k como dimensão do código transposto."""
        _, report = run_json("mrd", "--n", "3", "--k", "1", "--m", "2")
        assert report["distributions"]["A"] == ["1", "0", "7", "0"]
        assert report["values"] == {"class": "II", "d_R": 2, "size": "8"}

    def test_invalid(self):
        """k = 0 encerra com código 2."""
        result = runner.invoke(app, ["mrd", "--n", "3", "--k", "0", "--m", "3"])
        assert result.exit_code == 2

    def test_deterministic(self):
        """Saída idêntica entre execuções."""
        args = ["--json", "mrd", "--n", "3", "--k", "2", "--m", "3", "--q", "3"]
        assert runner.invoke(app, args).stdout == runner.invoke(app, args).stdout


class TestMoments:
    """Testes para o comando moments."""

    def test_all_nu(self, gabidulin_file):
        """Nenhuma identidade falha."""
        result, report = run_json("moments", "-c", str(gabidulin_file))
        assert result.exit_code == 0
        assert report["summary"]["failed"] == 0
        assert report["summary"]["held"] > 0
        assert report["distributions"]["B"] == ["1", "0", "0", "7"]

    def test_single_nu(self, repetition_file):
        """--nu restringe as identidades."""
        _, report = run_json("moments", "-c", str(repetition_file), "--nu", "1")
        assert {r["parameters"]["nu"] for r in report["results"]} == {1}

    def test_skips_reported(self, repetition_file):
        """ν >= d' aparece como pulada, sem falhar."""
        result, report = run_json("moments", "-c", str(repetition_file))
        assert result.exit_code == 0
        assert report["summary"]["skipped"] > 0

    def test_nu_out_of_range(self, repetition_file):
        """ν > n encerra com código 2."""
        result = runner.invoke(app, ["moments", "-c", str(repetition_file), "--nu", "5"])
        assert result.exit_code == 2


class TestVerify:
    """Testes para o comando verify."""

    def test_small_grid(self):
        """Grade pequena sem falhas."""
        result, report = run_json(
            "verify", "--q", "2", "--max-m", "2", "--max-n", "2", "--trials", "5",
            "-s", "gaussian", "-s", "krawtchouk", "-s", "codes", "-s", "mrd",
        )
        assert result.exit_code == 0
        assert report["summary"]["failed"] == 0
        assert report["summary"]["held"] > 0
        assert report["values"] == {}

    def test_unsupported_field_skipped(self):
        """Hadamard com q = 3 é pulada, não falha."""
        result, report = run_json("verify", "--q", "3", "-s", "hadamard")
        assert result.exit_code == 0
        assert report["summary"] == {"total": 1, "held": 0, "failed": 0, "skipped": 1}

    def test_repeated_q(self):
        """--q repetido percorre os dois corpos."""
        result, report = run_json(
            "verify", "--q", "2", "--q", "3", "--max-m", "2", "--max-n", "2", "-s", "vector_duals",
        )
        assert result.exit_code == 0
        assert report["parameters"]["q"] == [2, 3]
        assert report["summary"]["failed"] == 0
        assert report["summary"]["skipped"] == 1
        assert report["summary"]["held"] > 0

    def test_default_fields(self):
        """Sem --q, usa RANKMAC_VERIFY_Q = [2, 3]."""
        result, report = run_json("verify", "-s", "hadamard", "--max-m", "1", "--max-n", "1")
        assert result.exit_code == 0
        assert report["parameters"]["q"] == [2, 3]
        assert report["parameters"]["mrd_max_m"] == 4

    def test_invalid_mrd_range(self):
        """--mrd-max-m menor que 1 encerra com código 2."""
        result = runner.invoke(app, ["verify", "--mrd-max-m", "0", "-s", "mrd"])
        assert result.exit_code == 2

    def test_unknown_suite(self):
        """Suíte desconhecida encerra com código 2."""
        result = runner.invoke(app, ["verify", "-s", "nada"])
        assert result.exit_code == 2

    def test_text_report(self):
        """Relatório em texto."""
        result = runner.invoke(app, ["verify", "-s", "auxiliary"])
        assert result.exit_code == 0
        assert "RELATÓRIO DE VERIFICAÇÃO DAS IDENTIDADES" in result.stdout
        assert "Todas as identidades avaliadas valem" in result.stdout


class TestInfo:
    """Testes para o comando info e opções globais."""

    def test_info(self):
        """Lista comandos e configurações."""
        result = runner.invoke(app, ["info"])
        assert result.exit_code == 0
        assert "weights" in result.stdout
        assert "cap" in result.stdout

    def test_info_json(self):
        """Configurações no relatório JSON."""
        _, report = run_json("info", env={"RANKMAC_CAP": "1000"})
        assert report["values"]["settings"]["cap"] == 1000
        assert "verify" in report["values"]["commands"]

    def test_invalid_log_format(self):
        """Formato de log inválido encerra com código 2."""
        result = runner.invoke(app, ["--log-format", "xml", "info"])
        assert result.exit_code == 2
