"""
Testes para configuração e logging.
"""

import io
import json
import logging

import pytest
from pydantic import ValidationError

from src.config import Settings, get_settings
from src.logging_config import configure_logging


@pytest.fixture
def isolated_env(monkeypatch, tmp_path):
    """Ambiente sem variáveis RANKMAC_ nem arquivo .env."""
    for name in ("RANKMAC_CAP", "RANKMAC_LOG_LEVEL", "RANKMAC_LOG_FORMAT", "RANKMAC_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    return monkeypatch


@pytest.fixture
def package_logger():
    """Restaura o logger do pacote depois do teste."""
    logger = logging.getLogger("src")
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield logger
    logger.handlers = handlers
    logger.setLevel(level)
    logger.propagate = propagate


class TestSettings:
    """Testes para as configurações."""

    def test_defaults(self, isolated_env):
        """Valores padrão."""
        settings = get_settings()
        assert settings.cap == 2**24
        assert settings.LOG_LEVEL == "WARNING"
        assert settings.LOG_FORMAT == "text"
        assert settings.SEED == 42
        assert settings.VERIFY_Q == [2, 3]
        assert settings.VERIFY_MRD_MAX_M == 4

    def test_environment_override(self, isolated_env):
        """RANKMAC_CAP sobrescreve o limite."""
        isolated_env.setenv("RANKMAC_CAP", "1024")
        assert get_settings().cap == 1024

    def test_verify_fields_from_environment(self, isolated_env):
        """RANKMAC_VERIFY_Q aceita uma lista JSON."""
        isolated_env.setenv("RANKMAC_VERIFY_Q", "[3]")
        assert get_settings().VERIFY_Q == [3]

    def test_empty_verify_fields(self, isolated_env):
        """Lista vazia de q é inválida."""
        isolated_env.setenv("RANKMAC_VERIFY_Q", "[]")
        with pytest.raises(ValidationError):
            Settings()

    def test_cached(self, isolated_env):
        """get_settings devolve sempre a mesma instância."""
        assert get_settings() is get_settings()

    def test_invalid_format(self, isolated_env):
        """Formato de log fora de text/json."""
        isolated_env.setenv("RANKMAC_LOG_FORMAT", "xml")
        with pytest.raises(ValidationError):
            Settings()

    def test_invalid_cap(self, isolated_env):
        """Limite deve ser positivo."""
        isolated_env.setenv("RANKMAC_CAP", "0")
        with pytest.raises(ValidationError):
            Settings()


class TestLogging:
    """Testes para a configuração de logging."""

    def test_json_output(self, package_logger):
        """Formato JSON com nível e mensagem."""
        stream = io.StringIO()
        configure_logging("INFO", "json", stream=stream)
        logging.getLogger("src.gfcodes").info("enumerando")
        record = json.loads(stream.getvalue().strip().splitlines()[-1])
        assert record["message"] == "enumerando"
        assert record["levelname"] == "INFO"
        assert record["name"] == "src.gfcodes"

    def test_text_output(self, package_logger):
        """Formato texto padrão."""
        stream = io.StringIO()
        configure_logging("WARNING", "text", stream=stream)
        logging.getLogger("src.cli").warning("atenção")
        assert "[WARNING] src.cli: atenção" in stream.getvalue()

    def test_level_filters(self, package_logger):
        """Mensagens abaixo do nível são descartadas."""
        stream = io.StringIO()
        configure_logging("WARNING", "text", stream=stream)
        logging.getLogger("src.mrd").debug("detalhe")
        assert stream.getvalue() == ""

    def test_single_handler(self, package_logger):
        """Reconfigurar não duplica o handler."""
        configure_logging("INFO", "text", stream=io.StringIO())
        logger = configure_logging("DEBUG", "json", stream=io.StringIO())
        assert len([h for h in logger.handlers if h.get_name() == "rankmac"]) == 1
        assert logger.level == logging.DEBUG

    def test_invalid_format(self, package_logger):
        """Formato desconhecido."""
        with pytest.raises(ValueError):
            configure_logging("INFO", "xml")

    def test_invalid_level(self, package_logger):
        """Nível desconhecido."""
        with pytest.raises(ValueError):
            configure_logging("VERBOSE", "text")
