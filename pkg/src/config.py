"""
Configuração centralizada do rankmac.

Valores padrão podem ser sobrescritos por variáveis de ambiente com o
prefixo RANKMAC_ (por exemplo RANKMAC_CAP=65536) ou por um arquivo .env.
Opções de linha de comando têm precedência sobre ambas.
"""

from functools import lru_cache
from typing import List, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configurações da aplicação."""

    model_config = SettingsConfigDict(
        env_prefix="RANKMAC_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Enumeração
    CAP: int = Field(2**24, gt=0, description="Limite de palavras enumeradas por força bruta")

    # Logging
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    LOG_FORMAT: Literal["text", "json"] = "text"

    # Suítes de verificação
    SEED: int = 42
    VERIFY_MAX_M: int = Field(3, ge=1)
    VERIFY_MAX_N: int = Field(4, ge=1)
    VERIFY_CAP: int = Field(2**20, gt=0)
    VERIFY_Q: List[int] = Field(default_factory=lambda: [2, 3], min_length=1)
    VERIFY_MRD_MAX_M: int = Field(4, ge=1, description="Alcance mínimo de m nos censos MRD")

    @property
    def cap(self) -> int:
        """Limite de enumeração ativo."""
        return self.CAP


@lru_cache()
def get_settings() -> Settings:
    """
    Retorna instância singleton das configurações.

    @lru_cache garante que Settings() seja chamado apenas uma vez.
    Testes que alteram o ambiente devem chamar get_settings.cache_clear().
    """
    return Settings()
