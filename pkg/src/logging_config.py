"""
Configuração de logging.

Os módulos da biblioteca apenas obtêm loggers com logging.getLogger(__name__).
A CLI instala um único handler em stderr, em texto ou em JSON, de modo que
stdout fique reservado aos relatórios.
"""

import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

TEXT_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
JSON_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"

_HANDLER_NAME = "rankmac"


def configure_logging(level: str = "WARNING", fmt: str = "text", stream: Optional[object] = None) -> logging.Logger:
    """
    Configura o logger raiz do pacote.

    Args:
        level: DEBUG, INFO, WARNING ou ERROR
        fmt: 'text' ou 'json'
        stream: Destino (padrão: sys.stderr)

    Returns:
        Logger do pacote

    Raises:
        ValueError: Se o formato ou o nível forem inválidos
    """
    if fmt not in ("text", "json"):
        raise ValueError(f"Formato de log inválido: '{fmt}'. Use 'text' ou 'json'")
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        raise ValueError(f"Nível de log inválido: '{level}'")

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.set_name(_HANDLER_NAME)
    if fmt == "json":
        handler.setFormatter(jsonlogger.JsonFormatter(JSON_FIELDS))
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))

    logger = logging.getLogger("src")
    for existing in list(logger.handlers):
        if existing.get_name() == _HANDLER_NAME:
            logger.removeHandler(existing)
    logger.addHandler(handler)
    logger.setLevel(numeric_level)
    logger.propagate = False
    return logger
