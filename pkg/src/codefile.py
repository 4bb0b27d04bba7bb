"""
Leitura e escrita de arquivos de código.

Um arquivo de código é um único documento JSON:

    {"q": 2, "m": 2, "modulus": [1, 1, 1], "n": 2,
     "generator": [[[1, 0], [1, 0]]]}

A validação estrutural fica a cargo de schemas.CodeFileModel; a
validação algébrica (módulo irredutível, linhas independentes) é feita
ao construir FieldSpec e LinearCode.
"""

import json
import logging
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from .gfcodes import FieldSpec, LinearCode, element_coordinates, element_from_coordinates
from .schemas import CodeFileModel

logger = logging.getLogger(__name__)


class CodeFileError(ValueError):
    """Arquivo de código ilegível ou inválido."""


def _element(entry: Union[int, List[int]], spec: FieldSpec) -> int:
    if isinstance(entry, list):
        return element_from_coordinates(entry, spec)
    if not 0 <= entry < spec.order:
        raise ValueError(f"Elemento {entry} fora de {spec}")
    return entry


def model_to_code(document: CodeFileModel) -> LinearCode:
    """
    Constrói o código descrito por um documento já validado.

    Raises:
        CodeFileError: Se o módulo ou a geradora forem inválidos
    """
    try:
        spec = FieldSpec(document.q, document.m, tuple(document.modulus))
        rows = tuple(tuple(_element(e, spec) for e in row) for row in document.generator)
        return LinearCode(spec, document.n, rows)
    except ValueError as e:
        raise CodeFileError(str(e)) from e


def load_code_file(path: Union[str, Path]) -> LinearCode:
    """
    Lê e valida um arquivo de código.

    Args:
        path: Caminho para o JSON

    Returns:
        LinearCode correspondente

    Raises:
        CodeFileError: Se o arquivo não existir, não for JSON válido ou
            descrever um código inválido
    """
    file_path = Path(path)
    if not file_path.exists():
        raise CodeFileError(f"Arquivo não encontrado: {path}")

    try:
        document = CodeFileModel.model_validate_json(file_path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise CodeFileError(f"Arquivo de código inválido ({path}):\n{e}") from e

    code = model_to_code(document)
    logger.info("Código carregado de %s: %s", path, code)
    return code


def code_to_model(code: LinearCode) -> CodeFileModel:
    """Documento com as entradas da geradora em coordenadas."""
    spec = code.field
    return CodeFileModel(
        q=spec.q,
        m=spec.m,
        modulus=list(spec.modulus),
        n=code.n,
        generator=[[list(element_coordinates(e, spec)) for e in row] for row in code.generator],
    )


def save_code_file(code: LinearCode, path: Union[str, Path]) -> Path:
    """
    Salva um código no formato de arquivo de código.

    Returns:
        Caminho do arquivo escrito
    """
    output_file = Path(path)
    output_file.parent.mkdir(parents=True, exist_ok=True)
    output_file.write_text(
        json.dumps(code_to_model(code).model_dump(), indent=2) + "\n", encoding="utf-8"
    )
    logger.info("Código salvo em %s", output_file)
    return output_file
