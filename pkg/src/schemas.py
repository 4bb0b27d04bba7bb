"""
Schemas Pydantic para arquivos de código e relatórios.

Validação de dados de entrada/saída da CLI.
"""

from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# ========== Arquivo de código ==========

Element = Union[int, List[int]]


class CodeFileModel(BaseModel):
    """
    Documento JSON que descreve um código linear sobre GF(q^m).

    Cada entrada da geradora é um vetor de m coordenadas em GF(q)
    (little-endian) ou o inteiro Σ a_i q^i.
    """
    model_config = ConfigDict(extra="forbid")

    q: int = Field(..., ge=2, description="Característica (primo)")
    m: int = Field(..., ge=1, description="Grau da extensão")
    modulus: List[int] = Field(..., description="m+1 coeficientes do módulo, little-endian")
    n: int = Field(..., ge=0, description="Comprimento do código")
    generator: List[List[Element]] = Field(default_factory=list, description="k linhas de n elementos")

    @field_validator("modulus")
    @classmethod
    def validate_modulus(cls, v: List[int]) -> List[int]:
        """Valida se o módulo é mônico."""
        if not v or v[-1] != 1:
            raise ValueError("Módulo deve ser mônico (último coeficiente igual a 1)")
        return v

    @model_validator(mode="after")
    def validate_shapes(self) -> "CodeFileModel":
        """Valida dimensões do módulo e da geradora."""
        if len(self.modulus) != self.m + 1:
            raise ValueError(f"Módulo deve ter {self.m + 1} coeficientes, recebidos: {len(self.modulus)}")
        if len(self.generator) > self.n:
            raise ValueError(f"Geradora com {len(self.generator)} linhas excede n={self.n}")
        for row_index, row in enumerate(self.generator):
            if len(row) != self.n:
                raise ValueError(f"Linha {row_index} com {len(row)} entradas, esperadas {self.n}")
            for entry in row:
                if isinstance(entry, list) and len(entry) != self.m:
                    raise ValueError(f"Elemento {entry} deveria ter {self.m} coordenadas")
        return self


# ========== Relatório ==========

class IdentityOutcome(BaseModel):
    """Resultado de uma identidade verificada."""
    identity: str
    parameters: Dict[str, Union[int, str]] = Field(default_factory=dict)
    status: Literal["held", "failed", "skipped"]
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    reason: Optional[str] = None


class Report(BaseModel):
    """
    Relatório de uma execução da CLI.

    Contagens são strings decimais para não limitar a precisão de quem lê.
    """
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    distributions: Dict[str, List[str]] = Field(default_factory=dict)
    values: Dict[str, Any] = Field(default_factory=dict)
    results: List[IdentityOutcome] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)
    elapsed_seconds: Optional[float] = Field(None, ge=0)

    def to_json(self) -> str:
        """JSON determinístico; o tempo só aparece quando medido."""
        exclude = {"elapsed_seconds"} if self.elapsed_seconds is None else None
        return self.model_dump_json(indent=2, exclude=exclude)
