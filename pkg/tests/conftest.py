"""
Configuração do pytest.
"""

import sys
from pathlib import Path

import pytest

# Adiciona o diretório raiz ao path para imports
root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))

from src.config import get_settings  # noqa: E402
from src.gfcodes import (  # noqa: E402
    FieldSpec,
    default_gabidulin,
    repetition_code,
    whole_space,
    zero_code,
)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Descarta configurações em cache entre testes."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def gf4():
    return FieldSpec.default(2, 2)


@pytest.fixture
def gf8():
    return FieldSpec.default(2, 3)


@pytest.fixture
def gf9():
    return FieldSpec.default(3, 2)


@pytest.fixture
def repetition_gf4(gf4):
    """Código de repetição (2, 1) sobre GF(4): A = (1, 3, 0)."""
    return repetition_code(gf4, 2)


@pytest.fixture
def whole_gf4(gf4):
    """GF(4)^2: A = (1, 9, 6)."""
    return whole_space(gf4, 2)


@pytest.fixture
def zero_gf4(gf4):
    return zero_code(gf4, 2)


@pytest.fixture
def gabidulin_gf4(gf4):
    """Gabidulin (2, 1) sobre GF(4): A = (1, 0, 3)."""
    return default_gabidulin(gf4, 2, 1)


@pytest.fixture
def gabidulin_gf8(gf8):
    """Gabidulin (3, 2) sobre GF(8): A = (1, 0, 49, 14)."""
    return default_gabidulin(gf8, 3, 2)
