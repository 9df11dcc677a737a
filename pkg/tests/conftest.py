"""Fixtures compartilhadas"""

import sys
from pathlib import Path

import pytest

# Adiciona diretório raiz ao path para imports absolutos
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.core.config import Config  # noqa: E402
from src.core.models import AmalgamatedMatrix  # noqa: E402
from src.games.weighted import WeightedGame  # noqa: E402
from src.legco.game import legco_game  # noqa: E402

_CONFIG_KEYS = ("MAX_PLAYERS", "DIGITS", "LP_BUDGET", "LOG_LEVEL", "OUTPUT_DIR")


@pytest.fixture(autouse=True)
def isolated_config(tmp_path):
    """Sobrescritas da CLI não vazam entre testes; saída padrão em diretório temporário"""
    saved = {key: getattr(Config, key) for key in _CONFIG_KEYS}
    Config.OUTPUT_DIR = tmp_path / "relatorios"
    yield
    for key, value in saved.items():
        setattr(Config, key, value)


def weighted(q, weights, name=None):
    return WeightedGame(AmalgamatedMatrix.from_rows([(q, weights)]), name=name)


@pytest.fixture
def dummy_pair():
    """[2;1,1,0]"""
    return weighted(2, [1, 1, 0], name="dummy_pair")


@pytest.fixture
def legco():
    """Fábrica memoizada de Legco(n, status_quo)"""
    cache = {}

    def build(n, scenario="status_quo"):
        key = (n, scenario)
        if key not in cache:
            cache[key] = legco_game(n, scenario)
        return cache[key]

    return build
