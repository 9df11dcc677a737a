"""
Configurações Centralizadas

Pattern: Singleton para configurações globais
"""

import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    """Lê inteiro de variável de ambiente (valor inválido mantém o default)"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("%s=%r não é inteiro; usando %d", name, raw, default)
        return default


class Config:
    """Configurações globais do QuorumLab"""

    # Enumeração exaustiva (2^N coalizões)
    MAX_PLAYERS = _env_int("QUORUMLAB_MAX_PLAYERS", 26)
    MAX_PLAYERS_CEILING = 40  # máscaras em int64 e memória de desktop

    # Refutação simétrica: limite de atribuições m^|perfis maximais perdedores|
    LP_BUDGET = _env_int("QUORUMLAB_LP_BUDGET", 65536)

    # Saída
    DIGITS = _env_int("QUORUMLAB_DIGITS", 4)
    LOG_LEVEL = os.getenv("QUORUMLAB_LOG_LEVEL", "WARNING").upper()

    # Diretórios
    BASE_DIR = Path(__file__).parent.parent.parent
    OUTPUT_DIR = Path(os.getenv("QUORUMLAB_OUTPUT_DIR", str(BASE_DIR / "dados" / "relatorios")))

    @classmethod
    def validate(cls):
        """Valida configurações e cria diretório de saída"""
        if not 1 <= cls.MAX_PLAYERS <= cls.MAX_PLAYERS_CEILING:
            raise ValueError(
                f"QUORUMLAB_MAX_PLAYERS={cls.MAX_PLAYERS} fora de 1..{cls.MAX_PLAYERS_CEILING}. "
                f"Use: export QUORUMLAB_MAX_PLAYERS=26"
            )
        if cls.LP_BUDGET < 1:
            raise ValueError("QUORUMLAB_LP_BUDGET deve ser positivo. Use: export QUORUMLAB_LP_BUDGET=65536")
        if not 1 <= cls.DIGITS <= 30:
            raise ValueError("QUORUMLAB_DIGITS deve estar em 1..30. Use: export QUORUMLAB_DIGITS=4")
        if cls.LOG_LEVEL not in logging._nameToLevel:
            raise ValueError(f"QUORUMLAB_LOG_LEVEL inválido: {cls.LOG_LEVEL}")

        cls.OUTPUT_DIR.mkdir(parents=True, exist_ok=True)

    @classmethod
    def override(cls, max_players=None, digits=None, lp_budget=None):
        """Aplica sobrescritas vindas da linha de comando"""
        if max_players is not None:
            cls.MAX_PLAYERS = max_players
        if digits is not None:
            cls.DIGITS = digits
        if lp_budget is not None:
            cls.LP_BUDGET = lp_budget
