"""
Exceções do Domínio

Hierarquia pequena: entrada inválida, capacidade excedida e
realização que não confere com o jogo.
"""

from typing import Optional


class QuorumLabError(Exception):
    """Erro base do QuorumLab"""


class GameInputError(QuorumLabError, ValueError):
    """Entrada inválida (largura de coalizão, jogador, jogo não monótono, n = 0)"""


class CapacityError(QuorumLabError):
    """Enumeração ou orçamento de LP acima do limite configurado"""

    def __init__(self, message: str, required: Optional[int] = None, limit: Optional[int] = None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class RealizationError(QuorumLabError):
    """A matriz candidata não realiza o jogo"""

    def __init__(self, message: str, comparison=None):
        super().__init__(message)
        self.comparison = comparison
