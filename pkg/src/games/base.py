"""
Base Game - Interface para Jogos Simples Monótonos

Pattern: Strategy - cada representação (explícita, ponderada, regra por
perfil) implementa a mesma avaliação v: Coalizão -> {0, 1}
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

import numpy as np

from ..core.errors import GameInputError
from ..core.models import Coalition
from .enumeration import all_masks, ensure_enumerable

logger = logging.getLogger(__name__)


class SimpleGame(ABC):
    """
    Interface base para jogos simples

    Implementações concretas devem definir evaluate_mask() e to_document().
    A tabela de vitórias (2^N booleanos) é memoizada na primeira enumeração.
    """

    def __init__(self, players: int, name: str):
        if players < 1:
            raise GameInputError(f"Jogo precisa de ao menos 1 jogador (recebido {players})")
        self.players = players
        self.name = name
        self._table: Optional[np.ndarray] = None

    @abstractmethod
    def evaluate_mask(self, mask: int) -> bool:
        """
        Avalia a coalizão codificada em mask

        Args:
            mask: máscara de bits (bit k-1 = jogador k)

        Returns:
            True se a coalizão é vencedora
        """
        pass

    @abstractmethod
    def to_document(self) -> Dict[str, Any]:
        """Documento JSON canônico do jogo"""
        pass

    def evaluate(self, coalition: Coalition) -> bool:
        """v(S) com verificação de largura"""
        if coalition.width != self.players:
            raise GameInputError(
                f"Coalizão de largura {coalition.width} em jogo de {self.players} jogadores"
            )
        return self.evaluate_mask(coalition.mask)

    def wins(self, *players: int) -> bool:
        """Atalho: v({players})"""
        return self.evaluate(Coalition.of(players, self.players))

    def win_table(self, max_players=None) -> np.ndarray:
        """
        Tabela booleana de vitórias indexada por máscara

        Args:
            max_players: limite de enumeração (None = Config.MAX_PLAYERS)

        Returns:
            Array somente leitura de tamanho 2^N
        """
        ensure_enumerable(self.players, max_players)
        if self._table is None:
            table = self._build_table(all_masks(self.players))
            table.setflags(write=False)
            self._table = table
            logger.debug("%s: %d coalizões vencedoras em 2^%d", self.name, int(table.sum()), self.players)
        return self._table

    def _build_table(self, masks: np.ndarray) -> np.ndarray:
        # avaliação escalar; subclasses vetorizam quando possível
        return np.fromiter((self.evaluate_mask(int(m)) for m in masks), dtype=bool, count=masks.size)

    def __str__(self) -> str:
        return f"{type(self).__name__}({self.name}, N={self.players})"

    def __repr__(self) -> str:
        return self.__str__()


class IntersectionGame(SimpleGame):
    """Interseção de jogos de mesma largura: vence quem vence em todos os fatores"""

    def __init__(self, factors, name: str = "intersection"):
        factors = tuple(factors)
        if not factors:
            raise GameInputError("Interseção precisa de ao menos um fator")
        widths = {factor.players for factor in factors}
        if len(widths) != 1:
            raise GameInputError(f"Fatores com larguras diferentes: {sorted(widths)}")
        super().__init__(widths.pop(), name)
        self.factors = factors

    def evaluate_mask(self, mask: int) -> bool:
        return all(factor.evaluate_mask(mask) for factor in self.factors)

    def _build_table(self, masks: np.ndarray) -> np.ndarray:
        table = np.ones(masks.size, dtype=bool)
        for factor in self.factors:
            table &= factor.win_table(max_players=self.players)
        return table

    def to_document(self) -> Dict[str, Any]:
        from .explicit import ExplicitGame

        return ExplicitGame.from_table(self.players, self.win_table(), self.name).to_document()
