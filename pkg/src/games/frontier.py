"""
Fronteiras e Igualdade de Jogos

Vencedoras minimais, perdedoras maximais e comparação exaustiva de dois
jogos sobre as 2^N coalizões.
"""

import logging
from typing import List

import numpy as np

from ..core.errors import GameInputError
from ..core.models import Coalition, GameComparison
from .base import SimpleGame
from .enumeration import all_masks

logger = logging.getLogger(__name__)


def evaluate(game: SimpleGame, coalition: Coalition) -> bool:
    """v(S); largura diferente da do jogo gera GameInputError"""
    return game.evaluate(coalition)


def minimal_winning(game: SimpleGame, max_players=None) -> List[Coalition]:
    """
    Coalizões vencedoras cujos subconjuntos próprios perdem

    Args:
        game: jogo simples monótono
        max_players: limite de enumeração

    Returns:
        Lista ordenada por máscara
    """
    table = game.win_table(max_players)
    masks = all_masks(game.players)
    frontier = table.copy()
    for k in range(game.players):
        bit = 1 << k
        has = (masks & bit) != 0
        # S - k ainda vence -> S não é minimal
        frontier &= ~(has & table[masks ^ bit])
    return [Coalition(int(m), game.players) for m in np.flatnonzero(frontier)]


def maximal_losing(game: SimpleGame, max_players=None) -> List[Coalition]:
    """Coalizões perdedoras cujos superconjuntos próprios vencem (dual de minimal_winning)"""
    table = game.win_table(max_players)
    masks = all_masks(game.players)
    frontier = ~table
    for k in range(game.players):
        bit = 1 << k
        lacks = (masks & bit) == 0
        frontier &= ~(lacks & ~table[masks ^ bit])
    return [Coalition(int(m), game.players) for m in np.flatnonzero(frontier)]


def games_equal(first: SimpleGame, second: SimpleGame, max_players=None) -> GameComparison:
    """
    Compara dois jogos em todas as 2^N coalizões

    Args:
        first, second: jogos com o mesmo número de jogadores

    Returns:
        GameComparison com a primeira coalizão (ordem de máscara) em desacordo
    """
    if first.players != second.players:
        raise GameInputError(
            f"Jogos com larguras diferentes: {first.players} vs {second.players}"
        )
    left = first.win_table(max_players)
    right = second.win_table(max_players)
    differences = np.flatnonzero(left != right)
    if differences.size == 0:
        return GameComparison(equal=True)

    witness = int(differences[0])
    logger.debug("%s != %s (%d coalizões em desacordo)", first, second, differences.size)
    return GameComparison(
        equal=False,
        witness=Coalition(witness, first.players),
        left_wins=bool(left[witness]),
        right_wins=bool(right[witness]),
    )
