"""
Ordens de Desejabilidade

Desejabilidade forte (≤_D), por varredura exaustiva de U ⊆ N∖{i,j}, e
desejabilidade fraca (≤_d), pela comparação dos vetores de cruciais por
tamanho de coalizão.
"""

import logging
from typing import Dict, Optional

import numpy as np

from ..core.errors import GameInputError
from ..core.models import Coalition, ComparisonResult, CrucialVector
from ..games.base import SimpleGame
from ..games.enumeration import all_masks, coalition_sizes

logger = logging.getLogger(__name__)


def _check_player(game: SimpleGame, player: int):
    if not 1 <= player <= game.players:
        raise GameInputError(f"Jogador {player} fora do intervalo 1..{game.players}")


def _check_pair(game: SimpleGame, i: int, j: int):
    _check_player(game, i)
    _check_player(game, j)
    if i == j:
        raise GameInputError(f"Comparação de um jogador consigo mesmo ({i})")


def crucial_vector(game: SimpleGame, player: int, max_players=None) -> CrucialVector:
    """
    Conta, por tamanho k = 1..N, as coalizões vencedoras em que o jogador é crucial

    Args:
        game: jogo simples
        player: jogador 1..N
        max_players: limite de enumeração

    Returns:
        CrucialVector com N contagens exatas
    """
    _check_player(game, player)
    table = game.win_table(max_players)
    masks = all_masks(game.players)
    bit = 1 << (player - 1)
    with_player = np.flatnonzero((masks & bit) != 0)
    crucial = with_player[table[with_player] & ~table[with_player ^ bit]]
    counts = np.bincount(coalition_sizes(game.players)[crucial], minlength=game.players + 1)
    return CrucialVector(player, tuple(int(c) for c in counts[1:]))


def crucial_vectors(game: SimpleGame, max_players=None) -> Dict[int, CrucialVector]:
    """Vetores de cruciais de todos os jogadores"""
    return {p: crucial_vector(game, p, max_players) for p in range(1, game.players + 1)}


def _outside(game: SimpleGame, i: int, j: int) -> np.ndarray:
    masks = all_masks(game.players)
    pair = (1 << (i - 1)) | (1 << (j - 1))
    return masks[(masks & pair) == 0]


def separating_coalition(game: SimpleGame, i: int, j: int, max_players=None) -> Optional[Coalition]:
    """
    Primeiro U ⊆ N∖{i,j} (ordem de máscara) com U∪{i} vencedora e U∪{j} perdedora

    None significa i ≤_D j.
    """
    _check_pair(game, i, j)
    table = game.win_table(max_players)
    rest = _outside(game, i, j)
    bad = table[rest | (1 << (i - 1))] & ~table[rest | (1 << (j - 1))]
    hits = np.flatnonzero(bad)
    if hits.size == 0:
        return None
    return Coalition(int(rest[hits[0]]), game.players)


def compare_desirability(game: SimpleGame, i: int, j: int, max_players=None) -> ComparisonResult:
    """
    Compara i e j na desejabilidade forte

    Returns:
        LESS se i <_D j, GREATER se j <_D i, EQUAL, ou INCOMPARABLE
    """
    _check_pair(game, i, j)
    table = game.win_table(max_players)
    rest = _outside(game, i, j)
    with_i = table[rest | (1 << (i - 1))]
    with_j = table[rest | (1 << (j - 1))]
    i_below_j = not np.any(with_i & ~with_j)
    j_below_i = not np.any(with_j & ~with_i)
    return ComparisonResult.from_relations(i_below_j, j_below_i)


def compare_vectors(left: CrucialVector, right: CrucialVector) -> ComparisonResult:
    """Comparação componente a componente de dois vetores de cruciais"""
    return ComparisonResult.from_relations(left.is_dominated_by(right), right.is_dominated_by(left))


def compare_weak_desirability(game: SimpleGame, i: int, j: int, max_players=None) -> ComparisonResult:
    """Compara i e j na desejabilidade fraca (INCOMPARABLE quando os vetores se cruzam)"""
    _check_pair(game, i, j)
    return compare_vectors(crucial_vector(game, i, max_players), crucial_vector(game, j, max_players))
