"""
Enumeração Vetorizada de Coalizões

Todas as 2^N máscaras em um array numpy; contagem de bits por tabela de
consulta de 16 bits.
"""

import logging
from functools import lru_cache

import numpy as np

from ..core.config import Config
from ..core.errors import CapacityError

logger = logging.getLogger(__name__)

_POPCOUNT_16 = np.array([bin(v).count("1") for v in range(1 << 16)], dtype=np.int64)


def ensure_enumerable(players: int, max_players=None):
    """
    Garante que 2^players coalizões cabem no limite configurado

    Args:
        players: número de jogadores N
        max_players: limite explícito (None = Config.MAX_PLAYERS)
    """
    limit = Config.MAX_PLAYERS if max_players is None else max_players
    if players > limit:
        raise CapacityError(
            f"Enumeração de 2^{players} coalizões excede o limite de {limit} jogadores "
            f"(ajuste --max-players ou QUORUMLAB_MAX_PLAYERS)",
            required=players,
            limit=limit,
        )


@lru_cache(maxsize=4)
def all_masks(players: int) -> np.ndarray:
    """Máscaras 0..2^N-1 (somente leitura)"""
    masks = np.arange(1 << players, dtype=np.int64)
    masks.setflags(write=False)
    logger.debug("Enumeração de %d máscaras criada", masks.size)
    return masks


def popcount(values: np.ndarray) -> np.ndarray:
    """Número de bits ligados em cada máscara"""
    values = np.asarray(values, dtype=np.int64)
    total = np.zeros(values.shape, dtype=np.int64)
    for shift in range(0, 48, 16):
        total += _POPCOUNT_16[(values >> shift) & 0xFFFF]
    return total


@lru_cache(maxsize=4)
def coalition_sizes(players: int) -> np.ndarray:
    sizes = popcount(all_masks(players))
    sizes.setflags(write=False)
    return sizes


def member_flags(players: int, player: int) -> np.ndarray:
    """Vetor booleano: a máscara contém o jogador?"""
    return (all_masks(players) >> (player - 1) & 1).astype(bool)


def block_mask(first: int, last: int) -> int:
    """Máscara dos jogadores first..last (inclusive)"""
    if last < first:
        return 0
    return ((1 << (last - first + 1)) - 1) << (first - 1)
