"""
Índice de Banzhaf

Contagens de swing por enumeração (oráculo) e fórmulas fechadas para
membros ordinários e governo do Legco.
"""

import logging
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from ..core.errors import GameInputError
from ..core.models import IndexVector, SwingCounts
from ..games.base import SimpleGame
from ..games.enumeration import all_masks
from .combinatorics import binom, exact_half

logger = logging.getLogger(__name__)


def banzhaf_enum(game: SimpleGame, max_players=None) -> SwingCounts:
    """
    b(k) = número de vencedoras S com k ∈ S e S∖{k} perdedora

    Args:
        game: jogo simples
        max_players: limite de enumeração

    Returns:
        SwingCounts exatas para os jogadores 1..N
    """
    table = game.win_table(max_players)
    masks = all_masks(game.players)
    counts = []
    for player in range(1, game.players + 1):
        bit = 1 << (player - 1)
        members = masks[(masks & bit) != 0]
        counts.append(int(np.count_nonzero(table[members] & ~table[members ^ bit])))
    return SwingCounts(tuple(counts))


def banzhaf_index(counts: SwingCounts) -> IndexVector:
    """Índice normalizado b(k) / Σ b"""
    total = counts.total
    if total == 0:
        raise GameInputError("Índice de Banzhaf indefinido: nenhum jogador tem swing")
    return IndexVector("banzhaf", tuple(Fraction(b, total) for b in counts.counts))


class BanzhafCounts(NamedTuple):
    ordinary: int
    government: int


def banzhaf_closed(n: int) -> BanzhafCounts:
    """
    Swings de um membro ordinário e do governo em Legco(n)

    n ímpar:
        b_ord = C(2n-1, n) + C(n-1, (n-1)/2) 2^(n-1)
        b_gov = 2^(2n-2) - C(2n, n)/2
    n par:
        b_ord = C(2n-1, n) + C(n-1, n/2) (2^(n-1) - C(n, n/2)/2)
        b_gov = 2^(2n-2) - C(2n, n)/2 + 2^(n-1) C(n, n/2) - C(n, n/2)^2/4
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GameInputError(f"n deve ser inteiro >= 1 (recebido {n!r})")
    base = binom(2 * n - 1, n)
    gov = 2 ** (2 * n - 2) - exact_half(binom(2 * n, n))
    if n % 2:
        ordinary = base + binom(n - 1, (n - 1) // 2) * 2 ** (n - 1)
    else:
        middle = binom(n, n // 2)
        ordinary = base + binom(n - 1, n // 2) * (2 ** (n - 1) - exact_half(middle))
        gov += 2 ** (n - 1) * middle - exact_half(middle * middle, 4)
    return BanzhafCounts(ordinary, gov)
