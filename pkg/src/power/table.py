"""Tabela de poder por jogador (enumeração) para qualquer jogo dentro do limite"""

from typing import Optional

import pandas as pd

from ..core.config import Config
from ..games.base import SimpleGame
from ..legco.game import ChamberRuleGame
from .banzhaf import banzhaf_enum, banzhaf_index
from .shapley import ssi_enum


def power_table(game: SimpleGame, max_players=None, digits: Optional[int] = None) -> pd.DataFrame:
    """
    Colunas: player, category, swings, banzhaf, shapley_shubik (exatos "p/q")
    e as versões decimais
    """
    digits = digits or Config.DIGITS
    swings = banzhaf_enum(game, max_players)
    banzhaf = banzhaf_index(swings)
    shapley = ssi_enum(game, max_players)
    categories = game.categories if isinstance(game, ChamberRuleGame) else None
    records = []
    for player in range(1, game.players + 1):
        records.append({
            'player': player,
            'category': categories.category_of(player) if categories else '',
            'swings': swings[player],
            'banzhaf': str(banzhaf[player]),
            'banzhaf_decimal': f"{float(banzhaf[player]):.{digits}g}",
            'shapley_shubik': str(shapley[player]),
            'shapley_shubik_decimal': f"{float(shapley[player]):.{digits}g}",
        })
    return pd.DataFrame(records)
