"""
Índice de Shapley-Shubik

SSI(k) = Σ |S|! (N-1-|S|)! / N! sobre as S ∌ k em que k é pivô; forma
fechada do governo do Legco como soma dupla exata.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple

from ..analysis.desirability import crucial_vector
from ..core.errors import GameInputError
from ..core.models import IndexVector
from ..games.base import SimpleGame
from .banzhaf import banzhaf_enum
from .combinatorics import binom, fact

logger = logging.getLogger(__name__)


def ssi_enum(game: SimpleGame, max_players=None) -> IndexVector:
    """
    Shapley-Shubik exato por enumeração

    Args:
        game: jogo simples
        max_players: limite de enumeração

    Returns:
        IndexVector que soma 1
    """
    N = game.players
    total = fact(N)
    # coalizão vencedora de tamanho k com o jogador crucial: (k-1)! (N-k)! ordens
    weights = [Fraction(fact(k - 1) * fact(N - k), total) for k in range(1, N + 1)]
    values = []
    for player in range(1, N + 1):
        counts = crucial_vector(game, player, max_players).counts
        values.append(sum((w * c for w, c in zip(weights, counts)), Fraction(0)))
    index = IndexVector("shapley_shubik", tuple(values))
    if index.total != 1:
        raise ArithmeticError(f"{game}: Shapley-Shubik soma {index.total}")
    return index


def _check_n(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GameInputError(f"n deve ser inteiro >= 1 (recebido {n!r})")


def ssi_gov_closed(n: int) -> Fraction:
    """
    SSI do governo em Legco(n)

    (2/(2n+1)) Σ_{r=1}^{⌊n/2⌋} Σ_{s=n+1-r}^{n} C(r+s, r) C(2n-r-s, n-r) / C(2n, n)
    """
    _check_n(n)
    acc = 0
    for r in range(1, n // 2 + 1):
        for s in range(n + 1 - r, n + 1):
            acc += binom(r + s, r) * binom(2 * n - r - s, n - r)
    return Fraction(2 * acc, (2 * n + 1) * binom(2 * n, n))


def ssi_ordinary_closed(n: int) -> Fraction:
    """Membros ordinários dividem igualmente o restante: (1 - SSI_gov) / 2n"""
    return (1 - ssi_gov_closed(n)) / (2 * n)


def ssi_ratio(n: int) -> Fraction:
    """SSI(2n+1) / SSI(1) = 2n SSI_gov / (1 - SSI_gov)"""
    gov = ssi_gov_closed(n)
    return 2 * n * gov / (1 - gov)


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def ordinal_disagreement(game: SimpleGame, max_players=None) -> Optional[Tuple[int, int]]:
    """Primeiro par (i, j) ordenado de forma diferente por Banzhaf e Shapley-Shubik"""
    swings = banzhaf_enum(game, max_players)
    shapley = ssi_enum(game, max_players)
    for i, j in combinations(range(1, game.players + 1), 2):
        if _sign(swings[i] - swings[j]) != _sign(shapley[i] - shapley[j]):
            return i, j
    return None


def indices_ordinally_equivalent(game: SimpleGame, max_players=None) -> bool:
    return ordinal_disagreement(game, max_players) is None
