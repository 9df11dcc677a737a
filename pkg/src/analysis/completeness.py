"""
Robustez a Trocas e Completude

Um jogo é completo quando ≤_D é total, e isso equivale a não haver
contraexemplo de troca. A busca de troca é exaustiva e fatorada por par
de jogadores.
"""

import logging
from itertools import combinations, permutations
from typing import Optional

import numpy as np

from ..core.models import Coalition, ComparisonResult, SwapWitness
from ..games.base import SimpleGame
from ..games.enumeration import all_masks
from .desirability import compare_desirability, compare_vectors, crucial_vectors

logger = logging.getLogger(__name__)


def _first_broken_swap(table: np.ndarray, masks: np.ndarray, keep_bit: int, drop_bit: int) -> Optional[int]:
    """Menor S vencedora com keep ∈ S, drop ∉ S e S - keep + drop perdedora"""
    candidates = masks[((masks & keep_bit) != 0) & ((masks & drop_bit) == 0)]
    broken = table[candidates] & ~table[candidates ^ keep_bit ^ drop_bit]
    hits = np.flatnonzero(broken)
    return int(candidates[hits[0]]) if hits.size else None


def _breaks(table: np.ndarray, mask: int, leaving_bit: int, entering_bit: int) -> bool:
    return (
        bool(mask & leaving_bit)
        and not mask & entering_bit
        and bool(table[mask])
        and not table[mask ^ leaving_bit ^ entering_bit]
    )


def is_swap_robust(game: SimpleGame, max_players=None) -> Optional[SwapWitness]:
    """
    Procura um contraexemplo de robustez a trocas

    Ordem canônica: menor S vencedora (ordem de máscara), depois menor S'
    que forma contraexemplo com S, depois o par (i, j) lexicográfico com
    i ∈ S∖S' e j ∈ S'∖S. A busca é fatorada por par ordenado: S* é a menor
    primeira quebra de (i, j) entre os pares cujo sentido (j, i) também
    quebra, e S' vem da primeira quebra no sentido oposto.

    Args:
        game: jogo simples
        max_players: limite de enumeração

    Returns:
        None se o jogo é robusto a trocas, senão um SwapWitness verificado
    """
    table = game.win_table(max_players)
    masks = all_masks(game.players)
    players = range(1, game.players + 1)
    first_break = {}
    for i, j in permutations(players, 2):
        first_break[i, j] = _first_broken_swap(table, masks, 1 << (i - 1), 1 << (j - 1))

    pairs = [(i, j) for (i, j), found in first_break.items()
             if found is not None and first_break[j, i] is not None]
    if not pairs:
        return None

    source = min(first_break[pair] for pair in pairs)
    with_source = [(i, j) for i, j in pairs if _breaks(table, source, 1 << (i - 1), 1 << (j - 1))]
    partner = min(first_break[j, i] for i, j in with_source)
    i, j = min(
        (i, j) for i, j in with_source
        if _breaks(table, partner, 1 << (j - 1), 1 << (i - 1))
    )
    witness = SwapWitness(
        first=Coalition(source, game.players),
        second=Coalition(partner, game.players),
        leaving=i,
        entering=j,
    )
    logger.debug("%s: troca %d<->%d quebra %s e %s", game, i, j, witness.first, witness.second)
    return witness


def verify_swap_witness(game: SimpleGame, witness: SwapWitness) -> bool:
    """Confere as quatro avaliações de um contraexemplo de troca"""
    after_first, after_second = witness.exchanged()
    return (
        game.evaluate(witness.first)
        and game.evaluate(witness.second)
        and not game.evaluate(after_first)
        and not game.evaluate(after_second)
    )


def is_complete(game: SimpleGame, max_players=None) -> bool:
    """≤_D total sobre todos os pares; confrontado com a busca de troca"""
    complete = all(
        compare_desirability(game, i, j, max_players) is not ComparisonResult.INCOMPARABLE
        for i, j in combinations(range(1, game.players + 1), 2)
    )
    robust = is_swap_robust(game, max_players) is None
    if complete != robust:
        raise AssertionError(f"{game}: completude ({complete}) difere da robustez a trocas ({robust})")
    return complete


def is_weakly_complete(game: SimpleGame, max_players=None) -> bool:
    """≤_d total sobre todos os pares"""
    vectors = crucial_vectors(game, max_players)
    return all(
        compare_vectors(vectors[i], vectors[j]) is not ComparisonResult.INCOMPARABLE
        for i, j in combinations(range(1, game.players + 1), 2)
    )
