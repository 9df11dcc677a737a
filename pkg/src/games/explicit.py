"""
Jogo Explícito - conjunto de coalizões vencedoras
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Union

import numpy as np

from ..core.errors import GameInputError
from ..core.models import Coalition
from .base import SimpleGame
from .enumeration import all_masks, ensure_enumerable

CoalitionLike = Union[Coalition, int, Iterable[int]]


@dataclass(frozen=True)
class MonotonicityViolation:
    """Par (S, T) com S ⊆ T quebrando v(S) <= v(T) ou um axioma de jogo simples"""
    reason: str  # superset_losing, empty_wins, no_winning
    subset: Coalition
    superset: Coalition

    def as_pair(self):
        return (self.subset, self.superset)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'reason': self.reason,
            'subset': self.subset.to_list(),
            'superset': self.superset.to_list(),
        }


def _to_mask(item: CoalitionLike, players: int) -> int:
    if isinstance(item, Coalition):
        if item.width != players:
            raise GameInputError(f"Coalizão de largura {item.width} em jogo de {players} jogadores")
        return item.mask
    if isinstance(item, int):
        return Coalition(item, players).mask
    return Coalition.of(item, players).mask


def check_monotone(winning: Iterable[CoalitionLike], players: int) -> List[MonotonicityViolation]:
    """
    Lista violações de monotonicidade de um conjunto de vencedoras

    Args:
        winning: coalizões vencedoras (Coalition, máscara ou lista de jogadores)
        players: número de jogadores N

    Returns:
        Lista vazia sse o conjunto é fechado para superconjuntos, contém a
        grande coalizão e não contém o vazio
    """
    masks = sorted({_to_mask(item, players) for item in winning})
    winning_set = set(masks)
    violations = []

    if 0 in winning_set:
        empty = Coalition.empty(players)
        violations.append(MonotonicityViolation("empty_wins", empty, empty))
    if not masks:
        grand = Coalition.grand(players)
        violations.append(MonotonicityViolation("no_winning", grand, grand))

    for mask in masks:
        for k in range(players):
            bit = 1 << k
            if not mask & bit and mask | bit not in winning_set:
                violations.append(MonotonicityViolation(
                    "superset_losing",
                    Coalition(mask, players),
                    Coalition(mask | bit, players),
                ))
    return violations


class ExplicitGame(SimpleGame):
    """Jogo dado pela lista de coalizões vencedoras (ordenada por máscara)"""

    def __init__(self, players: int, winning: Iterable[CoalitionLike], name: str = "explicit"):
        super().__init__(players, name)
        masks = sorted({_to_mask(item, players) for item in winning})
        violations = check_monotone(masks, players)
        if violations:
            first = violations[0]
            raise GameInputError(
                f"Jogo explícito não é monótono ({len(violations)} violações; "
                f"primeira: {first.reason} {first.subset} -> {first.superset})"
            )
        self.winning_masks = tuple(masks)
        self._winning = frozenset(masks)

    @classmethod
    def from_table(cls, players: int, table: np.ndarray, name: str = "explicit") -> "ExplicitGame":
        return cls(players, (int(m) for m in np.flatnonzero(table)), name)

    @classmethod
    def from_predicate(cls, players: int, predicate: Callable[[int], bool], name: str = "explicit",
                       max_players=None) -> "ExplicitGame":
        """Enumera as 2^N coalizões e guarda as que satisfazem o predicado"""
        ensure_enumerable(players, max_players)
        return cls(players, (int(m) for m in all_masks(players) if predicate(int(m))), name)

    def evaluate_mask(self, mask: int) -> bool:
        return mask in self._winning

    def _build_table(self, masks: np.ndarray) -> np.ndarray:
        table = np.zeros(masks.size, dtype=bool)
        table[list(self.winning_masks)] = True
        return table

    @property
    def winning(self) -> List[Coalition]:
        return [Coalition(m, self.players) for m in self.winning_masks]

    def to_document(self) -> Dict[str, Any]:
        return {
            'type': 'explicit',
            'players': self.players,
            'winning': [Coalition(m, self.players).to_list() for m in self.winning_masks],
        }
