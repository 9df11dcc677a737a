"""
Jogo Legco

Jogadores 1..n (constituências geográficas), n+1..2n (funcionais) e 2n+1
(governo virtual). Cenários de reforma mantêm o jogador 2n+1 como dummy
para indexação uniforme.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Tuple, Union

import numpy as np

from ..core.errors import GameInputError
from ..games.base import SimpleGame
from ..games.enumeration import block_mask, popcount

ProfileRule = Callable[[int, int, int], bool]


class Scenario(str, Enum):
    """Regra de votação: situação atual ou variantes de reforma"""
    STATUS_QUO = "status_quo"
    BICAMERAL_ONLY = "bicameral_only"
    UNICAMERAL = "unicameral"

    @classmethod
    def parse(cls, value: Union["Scenario", str]) -> "Scenario":
        try:
            return cls(value)
        except ValueError as exc:
            options = ", ".join(s.value for s in cls)
            raise GameInputError(f"Cenário desconhecido: {value!r} (use {options})") from exc


@dataclass(frozen=True)
class PlayerCategories:
    """Partição geo / func / governo dos 2n+1 jogadores"""
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GameInputError(f"Legco exige n >= 1 (recebido n={self.n})")

    @property
    def players(self) -> int:
        return 2 * self.n + 1

    @property
    def geo(self) -> range:
        return range(1, self.n + 1)

    @property
    def func(self) -> range:
        return range(self.n + 1, 2 * self.n + 1)

    @property
    def government(self) -> int:
        return 2 * self.n + 1

    @property
    def geo_mask(self) -> int:
        return block_mask(1, self.n)

    @property
    def func_mask(self) -> int:
        return block_mask(self.n + 1, 2 * self.n)

    @property
    def government_bit(self) -> int:
        return 1 << (2 * self.n)

    def category_of(self, player: int) -> str:
        if player in self.geo:
            return "geo"
        if player in self.func:
            return "func"
        if player == self.government:
            return "gov"
        raise GameInputError(f"Jogador {player} fora do intervalo 1..{self.players}")

    def profile_of(self, mask: int) -> Tuple[int, int, int]:
        """(r, s, γ): membros geo, membros func, presença do governo"""
        return (
            bin(mask & self.geo_mask).count("1"),
            bin(mask & self.func_mask).count("1"),
            1 if mask & self.government_bit else 0,
        )

    def representative(self, r: int, s: int, gamma: int) -> int:
        """Máscara com os primeiros r geo, os primeiros s func e o governo se γ = 1"""
        if not (0 <= r <= self.n and 0 <= s <= self.n and gamma in (0, 1)):
            raise GameInputError(f"Perfil inválido ({r}, {s}, {gamma}) para n={self.n}")
        return block_mask(1, r) | block_mask(self.n + 1, self.n + s) | (self.government_bit if gamma else 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'geo': [self.geo.start, self.geo.stop - 1],
            'func': [self.func.start, self.func.stop - 1],
            'gov': self.government,
        }


class ChamberRuleGame(SimpleGame):
    """
    Jogo definido por uma regra sobre o perfil (r, s, γ)

    Simétrico dentro de cada câmara por construção.
    """

    def __init__(self, n: int, rule: ProfileRule, name: str):
        self.categories = PlayerCategories(n)
        super().__init__(self.categories.players, name)
        self.n = n
        self.rule = rule
        self._grid = None

    def evaluate_mask(self, mask: int) -> bool:
        return bool(self.rule(*self.categories.profile_of(mask)))

    def wins_profile(self, r: int, s: int, gamma: int) -> bool:
        self.categories.representative(r, s, gamma)
        return bool(self.rule(r, s, gamma))

    def profile_grid(self) -> np.ndarray:
        """grid[r, s, γ] com o resultado da regra"""
        if self._grid is None:
            size = self.n + 1
            grid = np.zeros((size, size, 2), dtype=bool)
            for r in range(size):
                for s in range(size):
                    for gamma in (0, 1):
                        grid[r, s, gamma] = bool(self.rule(r, s, gamma))
            grid.setflags(write=False)
            self._grid = grid
        return self._grid

    def _build_table(self, masks: np.ndarray) -> np.ndarray:
        cats = self.categories
        r = popcount(masks & cats.geo_mask)
        s = popcount(masks & cats.func_mask)
        gamma = (masks >> (2 * self.n)) & 1
        return self.profile_grid()[r, s, gamma]

    def to_document(self) -> Dict[str, Any]:
        from ..games.explicit import ExplicitGame

        return ExplicitGame.from_table(self.players, self.win_table(), self.name).to_document()


def majority(n: int) -> int:
    """Menor contagem estritamente acima de n/2"""
    return n // 2 + 1


def scenario_rule(n: int, scenario: Scenario) -> ProfileRule:
    """Regra (r, s, γ) -> vence? para cada cenário"""
    half = majority(n)
    if scenario is Scenario.STATUS_QUO:
        def rule(r, s, gamma):
            if gamma:
                return r + s >= n + 1
            return r >= half and s >= half
    elif scenario is Scenario.BICAMERAL_ONLY:
        def rule(r, s, gamma):
            return r >= half and s >= half
    else:
        def rule(r, s, gamma):
            return r + s >= n + 1
    return rule


class LegcoGame(ChamberRuleGame):
    """Legco de tamanho 2n sob um cenário"""

    def __init__(self, n: int, scenario: Scenario = Scenario.STATUS_QUO):
        if n < 1:
            raise GameInputError(f"Legco exige n >= 1 (recebido n={n})")
        scenario = Scenario.parse(scenario)
        super().__init__(n, scenario_rule(n, scenario), f"legco(n={n}, {scenario.value})")
        self.scenario = scenario

    def to_document(self) -> Dict[str, Any]:
        return {'type': 'legco', 'n': self.n, 'scenario': self.scenario.value}


def legco_game(n: int, scenario: Union[Scenario, str] = Scenario.STATUS_QUO) -> LegcoGame:
    """
    Constrói o jogo Legco

    Args:
        n: membros por câmara (n >= 1)
        scenario: status_quo, bicameral_only ou unicameral

    Returns:
        LegcoGame com 2n+1 jogadores
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise GameInputError(f"n deve ser inteiro positivo (recebido {n!r})")
    return LegcoGame(n, Scenario.parse(scenario))
