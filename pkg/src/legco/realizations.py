"""
Realizações Conhecidas e Decomposições em Fatores

Matrizes amalgamadas que realizam Legco (n = 1..4 e a matriz de três
linhas para n >= 5), matrizes dos cenários de reforma e as decomposições
em interseção de jogos completos (n par) ou fracamente completos (n ímpar).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from ..core.errors import GameInputError
from ..core.models import AmalgamatedMatrix
from ..games.base import IntersectionGame, SimpleGame
from ..games.weighted import WeightedGame
from .game import ChamberRuleGame, Scenario, majority

_SMALL_REALIZATIONS = {
    1: [(2, [1, 1, 0])],
    2: [(4, [1, 1, 1, 1, 1])],
    3: [(10, [2, 2, 2, 3, 3, 3, 1]),
        (10, [3, 3, 3, 2, 2, 2, 1])],
    4: [(15, [2, 2, 2, 2, 3, 3, 3, 3, 4]),
        (15, [3, 3, 3, 3, 2, 2, 2, 2, 4])],
}


def _row(q, geo, func, gov, n) -> Tuple[Fraction, List[Fraction]]:
    return Fraction(q), [Fraction(geo)] * n + [Fraction(func)] * n + [Fraction(gov)]


def _check_n(n: int, minimum: int = 1):
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise GameInputError(f"n deve ser inteiro >= {minimum} (recebido {n!r})")


def chamber_rows(n: int) -> List[Tuple[Fraction, List[Fraction]]]:
    """Linhas ((n+1)/2; 1..1, 0..0, n/2) e ((n+1)/2; 0..0, 1..1, n/2)"""
    half_plus = Fraction(n + 1, 2)
    return [
        _row(half_plus, 1, 0, Fraction(n, 2), n),
        _row(half_plus, 0, 1, Fraction(n, 2), n),
    ]


def reference_realization(n: int) -> AmalgamatedMatrix:
    """
    Matriz amalgamada que realiza Legco(n, status_quo)

    Args:
        n: membros por câmara

    Returns:
        1 linha para n <= 2, 2 linhas para n = 3, 4 e 3 linhas para n >= 5
    """
    _check_n(n)
    if n in _SMALL_REALIZATIONS:
        return AmalgamatedMatrix.from_rows(_SMALL_REALIZATIONS[n])
    return AmalgamatedMatrix.from_rows([_row(n + 1, 1, 1, 0, n)] + chamber_rows(n))


def scenario_realization(n: int, scenario=Scenario.STATUS_QUO) -> AmalgamatedMatrix:
    """Matriz candidata de cada cenário (governo com peso 0 nas reformas)"""
    scenario = Scenario.parse(scenario)
    if scenario is Scenario.STATUS_QUO:
        return reference_realization(n)
    _check_n(n)
    if scenario is Scenario.UNICAMERAL:
        return AmalgamatedMatrix.from_rows([_row(n + 1, 1, 1, 0, n)])
    half = majority(n)
    return AmalgamatedMatrix.from_rows([_row(half, 1, 0, 0, n), _row(half, 0, 1, 0, n)])


class FactorClaim(str, Enum):
    """Tipo de fatores da decomposição"""
    C_DIMENSION = "c_dimension"  # fatores completos
    W_DIMENSION = "w_dimension"  # fatores fracamente completos


@dataclass(frozen=True)
class FactorDecomposition:
    """Fatores cuja interseção deve coincidir com Legco(n)"""
    n: int
    factors: Tuple[SimpleGame, ...]
    claim: FactorClaim

    def intersection(self) -> IntersectionGame:
        return IntersectionGame(self.factors, name=f"intersection(n={self.n})")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'claim': self.claim.value,
            'factors': [factor.name for factor in self.factors],
        }


def _chamber_system(n: int, chamber: str) -> ChamberRuleGame:
    k = n // 2

    def rule(r, s, gamma):
        if gamma:
            return r + s >= 2 * k + 1
        own = r if chamber == "geo" else s
        return r + s >= 2 * k + 2 and own >= k + 1

    return ChamberRuleGame(n, rule, f"system_{chamber}(n={n})")


def intersection_factors(n: int) -> FactorDecomposition:
    """
    Decomposição de Legco(n) para n >= 5

    n = 2k par: dois sistemas completos que diferem na câmara exigida
    (k+1 geo ou k+1 func) quando o governo está ausente.
    n ímpar: (n+1; 1..1, 1..1, 0) e o par de linhas por câmara, ambos
    fracamente completos.
    """
    _check_n(n, minimum=5)
    if n % 2 == 0:
        return FactorDecomposition(
            n,
            (_chamber_system(n, "geo"), _chamber_system(n, "func")),
            FactorClaim.C_DIMENSION,
        )
    total = WeightedGame(AmalgamatedMatrix.from_rows([_row(n + 1, 1, 1, 0, n)]), name=f"ordinary_majority(n={n})")
    chambers = WeightedGame(AmalgamatedMatrix.from_rows(chamber_rows(n)), name=f"chamber_pair(n={n})")
    return FactorDecomposition(n, (total, chambers), FactorClaim.W_DIMENSION)
