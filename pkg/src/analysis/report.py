"""
Relatório de Desejabilidade do Jogo Legco

Verifica por enumeração as quatro cláusulas sobre as ordens de
desejabilidade: equivalência dentro de cada câmara, relação entre as
câmaras, dominância do governo (n par) e incomparabilidade fraca do
governo (n ímpar > 4).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List

from ..core.models import ComparisonResult
from ..legco.game import LegcoGame, legco_game
from ..legco.landmarks import landmark_coalition
from .desirability import (
    compare_desirability,
    compare_weak_desirability,
    crucial_vector,
    separating_coalition,
)

logger = logging.getLogger(__name__)


CLAUSE_LABELS = {
    "intra_chamber_equivalence": "a",
    "cross_chamber": "b",
    "government_dominance": "c",
    "government_weak_incomparability": "d",
}


class ClauseStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    OUT_OF_RANGE = "out_of_range"


@dataclass
class ClauseResult:
    """Resultado de uma cláusula com a evidência usada"""
    name: str
    status: ClauseStatus
    statement: str
    evidence: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'status': self.status.value,
            'statement': self.statement,
            'evidence': self.evidence,
        }


@dataclass
class DesirabilityReport:
    n: int
    clauses: List[ClauseResult]

    @property
    def passed(self) -> bool:
        return all(c.status is not ClauseStatus.FAIL for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        for entry in self.clauses:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'passed': self.passed,
            'clauses': {c.name: c.to_dict() for c in self.clauses},
        }

    def by_label(self) -> Dict[str, Dict[str, Any]]:
        """Cláusulas indexadas por a..d, com o nome descritivo aninhado"""
        return {CLAUSE_LABELS[c.name]: {'name': c.name, **c.to_dict()} for c in self.clauses}


def _status(ok: bool) -> ClauseStatus:
    return ClauseStatus.PASS if ok else ClauseStatus.FAIL


def _intra_chamber(game: LegcoGame, max_players) -> ClauseResult:
    cats = game.categories
    failures = []
    checked = 0
    for chamber in (cats.geo, cats.func):
        for i, j in combinations(chamber, 2):
            checked += 1
            result = compare_desirability(game, i, j, max_players)
            if result is not ComparisonResult.EQUAL:
                failures.append({'pair': [i, j], 'result': result.value})
    return ClauseResult(
        name="intra_chamber_equivalence",
        status=_status(not failures),
        statement="membros da mesma câmara são D-equivalentes",
        evidence={'pairs_checked': checked, 'failures': failures},
    )


def _cross_chamber(game: LegcoGame, max_players) -> ClauseResult:
    n = game.n
    geo, func = 1, n + 1
    weak = compare_weak_desirability(game, geo, func, max_players)
    evidence: Dict[str, Any] = {'weak': weak.value}
    ok = weak is ComparisonResult.EQUAL

    if n >= 3:
        strong = compare_desirability(game, geo, func, max_players)
        evidence['strong'] = strong.value
        ok = ok and strong is ComparisonResult.INCOMPARABLE
        for i, j, key in ((geo, func, 'geo_over_func'), (func, geo, 'func_over_geo')):
            witness = separating_coalition(game, i, j, max_players)
            evidence[key] = witness.to_list() if witness is not None else None
    else:
        # abaixo de n=3 as câmaras são simétricas na ordem forte
        evidence['strong'] = ClauseStatus.OUT_OF_RANGE.value

    return ClauseResult(
        name="cross_chamber",
        status=_status(ok),
        statement=f"1 =_d {func}; 1 e {func} não são D-comparáveis (n ≥ 3)",
        evidence=evidence,
    )


def _government_dominance(game: LegcoGame, max_players) -> ClauseResult:
    n = game.n
    statement = f"j <_D {2 * n + 1} para todo 1 ≤ j ≤ {2 * n} (n par ≥ 4)"
    if n % 2 or n < 4:
        return ClauseResult("government_dominance", ClauseStatus.OUT_OF_RANGE, statement)

    gov = game.categories.government
    failures = []
    for j in range(1, gov):
        result = compare_desirability(game, j, gov, max_players)
        if result is not ComparisonResult.LESS:
            failures.append({'player': j, 'result': result.value})

    with_gov = landmark_coalition(n, "government_edge_with_government")
    with_first = landmark_coalition(n, "government_edge_with_first")
    return ClauseResult(
        name="government_dominance",
        status=_status(not failures),
        statement=statement,
        evidence={
            'failures': failures,
            'strict_witness': {
                'with_government': with_gov.to_list(),
                'with_government_wins': game.evaluate(with_gov),
                'with_first': with_first.to_list(),
                'with_first_wins': game.evaluate(with_first),
            },
        },
    )


def _government_weak_incomparability(game: LegcoGame, max_players) -> ClauseResult:
    n = game.n
    statement = f"j e {2 * n + 1} não são d-comparáveis (n ímpar > 4)"
    if n % 2 == 0 or n <= 4:
        return ClauseResult("government_weak_incomparability", ClauseStatus.OUT_OF_RANGE, statement)

    gov = game.categories.government
    failures = []
    for j in range(1, gov):
        result = compare_weak_desirability(game, j, gov, max_players)
        if result is not ComparisonResult.INCOMPARABLE:
            failures.append({'player': j, 'result': result.value})

    return ClauseResult(
        name="government_weak_incomparability",
        status=_status(not failures),
        statement=statement,
        evidence={
            'failures': failures,
            'first': crucial_vector(game, 1, max_players).to_dict(),
            'government': crucial_vector(game, gov, max_players).to_dict(),
        },
    )


def desirability_report(n: int, max_players=None) -> DesirabilityReport:
    """
    Verifica as cláusulas de desejabilidade do Legco para n membros por câmara

    Args:
        n: membros por câmara (2n+1 ≤ limite de enumeração)
        max_players: limite de enumeração

    Returns:
        DesirabilityReport com status pass/fail/out_of_range por cláusula
    """
    game = legco_game(n)
    clauses = [
        _intra_chamber(game, max_players),
        _cross_chamber(game, max_players),
        _government_dominance(game, max_players),
        _government_weak_incomparability(game, max_players),
    ]
    for clause in clauses:
        logger.info("n=%d %s: %s", n, clause.name, clause.status.value)
    return DesirabilityReport(n=n, clauses=clauses)
