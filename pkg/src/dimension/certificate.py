"""
Certificados de Dimensão

Limite superior pela igualdade com uma matriz candidata; limite inferior
pelo contraexemplo de troca (>= 2) e pela refutação simétrica com m = 1, 2.
Também verifica as decomposições em fatores completos / fracamente
completos e a hierarquia W-dimensão <= C-dimensão <= dimensão.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..analysis.completeness import is_complete, is_swap_robust, is_weakly_complete
from ..analysis.desirability import compare_weak_desirability, crucial_vector
from ..core.errors import GameInputError, RealizationError
from ..core.models import AmalgamatedMatrix, ComparisonResult, GameComparison
from ..games.base import SimpleGame
from ..games.frontier import games_equal
from ..games.weighted import WeightedGame
from ..legco.game import ChamberRuleGame, PlayerCategories, legco_game
from ..legco.landmarks import landmark_facts
from ..legco.realizations import intersection_factors, reference_realization
from .profiles import check_chamber_symmetry, classify_profiles
from .refutation import symmetric_refutation

logger = logging.getLogger(__name__)

SYMMETRIZATION_NOTE = (
    "a refutação simétrica vale para qualquer realização porque a média dos "
    "pesos dentro de cada câmara preserva o jogo (aplicada só para m <= 2)"
)


@dataclass
class DimensionCertificate:
    """Limites inferior e superior da dimensão com as evidências"""
    game: str
    upper: int
    lower: int
    matrix: AmalgamatedMatrix
    equality: GameComparison
    evidence: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.lower == self.upper

    @property
    def dimension(self) -> Optional[int]:
        return self.upper if self.certified else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'game': self.game,
            'lower': self.lower,
            'upper': self.upper,
            'certified': self.certified,
            'matrix': self.matrix.to_dict(),
            'equality': self.equality.to_dict(),
            'evidence': self.evidence,
            'notes': self.notes,
        }


def _categories_for(game: SimpleGame, categories: Optional[PlayerCategories], max_players):
    """Categorias do jogo quando ele é simétrico nas câmaras"""
    if isinstance(game, ChamberRuleGame):
        return game.categories
    if categories is None:
        return None
    mismatch = check_chamber_symmetry(game, categories, max_players)
    if mismatch is not None:
        logger.info("%s não é simétrico nas câmaras (coalizão %s)", game, mismatch)
        return None
    return categories


def certify_dimension(game: SimpleGame, candidate: AmalgamatedMatrix,
                      categories: Optional[PlayerCategories] = None,
                      max_players=None, budget: Optional[int] = None) -> DimensionCertificate:
    """
    Certifica a dimensão de um jogo a partir de uma matriz candidata

    Args:
        game: jogo alvo
        candidate: matriz amalgamada que deve realizar o jogo
        categories: partição geo/func/governo para jogos fora de ChamberRuleGame
        max_players: limite de enumeração
        budget: orçamento de atribuições da refutação

    Returns:
        DimensionCertificate com lower <= upper

    Raises:
        RealizationError: a candidata não realiza o jogo
    """
    if candidate.width != game.players:
        raise GameInputError(f"Matriz de largura {candidate.width} para jogo de {game.players} jogadores")
    comparison = games_equal(game, WeightedGame(candidate), max_players)
    if not comparison.equal:
        raise RealizationError(
            f"A matriz candidata não realiza {game.name}: divergem em {comparison.witness}",
            comparison=comparison,
        )

    certificate = DimensionCertificate(
        game=game.name,
        upper=candidate.m,
        lower=1,
        matrix=candidate,
        equality=comparison,
        evidence=[{'bound': 1, 'method': 'trivial'}],
    )
    if certificate.upper == 1:
        return certificate

    witness = is_swap_robust(game, max_players)
    cats = _categories_for(game, categories, max_players)
    table = classify_profiles(game, cats) if cats is not None else None

    if witness is not None:
        certificate.lower = 2
        certificate.evidence.append({'bound': 2, 'method': 'swap_witness', 'witness': witness.to_dict()})
    elif table is not None:
        transcript = symmetric_refutation(table, 1, budget)
        if transcript.refuted:
            certificate.lower = 2
            certificate.evidence.append({'bound': 2, 'method': 'symmetric_refutation', 'transcript': transcript.to_dict()})

    if certificate.lower == 2 and certificate.upper >= 3 and table is not None:
        transcript = symmetric_refutation(table, 2, budget)
        if transcript.refuted:
            certificate.lower = 3
            certificate.evidence.append({'bound': 3, 'method': 'symmetric_refutation', 'transcript': transcript.to_dict()})

    if table is not None and certificate.lower >= 2:
        certificate.notes.append(SYMMETRIZATION_NOTE)
    if table is None and not certificate.certified:
        certificate.notes.append("jogo sem simetria de câmaras: refutação por perfis indisponível")

    logger.info("%s: dimensão entre %d e %d", game.name, certificate.lower, certificate.upper)
    return certificate


@dataclass
class Check:
    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass
class FactorDimensionReport:
    """Verificação das decomposições de Legco(n) para n >= 5"""
    n: int
    checks: List[Check]
    w_dimension: Dict[str, Any]
    c_dimension: Dict[str, Any]
    dimension: Optional[int]
    landmarks: List[Dict[str, Any]] = field(default_factory=list)
    discrepancies: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> Check:
        for entry in self.checks:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'parity': 'even' if self.n % 2 == 0 else 'odd',
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
            'w_dimension': self.w_dimension,
            'c_dimension': self.c_dimension,
            'dimension': self.dimension,
            'landmarks': self.landmarks,
            'discrepancies': self.discrepancies,
        }


def factor_dimension_report(n: int, max_players=None, budget: Optional[int] = None) -> FactorDimensionReport:
    """
    Verifica W-dimensão e C-dimensão de Legco(n), n >= 5

    n par: fracamente completo, não robusto a trocas e interseção de dois
    fatores completos (W = 1, C = 2).
    n ímpar: não fracamente completo, interseção de dois fatores fracamente
    completos e todas as coalizões da cadeia de trocas conferidas (W = 2;
    C = 3 registrado como afirmado, com C >= 2 verificado).
    """
    if n < 5:
        raise GameInputError(f"Decomposição em fatores definida para n >= 5 (recebido n={n})")
    game = legco_game(n)
    decomposition = intersection_factors(n)
    factors = decomposition.factors
    swap = is_swap_robust(game, max_players)
    equality = games_equal(decomposition.intersection(), game, max_players)
    weakly = is_weakly_complete(game, max_players)

    checks = [
        Check("not_swap_robust", swap is not None, {'witness': swap.to_dict() if swap else None}),
        Check("factors_realize", equality.equal, equality.to_dict()),
    ]
    landmarks: List[Dict[str, Any]] = []
    discrepancies: List[Dict[str, Any]] = []

    if n % 2 == 0:
        complete = {factor.name: is_complete(factor, max_players) for factor in factors}
        checks.insert(0, Check("weakly_complete", weakly))
        checks.append(Check("factors_complete", all(complete.values()), complete))
        w_dimension = {'value': 1, 'basis': 'machine_checked'}
        c_dimension = {'value': 2, 'basis': 'machine_checked'}
    else:
        weak_factors = {factor.name: is_weakly_complete(factor, max_players) for factor in factors}
        gov = game.categories.government
        relation = compare_weak_desirability(game, 1, gov, max_players)
        checks.insert(0, Check("not_weakly_complete", not weakly and relation is ComparisonResult.INCOMPARABLE, {
            'pair': [1, gov],
            'relation': relation.value,
            'first': crucial_vector(game, 1, max_players).to_dict(),
            'government': crucial_vector(game, gov, max_players).to_dict(),
        }))
        checks.append(Check("factors_weakly_complete", all(weak_factors.values()), weak_factors))
        facts = landmark_facts(n, game, prefix="chain_")
        landmarks = [fact.to_dict() for fact in facts]
        discrepancies = [fact.to_dict() for fact in facts if not fact.holds and fact.known_discrepancy]
        failures = [fact.name for fact in facts if fact.is_failure]
        checks.append(Check("exchange_chain", not failures, {'failures': failures}))
        w_dimension = {'value': 2, 'basis': 'machine_checked'}
        c_dimension = {'value': 3, 'basis': 'asserted', 'machine_checked_lower': 2}

    dimension = certify_dimension(game, reference_realization(n), max_players=max_players, budget=budget).dimension
    hierarchy = dimension is not None and w_dimension['value'] <= c_dimension['value'] <= dimension
    checks.append(Check("dimension_hierarchy", hierarchy, {
        'w_dimension': w_dimension['value'],
        'c_dimension': c_dimension['value'],
        'dimension': dimension,
    }))

    report = FactorDimensionReport(
        n=n,
        checks=checks,
        w_dimension=w_dimension,
        c_dimension=c_dimension,
        dimension=dimension,
        landmarks=landmarks,
        discrepancies=discrepancies,
    )
    logger.info("n=%d decomposição: %s", n, "ok" if report.passed else "falhou")
    return report
