"""Legco - Jogo Legco, Cenários de Reforma e Realizações"""

from .game import Scenario, PlayerCategories, ChamberRuleGame, LegcoGame, legco_game, majority
from .realizations import (
    reference_realization,
    scenario_realization,
    FactorClaim,
    FactorDecomposition,
    intersection_factors,
)
from .landmarks import LANDMARK_ALIASES, LANDMARK_NAMES, LandmarkFact, landmark_coalition, landmark_facts, swap_pair

__all__ = [
    'Scenario',
    'PlayerCategories',
    'ChamberRuleGame',
    'LegcoGame',
    'legco_game',
    'majority',
    'reference_realization',
    'scenario_realization',
    'FactorClaim',
    'FactorDecomposition',
    'intersection_factors',
    'LANDMARK_ALIASES',
    'LANDMARK_NAMES',
    'LandmarkFact',
    'landmark_coalition',
    'landmark_facts',
    'swap_pair',
]
