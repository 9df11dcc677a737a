"""Games - Jogos Simples Monótonos, Avaliação e Fronteiras"""

from .base import SimpleGame, IntersectionGame
from .explicit import ExplicitGame, MonotonicityViolation, check_monotone
from .weighted import WeightedGame
from .frontier import evaluate, minimal_winning, maximal_losing, games_equal

__all__ = [
    'SimpleGame',
    'IntersectionGame',
    'ExplicitGame',
    'MonotonicityViolation',
    'check_monotone',
    'WeightedGame',
    'evaluate',
    'minimal_winning',
    'maximal_losing',
    'games_equal',
]
