"""Core - Modelos, Configurações e Exceções"""

from .config import Config
from .errors import QuorumLabError, GameInputError, CapacityError, RealizationError
from .models import (
    Coalition,
    WeightRow,
    AmalgamatedMatrix,
    GameComparison,
    ComparisonResult,
    CrucialVector,
    SwapWitness,
    SwingCounts,
    IndexVector,
    format_rational,
)

__all__ = [
    'Config',
    'QuorumLabError',
    'GameInputError',
    'CapacityError',
    'RealizationError',
    'Coalition',
    'WeightRow',
    'AmalgamatedMatrix',
    'GameComparison',
    'ComparisonResult',
    'CrucialVector',
    'SwapWitness',
    'SwingCounts',
    'IndexVector',
    'format_rational',
]
