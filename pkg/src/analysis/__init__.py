"""Analysis - Ordens de Desejabilidade e Completude"""

from .desirability import (
    crucial_vector,
    crucial_vectors,
    compare_desirability,
    compare_weak_desirability,
    compare_vectors,
    separating_coalition,
)
from .completeness import is_swap_robust, is_complete, is_weakly_complete, verify_swap_witness
from .report import ClauseStatus, ClauseResult, DesirabilityReport, desirability_report

__all__ = [
    'crucial_vector',
    'crucial_vectors',
    'compare_desirability',
    'compare_weak_desirability',
    'compare_vectors',
    'separating_coalition',
    'is_swap_robust',
    'is_complete',
    'is_weakly_complete',
    'verify_swap_witness',
    'ClauseStatus',
    'ClauseResult',
    'DesirabilityReport',
    'desirability_report',
]
