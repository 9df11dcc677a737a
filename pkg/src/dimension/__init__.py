"""Dimension - Certificados de Dimensão e Refutação por LP Exato"""

from .lp import FeasibilityResult, find_feasible_point, farkas_certificate, solve_feasibility
from .profiles import (
    Profile,
    ProfileTable,
    SymmetricRow,
    SymmetricRealization,
    classify_profiles,
    profile_table,
    check_chamber_symmetry,
    symmetrize,
    symmetric_rows,
)
from .refutation import (
    RefutationCase,
    RefutationTranscript,
    separate,
    separable,
    symmetric_refutation,
    refute_symmetric_realization,
)
from .certificate import (
    DimensionCertificate,
    FactorDimensionReport,
    certify_dimension,
    factor_dimension_report,
)

__all__ = [
    'FeasibilityResult',
    'find_feasible_point',
    'farkas_certificate',
    'solve_feasibility',
    'Profile',
    'ProfileTable',
    'SymmetricRow',
    'SymmetricRealization',
    'classify_profiles',
    'profile_table',
    'check_chamber_symmetry',
    'symmetrize',
    'symmetric_rows',
    'RefutationCase',
    'RefutationTranscript',
    'separate',
    'separable',
    'symmetric_refutation',
    'refute_symmetric_realization',
    'DimensionCertificate',
    'FactorDimensionReport',
    'certify_dimension',
    'factor_dimension_report',
]
