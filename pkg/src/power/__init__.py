"""Power - Índices de Banzhaf e Shapley-Shubik"""

from .banzhaf import BanzhafCounts, banzhaf_enum, banzhaf_index, banzhaf_closed
from .shapley import (
    ssi_enum,
    ssi_gov_closed,
    ssi_ordinary_closed,
    ssi_ratio,
    ordinal_disagreement,
    indices_ordinally_equivalent,
)
from .asymptotics import GROWTH_CONSTANT, bi_ratio_exact, bi_ratio_asymptotic, parity_gap
from .sweep import SWEEP_COLUMNS, SweepRow, GrowthProbe, sweep, sweep_row, sweep_frame, growth_probe, parity_trend
from .table import power_table

__all__ = [
    'BanzhafCounts',
    'banzhaf_enum',
    'banzhaf_index',
    'banzhaf_closed',
    'ssi_enum',
    'ssi_gov_closed',
    'ssi_ordinary_closed',
    'ssi_ratio',
    'ordinal_disagreement',
    'indices_ordinally_equivalent',
    'GROWTH_CONSTANT',
    'bi_ratio_exact',
    'bi_ratio_asymptotic',
    'parity_gap',
    'SWEEP_COLUMNS',
    'SweepRow',
    'GrowthProbe',
    'sweep',
    'sweep_row',
    'sweep_frame',
    'growth_probe',
    'parity_trend',
    'power_table',
]
