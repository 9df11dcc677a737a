"""
Varreduras em n pelas Formas Fechadas

Linhas prontas para CSV com as razões BI e SSI do governo, sonda de
crescimento (inclinação log-log por mínimos quadrados) e tendência por
paridade.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np
import pandas as pd
from sklearn.linear_model import LinearRegression

from ..core.config import Config
from ..core.errors import GameInputError
from .asymptotics import bi_ratio_asymptotic
from .banzhaf import banzhaf_closed
from .shapley import ssi_gov_closed

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    'n', 'parity', 'b_ord', 'b_gov', 'bi_ratio', 'bi_ratio_asymptotic',
    'ssi_gov', 'ssi_ord', 'ssi_ratio',
]


def _decimal(value, digits: int) -> str:
    return f"{float(value):.{digits}g}"


@dataclass(frozen=True)
class SweepRow:
    n: int
    b_ord: int
    b_gov: int
    ssi_gov: Fraction

    @property
    def parity(self) -> str:
        return 'even' if self.n % 2 == 0 else 'odd'

    @property
    def bi_ratio(self) -> Fraction:
        return Fraction(self.b_gov, self.b_ord)

    @property
    def ssi_ord(self) -> Fraction:
        return (1 - self.ssi_gov) / (2 * self.n)

    @property
    def ssi_ratio(self) -> Fraction:
        return 2 * self.n * self.ssi_gov / (1 - self.ssi_gov)

    def to_record(self, digits: int = None) -> Dict[str, Any]:
        digits = digits or Config.DIGITS
        return {
            'n': self.n,
            'parity': self.parity,
            'b_ord': str(self.b_ord),
            'b_gov': str(self.b_gov),
            'bi_ratio': _decimal(self.bi_ratio, digits),
            'bi_ratio_asymptotic': _decimal(bi_ratio_asymptotic(self.n), digits),
            'ssi_gov': _decimal(self.ssi_gov, digits),
            'ssi_ord': _decimal(self.ssi_ord, digits),
            'ssi_ratio': _decimal(self.ssi_ratio, digits),
        }


def sweep_row(n: int) -> SweepRow:
    counts = banzhaf_closed(n)
    return SweepRow(n=n, b_ord=counts.ordinary, b_gov=counts.government, ssi_gov=ssi_gov_closed(n))


def _range(n_from: int, n_to: int, step: int) -> range:
    if step < 1:
        raise GameInputError(f"Passo deve ser >= 1 (recebido {step})")
    if n_from < 1:
        raise GameInputError(f"n inicial deve ser >= 1 (recebido {n_from})")
    values = range(n_from, n_to + 1, step)
    if not values:
        raise GameInputError(f"Intervalo vazio: {n_from}..{n_to}")
    return values


def sweep(n_from: int, n_to: int, step: int = 1) -> List[SweepRow]:
    """
    Linhas da varredura n_from..n_to (inclusive)

    Args:
        n_from: primeiro n
        n_to: último n
        step: passo

    Returns:
        Lista de SweepRow ordenada por n
    """
    rows = [sweep_row(n) for n in _range(n_from, n_to, step)]
    logger.info("Varredura %d..%d: %d linhas", n_from, n_to, len(rows))
    return rows


def sweep_frame(rows: List[SweepRow], digits: int = None) -> pd.DataFrame:
    return pd.DataFrame([row.to_record(digits) for row in rows], columns=SWEEP_COLUMNS)


@dataclass
class GrowthProbe:
    """Tabela da sonda e ajuste log(razão SSI) ~ slope log(n) + intercept"""
    frame: pd.DataFrame
    slope: float
    intercept: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'rows': self.frame.to_dict(orient='records'),
        }


def growth_probe(n_from: int, n_to: int, step: int = 1) -> GrowthProbe:
    """
    Ajusta a inclinação log-log da razão SSI governo / ordinário

    n = 1 tem razão zero e fica fora do ajuste.
    """
    values = _range(max(n_from, 2), n_to, step)
    if len(values) < 2:
        raise GameInputError("A sonda precisa de ao menos dois valores de n >= 2")
    rows = [sweep_row(n) for n in values]
    n_arr = np.array([row.n for row in rows], dtype=float)
    ratio = np.array([float(row.ssi_ratio) for row in rows])
    scaled = np.array([float(row.ssi_gov) for row in rows]) * np.sqrt(n_arr)

    model = LinearRegression()
    model.fit(np.log(n_arr).reshape(-1, 1), np.log(ratio))
    frame = pd.DataFrame({
        'n': n_arr.astype(int),
        'ssi_gov_sqrt_n': scaled,
        'ssi_ratio': ratio,
    })
    slope = float(model.coef_[0])
    logger.info("Sonda %d..%d: inclinação %.4f", values.start, values[-1], slope)
    return GrowthProbe(frame=frame, slope=slope, intercept=float(model.intercept_))


def _increasing(values: List[Fraction]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def parity_trend(rows: List[SweepRow]) -> Dict[str, Dict[str, bool]]:
    """Dentro de cada paridade, as razões BI e SSI do governo crescem com n"""
    trend = {}
    for parity in ('odd', 'even'):
        chosen = sorted((row for row in rows if row.parity == parity), key=lambda row: row.n)
        trend[parity] = {
            'bi_ratio_increasing': _increasing([row.bi_ratio for row in chosen]),
            'ssi_ratio_increasing': _increasing([row.ssi_ratio for row in chosen]),
        }
    return trend
