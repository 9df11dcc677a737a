"""
Razão de Banzhaf governo / membro ordinário

Valor exato pelas fórmulas fechadas e aproximação de Stirling por paridade:
    ímpar: √(π/2) √n (√2-1) - √2 (√2-1)
    par:   √(π/2) √n (√2-1) + √2 - 1
"""

from fractions import Fraction

import numpy as np

from ..core.errors import GameInputError
from .banzhaf import banzhaf_closed

SQRT2_MINUS_1 = np.sqrt(2.0) - 1.0
GROWTH_CONSTANT = np.sqrt(np.pi / 2.0) * SQRT2_MINUS_1


def bi_ratio_exact(n: int) -> Fraction:
    counts = banzhaf_closed(n)
    return Fraction(counts.government, counts.ordinary)


def bi_ratio_asymptotic(n: int) -> float:
    """Aproximação de b_gov / b_ord para n membros por câmara"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GameInputError(f"n deve ser inteiro >= 1 (recebido {n!r})")
    leading = GROWTH_CONSTANT * np.sqrt(n)
    if n % 2:
        return float(leading - np.sqrt(2.0) * SQRT2_MINUS_1)
    return float(leading + SQRT2_MINUS_1)


def parity_gap(n: int) -> float:
    """Razão exata em n par menos a média das razões em n-1 e n+1"""
    if n < 2 or n % 2:
        raise GameInputError(f"parity_gap exige n par >= 2 (recebido {n})")
    neighbours = (float(bi_ratio_exact(n - 1)) + float(bi_ratio_exact(n + 1))) / 2
    return float(bi_ratio_exact(n)) - neighbours
