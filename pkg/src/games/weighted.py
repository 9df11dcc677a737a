"""
Jogo Ponderado - m-majoritário dado por matriz amalgamada
"""

from typing import Any, Dict

import numpy as np

from ..core.errors import GameInputError
from ..core.models import AmalgamatedMatrix
from .base import SimpleGame

_INT64_SAFE = 1 << 62


class WeightedGame(SimpleGame):
    """
    Interseção das linhas [q^i; w^i_1..w^i_N]

    S vence sse Σ_{j∈S} w^i_j >= q^i para toda linha i. A tabela vetorizada
    usa pesos inteiros escalados pelo mmc dos denominadores.
    """

    def __init__(self, matrix: AmalgamatedMatrix, name: str = None):
        super().__init__(matrix.width, name or f"weighted[{matrix.m}]")
        if matrix.accepts(0):
            raise GameInputError(f"∅ vence em {matrix}: nenhuma linha tem limiar positivo")
        grand = (1 << matrix.width) - 1
        rejecting = [k + 1 for k, row in enumerate(matrix.rows) if not row.accepts(grand)]
        if rejecting:
            raise GameInputError(f"Coalizão total perde nas linhas {rejecting} de {matrix} (limiar acima da soma dos pesos)")
        self.matrix = matrix

    def evaluate_mask(self, mask: int) -> bool:
        return self.matrix.accepts(mask)

    def _build_table(self, masks: np.ndarray) -> np.ndarray:
        table = np.ones(masks.size, dtype=bool)
        for row in self.matrix.rows:
            threshold, weights = row.scaled()
            dtype = np.int64 if sum(weights) < _INT64_SAFE and threshold < _INT64_SAFE else object
            totals = np.zeros(masks.size, dtype=dtype)
            for k, weight in enumerate(weights):
                if weight:
                    totals += ((masks >> k) & 1).astype(dtype) * weight
            table &= np.asarray(totals >= threshold, dtype=bool)
        return table

    def to_document(self) -> Dict[str, Any]:
        return self.matrix.to_dict()
