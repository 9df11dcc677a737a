"""
LP de Viabilidade em Aritmética Racional Exata

Tableau compacto (dicionário) com regra de Bland para Ax <= b, x >= 0.
Fase 1 com variável artificial x0; certificado de Farkas para os casos
inviáveis. Todo ponto ou certificado devolvido é conferido por substituição.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


class SimplexTableau:
    """
    Dicionário x_B = b - A x_N, objetivo z = z0 + c x_N (maximização)

    Rótulos de variáveis são inteiros; a regra de Bland usa o menor rótulo.
    """

    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                 nb_vars: List[int], b_vars: List[int]):
        self.A = [list(row) for row in A]
        self.b = list(b)
        self.m = len(self.A)
        self.n = len(nb_vars)
        self.c = [Fraction(0)] * self.n
        self.z = Fraction(0)
        self.nb_vars = list(nb_vars)
        self.b_vars = list(b_vars)

    def pivot(self, i: int, j: int):
        piv = self.A[i][j]
        delta = self.c[j] / piv
        self.z += delta * self.b[i]
        for col in range(self.n):
            self.c[col] -= delta * self.A[i][col]
        self.c[j] = -delta
        for col in range(self.n):
            self.A[i][col] = 1 / piv if col == j else self.A[i][col] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.A[k][j]
            if f == 0:
                continue
            for col in range(self.n):
                self.A[k][col] = -f / piv if col == j else self.A[k][col] - f * self.A[i][col]
            self.b[k] -= f * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]

    def bland_primal_step(self) -> str:
        try:
            _, j = min((self.nb_vars[col], col) for col in range(self.n) if self.c[col] > 0)
        except ValueError:
            return 'optimal'
        try:
            _, _, i = min((self.b[row] / self.A[row][j], self.b_vars[row], row)
                          for row in range(self.m) if self.A[row][j] > 0)
        except ValueError:
            return 'unbounded'
        self.pivot(i, j)
        return 'go_on'

    def bland_primal(self) -> str:
        while True:
            status = self.bland_primal_step()
            if status != 'go_on':
                return status

    def value_of(self, var: int) -> Fraction:
        if var in self.b_vars:
            return self.b[self.b_vars.index(var)]
        return Fraction(0)


def _as_fractions(A, b) -> Tuple[List[List[Fraction]], List[Fraction]]:
    return [[Fraction(v) for v in row] for row in A], [Fraction(v) for v in b]


def satisfies(A, b, x) -> bool:
    """Ax <= b e x >= 0 por substituição exata"""
    if any(v < 0 for v in x):
        return False
    return all(sum((a * v for a, v in zip(row, x)), Fraction(0)) <= rhs for row, rhs in zip(A, b))


def find_feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """
    Ponto x >= 0 com Ax <= b, ou None se o sistema é inviável

    Args:
        A: matriz m x n de racionais
        b: lado direito (pode ter entradas negativas)

    Returns:
        Tupla de Fractions conferida por substituição, ou None
    """
    A, b = _as_fractions(A, b)
    m = len(A)
    n = len(A[0]) if A else 0
    if m == 0 or min(b) >= 0:
        return tuple(Fraction(0) for _ in range(n))

    # x0 artificial: rótulo n; folgas: n+1..n+m
    artificial = n
    tableau = SimplexTableau(
        [row + [Fraction(-1)] for row in A],
        b,
        nb_vars=list(range(n + 1)),
        b_vars=list(range(n + 1, n + 1 + m)),
    )
    tableau.c[artificial] = Fraction(-1)
    worst = min(range(m), key=lambda row: (b[row], row))
    tableau.pivot(worst, artificial)

    status = tableau.bland_primal()
    if status != 'optimal':
        raise ArithmeticError(f"Fase 1 terminou com status inesperado: {status}")
    if tableau.z < 0:
        return None

    point = tuple(tableau.value_of(var) for var in range(n))
    if not satisfies(A, b, point):
        raise ArithmeticError("Ponto da fase 1 não satisfaz as restrições")
    return point


def farkas_certificate(A: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """
    y >= 0 com yA >= 0 e yb <= -1, que prova a inviabilidade de Ax <= b, x >= 0

    Returns:
        Certificado conferido, ou None se o sistema original é viável
    """
    A, b = _as_fractions(A, b)
    m = len(A)
    n = len(A[0]) if A else 0
    # -A^T y <= 0 ; b^T y <= -1
    dual_A = [[-A[row][col] for row in range(m)] for col in range(n)] + [list(b)]
    dual_b = [Fraction(0)] * n + [Fraction(-1)]
    y = find_feasible_point(dual_A, dual_b)
    if y is None:
        return None
    if not is_farkas_certificate(A, b, y):
        raise ArithmeticError("Certificado de Farkas inválido")
    return y


def is_farkas_certificate(A, b, y) -> bool:
    A, b = _as_fractions(A, b)
    if any(v < 0 for v in y):
        return False
    n = len(A[0]) if A else 0
    combined = [sum((y[row] * A[row][col] for row in range(len(A))), Fraction(0)) for col in range(n)]
    return all(v >= 0 for v in combined) and sum((yi * bi for yi, bi in zip(y, b)), Fraction(0)) < 0


@dataclass(frozen=True)
class FeasibilityResult:
    """Resultado com ponto viável ou certificado de inviabilidade"""
    point: Optional[Vector] = None
    certificate: Optional[Vector] = None

    @property
    def feasible(self) -> bool:
        return self.point is not None


def solve_feasibility(A: Sequence[Sequence], b: Sequence) -> FeasibilityResult:
    point = find_feasible_point(A, b)
    if point is not None:
        return FeasibilityResult(point=point)
    certificate = farkas_certificate(A, b)
    if certificate is None:
        raise ArithmeticError("Sistema inviável sem certificado de Farkas")
    logger.debug("Sistema %dx%d inviável", len(A), len(A[0]) if A else 0)
    return FeasibilityResult(certificate=certificate)
