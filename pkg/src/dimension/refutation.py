"""
Refutação de Realizações Simétricas com m Linhas

Cada perfil perdedor maximal precisa ser rejeitado por alguma linha, e
toda linha precisa aceitar todos os perfis vencedores minimais. Para cada
atribuição perfil -> linha, cada linha é um LP exato em (q, e, f, g);
uma atribuição cai quando alguma linha é inviável.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..core.config import Config
from ..core.errors import CapacityError, GameInputError
from ..core.models import format_rational
from .lp import FeasibilityResult, solve_feasibility
from .profiles import Profile, ProfileTable, SymmetricRealization, SymmetricRow

logger = logging.getLogger(__name__)


def separation_system(table: ProfileTable, must_lose: Iterable[Profile]):
    """
    Sistema Ax <= b nas variáveis x = (q, e, f, g) >= 0

    Vencedor minimal: q - r e - s f - γ g <= 0.
    Perfil a rejeitar: r e + s f + γ g - q <= -1 (folga normalizada em 1).
    """
    A: List[List[Fraction]] = []
    b: List[Fraction] = []
    for p in table.minimal_winning:
        A.append([Fraction(1), Fraction(-p.r), Fraction(-p.s), Fraction(-p.gamma)])
        b.append(Fraction(0))
    for p in sorted(must_lose):
        A.append([Fraction(-1), Fraction(p.r), Fraction(p.s), Fraction(p.gamma)])
        b.append(Fraction(-1))
    return A, b


@lru_cache(maxsize=4096)
def _separate(table: ProfileTable, must_lose: FrozenSet[Profile]) -> FeasibilityResult:
    A, b = separation_system(table, must_lose)
    return solve_feasibility(A, b)


def separate(table: ProfileTable, must_lose: Iterable[Profile]) -> FeasibilityResult:
    """LP de uma linha com ponto viável ou certificado de Farkas"""
    must_lose = frozenset(Profile(*p) for p in must_lose)
    winners = must_lose & table.winning
    if winners:
        raise GameInputError(f"Perfis vencedores não podem ser rejeitados: {sorted(winners)}")
    return _separate(table, must_lose)


def separable(table: ProfileTable, must_lose: Iterable[Profile]) -> Optional[SymmetricRow]:
    """
    Linha (q; e, f, g) que aceita todo vencedor e rejeita must_lose

    Args:
        table: tabela de perfis do jogo
        must_lose: perfis perdedores que a linha deve rejeitar

    Returns:
        SymmetricRow conferida, ou None se nenhuma linha serve
    """
    result = separate(table, must_lose)
    if not result.feasible:
        return None
    return SymmetricRow(*result.point)


@dataclass(frozen=True)
class RefutationCase:
    """Uma atribuição perfil -> linha e o motivo da queda"""
    index: int
    assignment: Tuple[int, ...]
    infeasible_row: Optional[int]
    certificate: Optional[Tuple[Fraction, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'case': self.index,
            'assignment': list(self.assignment),
            'infeasible_row': self.infeasible_row,
            'certificate': [format_rational(v) for v in self.certificate] if self.certificate else None,
        }


@dataclass
class RefutationTranscript:
    """Registro exaustivo da busca por uma realização simétrica com m linhas"""
    n: int
    m: int
    maximal_losing: Tuple[Profile, ...]
    cases: List[RefutationCase] = field(default_factory=list)
    realization: Optional[SymmetricRealization] = None

    @property
    def refuted(self) -> bool:
        return self.realization is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'm': self.m,
            'refuted': self.refuted,
            'maximal_losing': [list(p) for p in self.maximal_losing],
            'cases_checked': len(self.cases),
            'cases': [case.to_dict() for case in self.cases],
            'realization': self.realization.to_dict() if self.realization else None,
        }


def symmetric_refutation(table: ProfileTable, m: int, budget: Optional[int] = None) -> RefutationTranscript:
    """
    Testa todas as m^L atribuições dos L perfis perdedores maximais às linhas

    Para na primeira atribuição em que todas as linhas são viáveis.

    Args:
        table: tabela de perfis de um jogo simétrico nas câmaras
        m: número de linhas
        budget: máximo de atribuições (None = Config.LP_BUDGET)

    Returns:
        RefutationTranscript; refuted=True quando nenhuma atribuição serve
    """
    if m < 1:
        raise GameInputError(f"m deve ser >= 1 (recebido {m})")
    limit = Config.LP_BUDGET if budget is None else budget
    losing = table.maximal_losing
    required = m ** len(losing)
    if required > limit:
        raise CapacityError(
            f"{required} atribuições ({m}^{len(losing)}) excedem o orçamento de {limit} "
            f"(ajuste QUORUMLAB_LP_BUDGET)",
            required=required,
            limit=limit,
        )

    transcript = RefutationTranscript(n=table.n, m=m, maximal_losing=losing)
    for index, assignment in enumerate(product(range(m), repeat=len(losing))):
        rows = []
        failed = None
        for row in range(m):
            chosen = [p for p, target in zip(losing, assignment) if target == row]
            result = separate(table, chosen)
            if not result.feasible:
                failed = RefutationCase(index, assignment, row, result.certificate)
                break
            rows.append(SymmetricRow(*result.point))

        if failed is not None:
            transcript.cases.append(failed)
            continue

        transcript.cases.append(RefutationCase(index, assignment, None))
        realization = SymmetricRealization(tuple(rows))
        if not realization.realizes(table):
            raise ArithmeticError(f"Realização simétrica do caso {index} não confere com a tabela")
        transcript.realization = realization
        logger.info("n=%d m=%d: realização simétrica no caso %d", table.n, m, index)
        break

    logger.info("n=%d m=%d: %d casos, refutado=%s", table.n, m, len(transcript.cases), transcript.refuted)
    return transcript


def refute_symmetric_realization(table: ProfileTable, m: int, budget: Optional[int] = None) -> bool:
    """True quando não existe realização simétrica com m linhas"""
    return symmetric_refutation(table, m, budget).refuted
