"""
Perfis (r, s, γ) e Simetrização

Em um jogo simétrico dentro de cada câmara, a coalizão só importa pelo
perfil: membros geo r, membros func s e presença do governo γ. As buscas
de dimensão rodam nesse espaço.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import numpy as np

from ..core.errors import GameInputError
from ..core.models import AmalgamatedMatrix, Coalition, WeightRow, format_rational
from ..games.base import SimpleGame
from ..games.enumeration import all_masks, popcount
from ..legco.game import PlayerCategories, Scenario, legco_game

logger = logging.getLogger(__name__)


class Profile(NamedTuple):
    r: int
    s: int
    gamma: int

    def dominated_by(self, other: "Profile") -> bool:
        return self.r <= other.r and self.s <= other.s and self.gamma <= other.gamma

    def __str__(self) -> str:
        return f"({self.r},{self.s},{self.gamma})"


def _profile_order(profile: Profile):
    return (profile.gamma, -profile.r, profile.s)


@dataclass(frozen=True)
class ProfileTable:
    """Classificação de todos os perfis e suas fronteiras"""
    n: int
    winning: FrozenSet[Profile]
    minimal_winning: Tuple[Profile, ...]
    maximal_losing: Tuple[Profile, ...]

    def wins(self, profile: Profile) -> bool:
        return Profile(*profile) in self.winning

    @property
    def profiles(self) -> List[Profile]:
        size = self.n + 1
        return [Profile(r, s, g) for g in (0, 1) for r in range(size) for s in range(size)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'winning_count': len(self.winning),
            'minimal_winning': [list(p) for p in self.minimal_winning],
            'maximal_losing': [list(p) for p in self.maximal_losing],
        }


def _neighbours(profile: Profile, n: int, step: int) -> Iterable[Profile]:
    r, s, g = profile
    for candidate in ((r + step, s, g), (r, s + step, g), (r, s, g + step)):
        cr, cs, cg = candidate
        if 0 <= cr <= n and 0 <= cs <= n and 0 <= cg <= 1:
            yield Profile(cr, cs, cg)


def classify_profiles(game: SimpleGame, categories: PlayerCategories) -> ProfileTable:
    """
    Classifica os 2(n+1)^2 perfis pelo representante de cada um

    Válido para jogos simétricos dentro de cada câmara (ver check_chamber_symmetry).
    """
    if game.players != categories.players:
        raise GameInputError(f"{game} não tem 2n+1 = {categories.players} jogadores")
    n = categories.n
    size = n + 1
    winning = frozenset(
        Profile(r, s, g)
        for g in (0, 1) for r in range(size) for s in range(size)
        if game.evaluate_mask(categories.representative(r, s, g))
    )
    everything = [Profile(r, s, g) for g in (0, 1) for r in range(size) for s in range(size)]
    minimal = [p for p in everything if p in winning and all(q not in winning for q in _neighbours(p, n, -1))]
    maximal = [p for p in everything if p not in winning and all(q in winning for q in _neighbours(p, n, 1))]
    return ProfileTable(
        n=n,
        winning=winning,
        minimal_winning=tuple(sorted(minimal, key=_profile_order)),
        maximal_losing=tuple(sorted(maximal, key=_profile_order)),
    )


def profile_table(n: int, scenario=Scenario.STATUS_QUO) -> ProfileTable:
    """
    Tabela de perfis de Legco(n, scenario)

    Args:
        n: membros por câmara
        scenario: cenário de regras

    Returns:
        ProfileTable com vencedores, vencedores minimais e perdedores maximais
    """
    game = legco_game(n, scenario)
    return classify_profiles(game, game.categories)


def check_chamber_symmetry(game: SimpleGame, categories: PlayerCategories,
                           max_players=None) -> Optional[Coalition]:
    """
    Confere que o resultado só depende do perfil

    Returns:
        None se o jogo é simétrico, senão a primeira coalizão que diverge do
        representante do seu perfil
    """
    if game.players != categories.players:
        raise GameInputError(f"{game} não tem 2n+1 = {categories.players} jogadores")
    table = game.win_table(max_players)
    masks = all_masks(game.players)
    n = categories.n
    r = popcount(masks & categories.geo_mask)
    s = popcount(masks & categories.func_mask)
    gamma = (masks >> (2 * n)) & 1
    representatives = np.array([
        [[categories.representative(ri, si, gi) for gi in (0, 1)] for si in range(n + 1)]
        for ri in range(n + 1)
    ], dtype=np.int64)
    mismatch = np.flatnonzero(table != table[representatives[r, s, gamma]])
    if mismatch.size == 0:
        return None
    return Coalition(int(mismatch[0]), game.players)


def symmetrize(matrix: AmalgamatedMatrix, categories: PlayerCategories) -> AmalgamatedMatrix:
    """
    Substitui os pesos geo e func de cada linha pela média da câmara

    Limiar e peso do governo ficam inalterados.
    """
    if matrix.width != categories.players:
        raise GameInputError(f"Matriz de largura {matrix.width}, esperado {categories.players}")
    n = categories.n
    rows = []
    for row in matrix.rows:
        geo = sum(row.weights[:n], Fraction(0)) / n
        func = sum(row.weights[n:2 * n], Fraction(0)) / n
        rows.append(WeightRow(row.threshold, (geo,) * n + (func,) * n + (row.weights[2 * n],)))
    return AmalgamatedMatrix(tuple(rows))


@dataclass(frozen=True)
class SymmetricRow:
    """Linha (q; e, f, g) no espaço de perfis"""
    q: Fraction
    e: Fraction
    f: Fraction
    g: Fraction

    def weight(self, profile: Profile) -> Fraction:
        return profile.r * self.e + profile.s * self.f + profile.gamma * self.g

    def accepts(self, profile: Profile) -> bool:
        return self.weight(Profile(*profile)) >= self.q

    def to_weight_row(self, n: int) -> WeightRow:
        return WeightRow(self.q, (self.e,) * n + (self.f,) * n + (self.g,))

    def to_dict(self) -> Dict[str, Any]:
        return {k: format_rational(getattr(self, k)) for k in ('q', 'e', 'f', 'g')}


@dataclass(frozen=True)
class SymmetricRealization:
    rows: Tuple[SymmetricRow, ...]

    def accepts(self, profile: Profile) -> bool:
        return all(row.accepts(profile) for row in self.rows)

    def to_matrix(self, n: int) -> AmalgamatedMatrix:
        return AmalgamatedMatrix(tuple(row.to_weight_row(n) for row in self.rows))

    def realizes(self, table: ProfileTable) -> bool:
        return all(self.accepts(p) == (p in table.winning) for p in table.profiles)

    def to_dict(self) -> Dict[str, Any]:
        return {'rows': [row.to_dict() for row in self.rows]}


def symmetric_rows(matrix: AmalgamatedMatrix, categories: PlayerCategories) -> SymmetricRealization:
    """Lê uma matriz já simétrica como linhas (q; e, f, g)"""
    n = categories.n
    rows = []
    for row in symmetrize(matrix, categories).rows:
        if row.weights != tuple(matrix.rows[len(rows)].weights):
            raise GameInputError("Matriz não é simétrica dentro das câmaras; use symmetrize")
        rows.append(SymmetricRow(row.threshold, row.weights[0], row.weights[n], row.weights[2 * n]))
    return SymmetricRealization(tuple(rows))
