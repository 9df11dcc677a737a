"""
Catálogo de Coalizões de Referência

Coalizões nomeadas usadas nos argumentos de robustez a trocas, de
dimensão e da cadeia de trocas para n ímpar, parametrizadas por n
(h = ⌊n/2⌋, c = ⌈n/2⌉, k = (n-1)/2). Cada entrada guarda o resultado
afirmado pelo argumento; o verificador compara com a avaliação real.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from ..core.errors import GameInputError
from ..core.models import Coalition
from .game import LegcoGame, legco_game


def _players(n: int, *blocks) -> Coalition:
    """Une blocos (first, last) e jogadores avulsos em uma coalizão"""
    members = set()
    for block in blocks:
        if isinstance(block, tuple):
            first, last = block
            members.update(range(first, last + 1))
        else:
            members.add(block)
    return Coalition.of(sorted(members), 2 * n + 1)


@dataclass(frozen=True)
class Landmark:
    """Entrada do catálogo"""
    name: str
    build: Callable[[int], Coalition]
    applies: Callable[[int], bool]
    asserted_win: Optional[bool]
    note: str = ""
    # o texto afirma vitória mas a definição dá derrota
    known_discrepancy: bool = False


def _swap_source(n):
    h = n // 2
    return _players(n, (1, h + 1), (n + 1, n + h + 1))


def _swap_partner(n):
    h = n // 2
    return _players(n, (1, h), h + 2, (n + 1, n + h), n + h + 2)


def swap_pair(n: int):
    """Jogadores trocados: ⌊n/2⌋+1 (sai da origem) e n+⌊n/2⌋+2 (sai do parceiro)"""
    h = n // 2
    return h + 1, n + h + 2


def _k(n):
    return (n - 1) // 2


_CATALOGUE = [
    Landmark("swap_source", _swap_source, lambda n: n >= 3, True,
             "maioria mínima nas duas câmaras"),
    Landmark("swap_partner", _swap_partner, lambda n: n >= 3, True,
             "maioria mínima deslocada em uma posição"),
    Landmark("swap_source_exchanged",
             lambda n: _swap_source(n).exchange(*swap_pair(n)), lambda n: n >= 3, False,
             "origem após a troca"),
    Landmark("swap_partner_exchanged",
             lambda n: _swap_partner(n).exchange(swap_pair(n)[1], swap_pair(n)[0]), lambda n: n >= 3, False,
             "parceiro após a troca"),
    Landmark("chamber_block", lambda n: _players(n, (n + 1, 2 * n)), lambda n: n >= 1, False,
             "U = câmara funcional inteira"),
    Landmark("chamber_block_with_first", lambda n: _players(n, 1, (n + 1, 2 * n)), lambda n: n >= 3, False,
             "U com o jogador 1"),
    Landmark("chamber_block_with_government", lambda n: _players(n, (n + 1, 2 * n), 2 * n + 1),
             lambda n: n >= 3, True,
             "U com o governo tem só n membros ordinários", known_discrepancy=True),
    Landmark("government_edge_with_government", lambda n: _players(n, 2, (n + 1, 2 * n), 2 * n + 1),
             lambda n: n >= 4, True, "{2} ∪ U com o governo: n+1 ordinários"),
    Landmark("government_edge_with_first", lambda n: _players(n, 1, 2, (n + 1, 2 * n)),
             lambda n: n >= 4, False, "{2} ∪ U com o jogador 1: só dois geo"),
    Landmark("crucial_witness", lambda n: _players(n, (1, (n + 1) // 2), (n + 1, (3 * n + 1) // 2)),
             lambda n: n % 2 == 1, True, "tamanho n+1 com o jogador 1 crucial"),
    Landmark("majority_pair", _swap_source, lambda n: n >= 3, True,
             "⌊n/2⌋+1 em cada câmara"),
    Landmark("geo_full_func_short", lambda n: _players(n, (1, n), (n + 1, n + n // 2)),
             lambda n: n >= 3, False, "geo completa, func com ⌊n/2⌋"),
    Landmark("government_ceil_block",
             lambda n: _players(n, (1, (n + 1) // 2 + 1), (n + 1, n + n // 2), 2 * n + 1),
             lambda n: n >= 3, True, "⌈n/2⌉+1 geo, ⌊n/2⌋ func e governo"),
    Landmark("government_func_block", lambda n: _players(n, 1, (n + 1, 2 * n), 2 * n + 1),
             lambda n: n >= 1, True, "jogador 1, câmara func inteira e governo"),
    Landmark("government_short_block",
             lambda n: _players(n, 1, 2, (n + 1, n + n // 2 + 1), 2 * n + 1),
             lambda n: n >= 5, False, "⌊n/2⌋+3 < n+1 ordinários com o governo"),
]

_ODD = lambda n: n % 2 == 1 and n >= 5  # noqa: E731

_CATALOGUE += [
    Landmark("chain_win_0", lambda n: _players(n, (1, _k(n) + 1), (n + 1, n + _k(n) + 1)), _ODD, True),
    Landmark("chain_win_1", lambda n: _players(n, (1, _k(n)), _k(n) + 2, (n + 1, n + _k(n)), n + _k(n) + 2),
             _ODD, True),
    Landmark("chain_win_2",
             lambda n: _players(n, (1, _k(n) - 1), _k(n) + 1, _k(n) + 2, (n + 1, n + _k(n)), n + _k(n) + 2),
             _ODD, True),
    Landmark("chain_win_3", lambda n: _players(n, (1, _k(n)), _k(n) + 2, (n + 1, n + _k(n)), n + _k(n) + 3),
             _ODD, True),
    Landmark("chain_win_4",
             lambda n: _players(n, (1, _k(n)), _k(n) + 2, _k(n) + 3, (n + 1, n + _k(n)), 2 * n + 1),
             _ODD, True),
    Landmark("chain_win_5", lambda n: _players(n, (1, _k(n) - 1), (n + 1, n + _k(n) + 2), 2 * n + 1),
             _ODD, True, "só n membros ordinários com o governo", known_discrepancy=True),
    Landmark("chain_loss_1", lambda n: _players(n, (1, _k(n)), (n + 1, n + _k(n) + 2)), _ODD, False),
    Landmark("chain_loss_2", lambda n: _players(n, (1, _k(n) + 2), (n + 1, n + _k(n))), _ODD, False),
    Landmark("chain_loss_3", lambda n: _players(n, (1, _k(n) - 1), _k(n) + 1, (n + 1, n + _k(n) + 2)),
             _ODD, False),
    Landmark("chain_loss_4", lambda n: _players(n, (1, _k(n)), (n + 1, n + _k(n) + 1), n + _k(n) + 3),
             _ODD, False),
    Landmark("chain_loss_5", lambda n: _players(n, (1, _k(n) + 3), (n + 1, n + _k(n))), _ODD, False),
    Landmark("chain_loss_6", lambda n: _players(n, (1, _k(n)), (n + 1, n + _k(n) + 1), 2 * n + 1),
             _ODD, False),
    Landmark("chain_loss_7", lambda n: _players(n, (1, _k(n) - 1), _k(n) + 1, (n + 1, n + _k(n) + 2)),
             _ODD, False, "mesma coalizão que chain_loss_3"),
]

LANDMARKS: Dict[str, Landmark] = {entry.name: entry for entry in _CATALOGUE}
LANDMARK_NAMES = tuple(LANDMARKS)

# grafias da notação usual
LANDMARK_ALIASES: Dict[str, str] = {
    "S_swap": "swap_source",
    "S'_swap": "swap_partner",
    "U": "chamber_block",
    **{f"L{k}": f"chain_loss_{k}" for k in range(1, 8)},
}


def landmark_coalition(n: int, name: str) -> Coalition:
    """
    Coalizão de referência do catálogo

    Args:
        n: membros por câmara
        name: nome do catálogo (ver LANDMARK_NAMES) ou apelido de LANDMARK_ALIASES

    Returns:
        Coalition de largura 2n+1
    """
    entry = LANDMARKS.get(LANDMARK_ALIASES.get(name, name))
    if entry is None:
        raise GameInputError(f"Coalizão desconhecida: {name!r}")
    if n < 1 or not entry.applies(n):
        raise GameInputError(f"Coalizão {name!r} não está definida para n={n}")
    return entry.build(n)


@dataclass(frozen=True)
class LandmarkFact:
    """Resultado afirmado vs avaliado de uma coalizão de referência"""
    name: str
    coalition: Coalition
    asserted_win: Optional[bool]
    observed_win: bool
    known_discrepancy: bool
    note: str

    @property
    def holds(self) -> bool:
        return self.asserted_win is None or self.asserted_win == self.observed_win

    @property
    def is_failure(self) -> bool:
        return not self.holds and not self.known_discrepancy

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'coalition': self.coalition.to_list(),
            'asserted_win': self.asserted_win,
            'observed_win': self.observed_win,
            'holds': self.holds,
            'known_discrepancy': self.known_discrepancy,
            'note': self.note,
        }


def landmark_facts(n: int, game: LegcoGame = None, prefix: str = "") -> List[LandmarkFact]:
    """Avalia todas as coalizões do catálogo definidas para n (filtro opcional por prefixo)"""
    game = game or legco_game(n)
    facts = []
    for entry in _CATALOGUE:
        if not entry.name.startswith(prefix) or not entry.applies(n):
            continue
        coalition = entry.build(n)
        facts.append(LandmarkFact(
            name=entry.name,
            coalition=coalition,
            asserted_win=entry.asserted_win,
            observed_win=game.evaluate(coalition),
            known_discrepancy=entry.known_discrepancy,
            note=entry.note,
        ))
    return facts
