"""
Modelos de Dados

Pattern: Data Classes para representar entidades do domínio
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Optional, List, Dict, Any, Iterable, Iterator, Sequence, Tuple, Union

from .errors import GameInputError

RationalLike = Union[Fraction, int, str]


def to_fraction(value: RationalLike) -> Fraction:
    """Converte inteiro, Fraction ou texto "p/q" em Fraction exata"""
    if isinstance(value, bool):
        raise GameInputError(f"Valor racional inválido: {value!r}")
    if isinstance(value, float):
        raise GameInputError(f"Use racional exato (\"p/q\") em vez de float: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise GameInputError(f"Valor racional inválido: {value!r}") from exc


def format_rational(value: Fraction) -> str:
    """Forma canônica "p/q" em termos mínimos ("p" quando inteiro)"""
    return str(Fraction(value))


@dataclass(frozen=True, order=True)
class Coalition:
    """
    Coalizão como máscara de bits

    O bit k-1 representa o jogador k; width é o número total de jogadores N.
    """
    mask: int
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise GameInputError(f"Largura de coalizão inválida: {self.width}")
        if self.mask < 0 or self.mask >> self.width:
            raise GameInputError(f"Máscara {self.mask} fora da largura {self.width}")

    @classmethod
    def of(cls, players: Iterable[int], width: int) -> "Coalition":
        """Cria coalizão a partir de rótulos de jogadores 1..width"""
        mask = 0
        for player in players:
            if not 1 <= player <= width:
                raise GameInputError(f"Jogador {player} fora do intervalo 1..{width}")
            mask |= 1 << (player - 1)
        return cls(mask, width)

    @classmethod
    def empty(cls, width: int) -> "Coalition":
        return cls(0, width)

    @classmethod
    def grand(cls, width: int) -> "Coalition":
        return cls((1 << width) - 1, width)

    @property
    def members(self) -> Tuple[int, ...]:
        """Jogadores da coalizão em ordem crescente"""
        return tuple(k + 1 for k in range(self.width) if self.mask >> k & 1)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, player: int) -> bool:
        return 1 <= player <= self.width and bool(self.mask >> (player - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def with_player(self, player: int) -> "Coalition":
        return Coalition(self.mask | self._bit(player), self.width)

    def without_player(self, player: int) -> "Coalition":
        return Coalition(self.mask & ~self._bit(player), self.width)

    def exchange(self, leaving: int, entering: int) -> "Coalition":
        """Troca um membro por um não membro"""
        if leaving not in self or entering in self:
            raise GameInputError(f"Troca inválida {leaving}->{entering} em {self.members}")
        return self.without_player(leaving).with_player(entering)

    def is_subset(self, other: "Coalition") -> bool:
        return self.width == other.width and self.mask & ~other.mask == 0

    def _bit(self, player: int) -> int:
        if not 1 <= player <= self.width:
            raise GameInputError(f"Jogador {player} fora do intervalo 1..{self.width}")
        return 1 << (player - 1)

    def to_list(self) -> List[int]:
        return list(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.members) + "}"


@dataclass(frozen=True)
class WeightRow:
    """Linha [q; w_1..w_N] de uma matriz amalgamada"""
    threshold: Fraction
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "threshold", to_fraction(self.threshold))
        object.__setattr__(self, "weights", tuple(to_fraction(w) for w in self.weights))
        if not self.weights:
            raise GameInputError("Linha de pesos vazia")
        negative = [k + 1 for k, w in enumerate(self.weights) if w < 0]
        if negative:
            raise GameInputError(f"Pesos negativos nos jogadores {negative}")

    @property
    def width(self) -> int:
        return len(self.weights)

    def weight_of(self, mask: int) -> Fraction:
        return sum((w for k, w in enumerate(self.weights) if mask >> k & 1), Fraction(0))

    def accepts(self, mask: int) -> bool:
        return self.weight_of(mask) >= self.threshold

    def scaled(self) -> Tuple[int, Tuple[int, ...]]:
        """Limiar e pesos multiplicados pelo mmc dos denominadores (inteiros exatos)"""
        factor = lcm(self.threshold.denominator, *(w.denominator for w in self.weights))
        return (
            int(self.threshold * factor),
            tuple(int(w * factor) for w in self.weights),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'q': format_rational(self.threshold),
            'w': [format_rational(w) for w in self.weights],
        }

    def __str__(self) -> str:
        return f"[{format_rational(self.threshold)}; " + ",".join(format_rational(w) for w in self.weights) + "]"


@dataclass(frozen=True)
class AmalgamatedMatrix:
    """Matriz amalgamada: interseção de m jogos ponderados de mesma largura"""
    rows: Tuple[WeightRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise GameInputError("Matriz amalgamada precisa de ao menos uma linha")
        widths = {row.width for row in self.rows}
        if len(widths) != 1:
            raise GameInputError(f"Linhas com larguras diferentes: {sorted(widths)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Tuple[RationalLike, Sequence[RationalLike]]]) -> "AmalgamatedMatrix":
        """Cria matriz a partir de pares (q, [w_1..w_N])"""
        return cls(tuple(WeightRow(q, tuple(w)) for q, w in rows))

    @property
    def width(self) -> int:
        return self.rows[0].width

    @property
    def m(self) -> int:
        return len(self.rows)

    def accepts(self, mask: int) -> bool:
        return all(row.accepts(mask) for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'type': 'weighted',
            'players': self.width,
            'rows': [row.to_dict() for row in self.rows],
        }

    def __str__(self) -> str:
        return " / ".join(str(row) for row in self.rows)


@dataclass(frozen=True)
class GameComparison:
    """Resultado de games_equal; witness é a primeira coalizão (ordem de máscara) em desacordo"""
    equal: bool
    witness: Optional[Coalition] = None
    left_wins: Optional[bool] = None
    right_wins: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.equal

    def to_dict(self) -> Dict[str, Any]:
        return {
            'equal': self.equal,
            'witness': self.witness.to_list() if self.witness is not None else None,
            'left_wins': self.left_wins,
            'right_wins': self.right_wins,
        }


class ComparisonResult(str, Enum):
    """Resultado de comparação entre dois jogadores"""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"

    @classmethod
    def from_relations(cls, i_below_j: bool, j_below_i: bool) -> "ComparisonResult":
        if i_below_j and j_below_i:
            return cls.EQUAL
        if i_below_j:
            return cls.LESS
        if j_below_i:
            return cls.GREATER
        return cls.INCOMPARABLE


@dataclass(frozen=True)
class CrucialVector:
    """Contagens por tamanho k = 1..N de coalizões vencedoras em que o jogador é crucial"""
    player: int
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        """Igual à contagem de swings de Banzhaf do jogador"""
        return sum(self.counts)

    def count(self, size: int) -> int:
        return self.counts[size - 1]

    def is_dominated_by(self, other: "CrucialVector") -> bool:
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def to_dict(self) -> Dict[str, Any]:
        return {'player': self.player, 'counts': list(self.counts), 'total': self.total}


@dataclass(frozen=True)
class SwapWitness:
    """
    Contraexemplo de robustez a trocas

    first e second vencem; leaving ∈ first∖second, entering ∈ second∖first,
    e as duas coalizões após a troca perdem.
    """
    first: Coalition
    second: Coalition
    leaving: int
    entering: int

    def exchanged(self) -> Tuple[Coalition, Coalition]:
        return (
            self.first.exchange(self.leaving, self.entering),
            self.second.exchange(self.entering, self.leaving),
        )

    def to_dict(self) -> Dict[str, Any]:
        after_first, after_second = self.exchanged()
        return {
            'first': self.first.to_list(),
            'second': self.second.to_list(),
            'leaving': self.leaving,
            'entering': self.entering,
            'first_after': after_first.to_list(),
            'second_after': after_second.to_list(),
        }


@dataclass(frozen=True)
class SwingCounts:
    """Contagens b(k) de Banzhaf em precisão arbitrária, jogadores 1..N"""
    counts: Tuple[int, ...]

    def __getitem__(self, player: int) -> int:
        return self.counts[player - 1]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def dummies(self) -> Tuple[int, ...]:
        return tuple(k + 1 for k, b in enumerate(self.counts) if b == 0)

    def to_dict(self) -> Dict[str, Any]:
        return {'b': [str(b) for b in self.counts], 'total': str(self.total)}


@dataclass(frozen=True)
class IndexVector:
    """Índice de poder exato por jogador (soma 1)"""
    kind: str
    values: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __getitem__(self, player: int) -> Fraction:
        return self.values[player - 1]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def decimals(self, digits: int) -> List[str]:
        return [f"{float(v):.{digits}g}" for v in self.values]

    def to_dict(self, digits: int = 4) -> Dict[str, Any]:
        return {
            'index': self.kind,
            'exact': [format_rational(v) for v in self.values],
            'decimal': self.decimals(digits),
        }
