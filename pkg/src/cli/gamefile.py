"""
Leitura e Escrita de Jogos em JSON

Documentos validados pelos schemas pydantic e convertidos nas classes de
jogo: explicit -> ExplicitGame, weighted -> WeightedGame, legco -> LegcoGame.
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from ..core.errors import GameInputError
from ..core.models import AmalgamatedMatrix
from ..core.schemas import ExplicitGameSchema, LegcoGameSchema, WeightedGameSchema, parse_game_document
from ..games.base import SimpleGame
from ..games.explicit import ExplicitGame
from ..games.weighted import WeightedGame
from ..legco.game import legco_game
from .output import canonical_json


def read_document(path: Union[str, Path]) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise GameInputError(f"JSON inválido em {path}: {e}") from e


def matrix_from_schema(schema: WeightedGameSchema) -> AmalgamatedMatrix:
    matrix = AmalgamatedMatrix.from_rows([(row.q, row.w) for row in schema.rows])
    if matrix.width != schema.players:
        raise GameInputError(f"players={schema.players} mas as linhas têm {matrix.width} pesos")
    return matrix


def game_from_document(data: Dict[str, Any], name: str = None) -> SimpleGame:
    """Constrói o jogo descrito por um documento JSON já decodificado"""
    schema = parse_game_document(data)
    if isinstance(schema, LegcoGameSchema):
        return legco_game(schema.n, schema.scenario)
    if isinstance(schema, WeightedGameSchema):
        return WeightedGame(matrix_from_schema(schema), name=name)
    if isinstance(schema, ExplicitGameSchema):
        return ExplicitGame(schema.players, schema.winning, name=name or "explicit")
    raise GameInputError(f"Documento sem conversão: {data.get('type')!r}")


def load_game(path: Union[str, Path]) -> SimpleGame:
    return game_from_document(read_document(path), name=Path(path).stem)


def load_matrix(path: Union[str, Path]) -> AmalgamatedMatrix:
    """Matriz candidata: documento do tipo weighted"""
    schema = parse_game_document(read_document(path))
    if not isinstance(schema, WeightedGameSchema):
        raise GameInputError(f"{path}: candidata precisa ser um documento 'weighted'")
    return matrix_from_schema(schema)


def dump_document(document: Dict[str, Any]) -> str:
    return canonical_json(document)
