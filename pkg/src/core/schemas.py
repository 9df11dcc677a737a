"""
Schemas JSON dos Jogos

Validação do formato canônico de jogos com pydantic:
explicit | weighted | legco.
"""

from typing import List, Literal, Union

from pydantic import BaseModel, Field, ValidationError

from .errors import GameInputError

RationalText = Union[int, str]


class ExplicitGameSchema(BaseModel):
    type: Literal["explicit"]
    players: int = Field(ge=1)
    winning: List[List[int]]


class WeightRowSchema(BaseModel):
    q: RationalText
    w: List[RationalText] = Field(min_length=1)


class WeightedGameSchema(BaseModel):
    type: Literal["weighted"]
    players: int = Field(ge=1)
    rows: List[WeightRowSchema] = Field(min_length=1)


class LegcoGameSchema(BaseModel):
    type: Literal["legco"]
    n: int = Field(ge=1)
    scenario: Literal["status_quo", "bicameral_only", "unicameral"] = "status_quo"


GAME_SCHEMAS = {
    'explicit': ExplicitGameSchema,
    'weighted': WeightedGameSchema,
    'legco': LegcoGameSchema,
}


def parse_game_document(data) -> Union[ExplicitGameSchema, WeightedGameSchema, LegcoGameSchema]:
    """
    Valida documento JSON de jogo

    Args:
        data: dicionário já decodificado

    Returns:
        Schema pydantic correspondente ao campo "type"
    """
    if not isinstance(data, dict):
        raise GameInputError("Documento de jogo deve ser um objeto JSON")
    kind = data.get("type")
    schema = GAME_SCHEMAS.get(kind)
    if schema is None:
        raise GameInputError(f"Tipo de jogo desconhecido: {kind!r} (use {', '.join(GAME_SCHEMAS)})")
    try:
        return schema.model_validate(data)
    except ValidationError as exc:
        raise GameInputError(f"Documento de jogo inválido ({kind}): {exc}") from exc
