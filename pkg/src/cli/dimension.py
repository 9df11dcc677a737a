"""
CLI - Certificado de Dimensão

Confere a matriz candidata contra o jogo e calcula o limite inferior
(troca e refutação simétrica). Com --factors, verifica a decomposição em
fatores completos / fracamente completos de Legco(n), n >= 5.

Uso:
    python -m src.cli dimension --n 5
    python -m src.cli dimension --game legco.json --candidate A.json
    python -m src.cli dimension --n 6 --factors
"""

import argparse
import sys

from ..core.errors import GameInputError
from ..dimension.certificate import certify_dimension, factor_dimension_report
from ..legco.realizations import scenario_realization
from .common import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    add_common_arguments,
    add_game_arguments,
    console_for,
    emit,
    execute,
    positive_int,
)
from .analyze import resolve_game
from .gamefile import load_matrix
from .output import envelope, pretty_json


def configure(parser: argparse.ArgumentParser):
    add_game_arguments(parser)
    parser.add_argument("--candidate", default=None,
                        help="Matriz candidata (JSON weighted); default: realização conhecida do cenário")
    parser.add_argument("--factors", action="store_true", help="Verifica a decomposição em fatores (n >= 5)")
    parser.add_argument("--lp-budget", type=positive_int, default=None, help="Máximo de atribuições por refutação")
    add_common_arguments(parser)


def run(args) -> int:
    console = console_for(args)
    game = resolve_game(args)

    if args.factors:
        if args.n is None:
            raise GameInputError("--factors exige --n")
        console.step(f"Decomposição em fatores de Legco n={args.n}")
        report = factor_dimension_report(args.n)
        for check in report.checks:
            (console.ok if check.passed else console.fail)(check.name)
        for item in report.discrepancies:
            console.warn(f"{item['name']}: afirmado vence, avaliado perde")
        payload = envelope("dimension", {'n': args.n, 'factors': True}, report.to_dict())
        emit(pretty_json(payload), args.out, console)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED

    if args.candidate:
        matrix = load_matrix(args.candidate)
    elif args.n is not None:
        matrix = scenario_realization(args.n, args.scenario)
    else:
        raise GameInputError("--game exige --candidate")

    console.step(f"Certificando {game} com {matrix.m} linha(s)")
    certificate = certify_dimension(game, matrix, budget=args.lp_budget)
    if certificate.certified:
        console.ok(f"dimensão = {certificate.upper}")
    else:
        console.warn(f"dimensão entre {certificate.lower} e {certificate.upper}")

    inputs = {'game': game.to_document(), 'candidate': matrix.to_dict()}
    emit(pretty_json(envelope("dimension", inputs, certificate.to_dict())), args.out, console)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Certifica a dimensão de um jogo")
    configure(parser)
    return execute(run, parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
