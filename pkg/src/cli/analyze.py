"""
CLI - Análise Estrutural

Robustez a trocas, completude, completude fraca e, para Legco no status
quo, as cláusulas (a)-(d) de desejabilidade.

Uso:
    python -m src.cli analyze --n 5
    python -m src.cli analyze --game jogo.json --out analise.json
"""

import argparse
import sys

from ..analysis.completeness import is_complete, is_swap_robust, is_weakly_complete
from ..analysis.report import ClauseStatus, desirability_report
from ..legco.game import LegcoGame, Scenario, legco_game
from .common import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    add_common_arguments,
    add_game_arguments,
    console_for,
    emit,
    execute,
)
from .gamefile import load_game
from .output import envelope, pretty_json


def configure(parser: argparse.ArgumentParser):
    add_game_arguments(parser)
    add_common_arguments(parser)


def resolve_game(args):
    if args.game:
        return load_game(args.game)
    return legco_game(args.n, args.scenario)


def run(args) -> int:
    console = console_for(args)
    game = resolve_game(args)
    console.step(f"Analisando {game}")

    witness = is_swap_robust(game)
    result = {
        'swap_robust': witness is None,
        'swap_witness': witness.to_dict() if witness else None,
        'complete': is_complete(game),
        'weakly_complete': is_weakly_complete(game),
        'proposition1': None,
    }
    console.ok(f"robusto a trocas: {result['swap_robust']}")
    console.ok(f"completo: {result['complete']} | fracamente completo: {result['weakly_complete']}")

    status = EXIT_OK
    if isinstance(game, LegcoGame) and game.scenario is Scenario.STATUS_QUO:
        report = desirability_report(game.n)
        result['proposition1'] = report.by_label()
        for label, clause in result['proposition1'].items():
            line = f"({label}) {clause['name']}: {clause['status']}"
            if clause['status'] == ClauseStatus.FAIL.value:
                console.fail(line)
            else:
                console.ok(line)
        if not report.passed:
            status = EXIT_CHECK_FAILED

    emit(pretty_json(envelope("analyze", {'game': game.to_document()}, result)), args.out, console)
    return status


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Analisa desejabilidade e completude de um jogo")
    configure(parser)
    return execute(run, parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
