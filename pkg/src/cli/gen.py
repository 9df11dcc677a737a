"""
CLI - Gerar Jogo

Escreve o documento JSON canônico de Legco(n, cenário) ou a matriz
candidata que o realiza.

Uso:
    python -m src.cli gen --n 35 --scenario status_quo --out legco35.json
    python -m src.cli gen --n 5 --kind realization --out A5.json
"""

import argparse
import sys

from ..legco.game import legco_game
from ..legco.realizations import scenario_realization
from .common import EXIT_OK, add_common_arguments, console_for, emit, execute
from .gamefile import dump_document


def configure(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, required=True, help="Membros por câmara (n >= 1)")
    parser.add_argument("--scenario", default="status_quo",
                        choices=["status_quo", "bicameral_only", "unicameral"])
    parser.add_argument("--kind", default="game", choices=["game", "realization"],
                        help="game: documento legco; realization: matriz amalgamada candidata")
    add_common_arguments(parser)


def run(args) -> int:
    console = console_for(args)
    if args.kind == "realization":
        document = scenario_realization(args.n, args.scenario).to_dict()
    else:
        document = legco_game(args.n, args.scenario).to_document()
    console.step(f"Legco n={args.n} ({args.scenario}), {args.kind}")
    emit(dump_document(document), args.out, console)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Gera o documento JSON de um jogo Legco")
    configure(parser)
    return execute(run, parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
