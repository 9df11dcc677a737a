"""
QuorumLab CLI

Uso:
    python -m src.cli <comando> [opções]

Comandos: gen, analyze, dimension, power, sweep, verify
"""

import argparse
import sys

from . import analyze, dimension, gen, power, sweep, verify
from .common import execute

COMMANDS = {
    'gen': (gen, "Gera o documento JSON de um jogo Legco"),
    'analyze': (analyze, "Desejabilidade, robustez a trocas e completude"),
    'dimension': (dimension, "Certificado de dimensão"),
    'power': (power, "Índices de Banzhaf e Shapley-Shubik"),
    'sweep': (sweep, "Varredura das razões de poder em n"),
    'verify': (verify, "Bateria de verificação"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quorumlab", description="Análise combinatória do jogo Legco")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (module, help_text) in COMMANDS.items():
        module.configure(subparsers.add_parser(name, help=help_text, description=help_text))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    module, _ = COMMANDS[args.command]
    return execute(module.run, args)


if __name__ == "__main__":
    sys.exit(main())
