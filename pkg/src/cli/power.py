"""
CLI - Índices de Poder

Formas fechadas de Legco(n) no status quo (qualquer n) e, dentro do
limite de enumeração, a tabela por jogador do cenário pedido.

Uso:
    python -m src.cli power --n 35 --index ssi --digits 3
    python -m src.cli power --n 5 --scenario unicameral --format csv
"""

import argparse
import sys

from ..core.config import Config
from ..core.errors import GameInputError
from ..legco.game import Scenario, legco_game
from ..power.asymptotics import bi_ratio_asymptotic
from ..power.sweep import sweep_frame, sweep_row
from ..power.table import power_table
from .common import EXIT_OK, add_common_arguments, console_for, emit, execute
from .output import envelope, pretty_json


def configure(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, required=True, help="Membros por câmara")
    parser.add_argument("--scenario", default="status_quo",
                        choices=["status_quo", "bicameral_only", "unicameral"])
    parser.add_argument("--index", default="both", choices=["banzhaf", "ssi", "both"])
    parser.add_argument("--format", default="json", choices=["json", "csv"])
    add_common_arguments(parser)


def _decimal(value) -> str:
    return f"{float(value):.{Config.DIGITS}g}"


def closed_form(n: int, index: str):
    row = sweep_row(n)
    result = {}
    if index in ("banzhaf", "both"):
        result['banzhaf'] = {
            'b_ord': str(row.b_ord),
            'b_gov': str(row.b_gov),
            'bi_ratio': str(row.bi_ratio),
            'bi_ratio_decimal': _decimal(row.bi_ratio),
            'bi_ratio_asymptotic': _decimal(bi_ratio_asymptotic(n)),
        }
    if index in ("ssi", "both"):
        result['shapley_shubik'] = {
            'ssi_gov': str(row.ssi_gov),
            'ssi_gov_decimal': _decimal(row.ssi_gov),
            'ssi_ord': str(row.ssi_ord),
            'ssi_ord_decimal': _decimal(row.ssi_ord),
            'ssi_ratio': str(row.ssi_ratio),
            'ssi_ratio_decimal': _decimal(row.ssi_ratio),
        }
    return row, result


def run(args) -> int:
    console = console_for(args)
    scenario = Scenario.parse(args.scenario)
    game = legco_game(args.n, scenario)
    console.step(f"Índices de poder: {game}")

    result = {'n': args.n, 'scenario': scenario.value, 'closed_form': None, 'enumerated': None}
    row = None
    if scenario is Scenario.STATUS_QUO:
        row, result['closed_form'] = closed_form(args.n, args.index)
        if 'shapley_shubik' in result['closed_form']:
            ssi = result['closed_form']['shapley_shubik']
            console.ok(f"SSI governo = {ssi['ssi_gov_decimal']} | ordinário = {ssi['ssi_ord_decimal']}")
        if 'banzhaf' in result['closed_form']:
            console.ok(f"BI governo / ordinário = {result['closed_form']['banzhaf']['bi_ratio_decimal']}")

    table = None
    if game.players <= Config.MAX_PLAYERS:
        table = power_table(game)
        result['enumerated'] = table.to_dict(orient='records')
        dummies = table.loc[table['swings'] == 0, 'player'].tolist()
        if dummies:
            console.warn(f"jogadores nulos: {dummies}")
    else:
        console.hint(f"2n+1 = {game.players} acima do limite {Config.MAX_PLAYERS}: sem enumeração")

    if args.format == "csv":
        if table is None and row is None:
            raise GameInputError(f"CSV de {scenario.value} exige enumeração (2n+1 <= {Config.MAX_PLAYERS})")
        frame = table if table is not None else sweep_frame([row])
        emit(frame.to_csv(index=False, lineterminator="\n"), args.out, console)
    else:
        inputs = {'n': args.n, 'scenario': scenario.value, 'index': args.index, 'digits': Config.DIGITS}
        emit(pretty_json(envelope("power", inputs, result)), args.out, console)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Calcula índices de Banzhaf e Shapley-Shubik do Legco")
    configure(parser)
    return execute(run, parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
