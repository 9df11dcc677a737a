"""
CLI - Varredura em n

Tabela CSV das razões de poder do governo (dados das curvas BI e SSI) e,
com --probe, a inclinação log-log da razão SSI e a tendência por paridade.

Uso:
    python -m src.cli sweep --from 1 --to 100 --out dados/relatorios/sweep.csv
    python -m src.cli sweep --from 20 --to 60 --probe --format json
"""

import argparse
import sys

from ..power.sweep import growth_probe, parity_trend, sweep, sweep_frame
from .common import EXIT_OK, add_common_arguments, console_for, emit, execute
from .output import envelope, pretty_json


def configure(parser: argparse.ArgumentParser):
    parser.add_argument("--from", dest="n_from", type=int, required=True)
    parser.add_argument("--to", dest="n_to", type=int, required=True)
    parser.add_argument("--step", type=int, default=1)
    parser.add_argument("--format", default="csv", choices=["json", "csv"])
    parser.add_argument("--probe", action="store_true", help="Ajuste log-log e tendência por paridade")
    add_common_arguments(parser)


def run(args) -> int:
    console = console_for(args)
    console.step(f"Varredura n = {args.n_from}..{args.n_to} (passo {args.step})")
    rows = sweep(args.n_from, args.n_to, args.step)
    frame = sweep_frame(rows)
    console.ok(f"{len(frame)} linhas")

    if args.format == "csv":
        emit(frame.to_csv(index=False, lineterminator="\n"), args.out, console)
        return EXIT_OK

    result = {'rows': frame.to_dict(orient='records'), 'parity_trend': parity_trend(rows), 'probe': None}
    if args.probe:
        probe = growth_probe(args.n_from, args.n_to, args.step)
        result['probe'] = probe.to_dict()
        console.ok(f"inclinação log-log da razão SSI: {probe.slope:.4f}")
    inputs = {'from': args.n_from, 'to': args.n_to, 'step': args.step, 'probe': args.probe}
    emit(pretty_json(envelope("sweep", inputs, result)), args.out, console)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Varredura das razões de poder do governo")
    configure(parser)
    return execute(run, parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
