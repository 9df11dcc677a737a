"""
CLI - Bateria de Verificação

Roda, para cada n do conjunto, as verificações por forma fechada e, dentro
do limite de enumeração, as verificações exaustivas: igualdade com a
realização, certificados de dimensão, relatório de desejabilidade,
decomposição em fatores, oráculos de Banzhaf / Shapley-Shubik e o catálogo
de coalizões. Escreve JSON canônico e um resumo em Markdown.

Uso:
    python -m src.cli verify --n 1..6
    python -m src.cli verify --n 35 --digits 3
    python -m src.cli verify --n 9 --force-enum --max-players 17
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

from ..analysis.report import desirability_report
from ..core.config import Config
from ..dimension.certificate import certify_dimension, factor_dimension_report
from ..games.enumeration import ensure_enumerable
from ..games.frontier import games_equal
from ..games.weighted import WeightedGame
from ..legco.game import Scenario, legco_game
from ..legco.landmarks import landmark_facts
from ..legco.realizations import reference_realization, scenario_realization
from ..power.asymptotics import bi_ratio_asymptotic, bi_ratio_exact, parity_gap
from ..power.banzhaf import banzhaf_closed, banzhaf_enum
from ..power.shapley import indices_ordinally_equivalent, ssi_enum, ssi_gov_closed, ssi_ordinary_closed
from .common import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    Console,
    add_common_arguments,
    execute,
    parse_n_set,
    positive_int,
)
from .output import atomic_write, canonical_json, envelope

EXPECTED_DIMENSION = {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3}
HEADLINE_N = 35


@dataclass
class VerifyCheck:
    name: str
    status: str  # pass | fail | skipped
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {'status': self.status, 'detail': self.detail}


def _check(name: str, passed: bool, **detail) -> VerifyCheck:
    return VerifyCheck(name, "pass" if passed else "fail", detail)


def _sig(value, digits: int = 3) -> str:
    return f"{float(value):.{digits}g}"


def closed_form_checks(n: int) -> List[VerifyCheck]:
    counts = banzhaf_closed(n)
    gov = ssi_gov_closed(n)
    checks = [_check("closed_forms", 0 <= gov < 1 and counts.ordinary > 0,
                     b_ord=str(counts.ordinary), b_gov=str(counts.government), ssi_gov=str(gov))]

    if n == HEADLINE_N:
        ordinary = ssi_ordinary_closed(n)
        ratio = 2 * n * gov / (1 - gov)
        checks.append(_check(
            "headline_ssi",
            _sig(gov) == "0.0395" and _sig(ordinary) == "0.0137" and 2.7 <= float(ratio) <= 3.0,
            ssi_gov=_sig(gov), ssi_ord=_sig(ordinary), ssi_ratio=_sig(ratio, 4),
        ))
        exact = float(bi_ratio_exact(n))
        approx = bi_ratio_asymptotic(n)
        checks.append(_check("headline_bi_ratio", abs(exact - approx) <= 0.02 * exact,
                             exact=_sig(exact, 5), asymptotic=_sig(approx, 5)))

    if n >= 1000:
        exact = float(bi_ratio_exact(n))
        approx = bi_ratio_asymptotic(n)
        checks.append(_check("asymptotic_bi_ratio", abs(exact - approx) <= 0.05 * exact,
                             exact=_sig(exact, 6), asymptotic=_sig(approx, 6)))
        if n % 2 == 0:
            gap = parity_gap(n)
            checks.append(_check("parity_gap", abs(gap - 1) <= 0.1, gap=_sig(gap, 4)))
    return checks


def _dimension_check(name: str, game, matrix, expected: int) -> VerifyCheck:
    certificate = certify_dimension(game, matrix)
    return _check(name, certificate.certified and certificate.upper == expected,
                  lower=certificate.lower, upper=certificate.upper, expected=expected)


def enumeration_checks(n: int) -> List[VerifyCheck]:
    game = legco_game(n)
    checks = []

    equality = games_equal(game, WeightedGame(reference_realization(n)))
    checks.append(_check("realization_equality", equality.equal, **equality.to_dict()))

    if n in EXPECTED_DIMENSION:
        checks.append(_dimension_check("dimension", game, reference_realization(n), EXPECTED_DIMENSION[n]))
        if n >= 3:
            for scenario, expected in ((Scenario.BICAMERAL_ONLY, 2), (Scenario.UNICAMERAL, 1)):
                checks.append(_dimension_check(
                    f"dimension_{scenario.value}", legco_game(n, scenario), scenario_realization(n, scenario), expected,
                ))

    report = desirability_report(n)
    checks.append(_check("desirability", report.passed,
                         clauses={c.name: c.status.value for c in report.clauses}))

    if 5 <= n <= 7:
        factors = factor_dimension_report(n)
        checks.append(_check("factor_decomposition", factors.passed,
                             checks={c.name: c.passed for c in factors.checks},
                             discrepancies=[d['name'] for d in factors.discrepancies]))

    counts = banzhaf_closed(n)
    swings = banzhaf_enum(game)
    expected = (counts.ordinary,) * (2 * n) + (counts.government,)
    checks.append(_check("banzhaf_oracle", swings.counts == expected,
                         ordinary=str(swings[1]), government=str(swings[2 * n + 1])))

    shapley = ssi_enum(game)
    gov = ssi_gov_closed(n)
    ordinary = ssi_ordinary_closed(n)
    checks.append(_check("ssi_oracle",
                         shapley[2 * n + 1] == gov and all(shapley[k] == ordinary for k in range(1, 2 * n + 1)),
                         enumerated_gov=str(shapley[2 * n + 1]), closed_gov=str(gov)))

    if n % 2 == 0:
        checks.append(_check("ordinal_equivalence", indices_ordinally_equivalent(game)))

    facts = landmark_facts(n, game)
    failures = [fact.name for fact in facts if fact.is_failure]
    discrepancies = [fact.name for fact in facts if not fact.holds and fact.known_discrepancy]
    checks.append(_check("landmarks", not failures, checked=len(facts), failures=failures,
                         discrepancies=discrepancies))
    return checks


def run_battery(n_values: List[int], force_enum: bool, console: Console) -> Dict[str, Any]:
    """
    Executa a bateria para cada n

    Returns:
        Dicionário {n: {check: resultado}} com resumo agregado
    """
    results: Dict[str, Any] = {}
    totals = {'pass': 0, 'fail': 0, 'skipped': 0}
    discrepancies = []

    for n in n_values:
        console.step(f"n = {n}")
        checks = closed_form_checks(n)
        players = 2 * n + 1
        if force_enum:
            ensure_enumerable(players)
        if players <= Config.MAX_PLAYERS:
            checks.extend(enumeration_checks(n))
        else:
            checks.append(VerifyCheck("enumeration", "skipped",
                                      {'players': players, 'limit': Config.MAX_PLAYERS}))

        for check in checks:
            totals[check.status] += 1
            if check.status == "fail":
                console.fail(check.name)
            elif check.status == "skipped":
                console.warn(f"{check.name}: ignorado (2n+1 acima do limite)")
            else:
                console.ok(check.name)
            for name in check.detail.get('discrepancies', []):
                discrepancies.append({'n': n, 'name': name})
        results[str(n)] = {check.name: check.to_dict() for check in checks}

    return {
        'n_values': n_values,
        'results': results,
        'summary': {**totals, 'passed': totals['fail'] == 0, 'discrepancies': discrepancies},
    }


def markdown_report(report: Dict[str, Any]) -> str:
    summary = report['summary']
    lines = [
        "# Relatório de Verificação - QuorumLab",
        "",
        f"**n verificados**: {', '.join(str(n) for n in report['n_values'])}",
        f"**Aprovadas**: {summary['pass']} | **Falhas**: {summary['fail']} | **Ignoradas**: {summary['skipped']}",
        "",
        "---",
        "",
    ]
    for n, checks in report['results'].items():
        lines.append(f"## n = {n}")
        lines.append("")
        lines.append("| Verificação | Status |")
        lines.append("|---|---|")
        for name, check in checks.items():
            lines.append(f"| {name} | {check['status']} |")
        lines.append("")
    if summary['discrepancies']:
        lines.append("## Divergências conhecidas")
        lines.append("")
        for item in summary['discrepancies']:
            lines.append(f"- n={item['n']}: `{item['name']}` afirmada vencedora, avaliada perdedora")
        lines.append("")
    return "\n".join(lines)


def configure(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=parse_n_set, default=parse_n_set("1..6"),
                        help="Conjunto de n: 1..6, 5,6,7 ou 35 (default: 1..6)")
    parser.add_argument("--force-enum", action="store_true",
                        help="Falha (código 2) se algum 2n+1 exceder o limite de enumeração")
    parser.add_argument("--lp-budget", type=positive_int, default=None)
    add_common_arguments(parser, out_help="Diretório dos relatórios (default: QUORUMLAB_OUTPUT_DIR)")


def run(args) -> int:
    console = Console(sys.stdout)
    console.banner("🔎 QUORUMLAB - BATERIA DE VERIFICAÇÃO")
    report = run_battery(args.n, args.force_enum, console)

    out_dir = Path(args.out) if args.out else Config.OUTPUT_DIR
    inputs = {'n': args.n, 'force_enum': args.force_enum, 'max_players': Config.MAX_PLAYERS}
    json_path = atomic_write(out_dir / "verify_report.json", canonical_json(envelope("verify", inputs, report)))
    md_path = atomic_write(out_dir / "verify_report.md", markdown_report(report))

    summary = report['summary']
    console.banner("📊 RESUMO")
    console.ok(f"{summary['pass']} aprovadas, {summary['skipped']} ignoradas")
    if summary['discrepancies']:
        console.warn(f"{len(summary['discrepancies'])} divergência(s) conhecida(s) no catálogo")
    if summary['fail']:
        console.fail(f"{summary['fail']} falha(s)")
    console.ok(f"JSON: {json_path}")
    console.ok(f"Markdown: {md_path}")
    return EXIT_OK if summary['passed'] else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Bateria de verificação do Legco")
    configure(parser)
    return execute(run, parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
