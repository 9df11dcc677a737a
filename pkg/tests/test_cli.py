import argparse
import json

import pytest

from src.cli.__main__ import main
from src.cli.common import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, parse_n_set
from src.cli.output import canonical_json, envelope, input_digest


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


class TestHelpers:
    @pytest.mark.parametrize("text, expected", [
        ("1..6", [1, 2, 3, 4, 5, 6]),
        ("5,6,7", [5, 6, 7]),
        ("1..3,35", [1, 2, 3, 35]),
        ("35", [35]),
    ])
    def test_parse_n_set(self, text, expected):
        assert parse_n_set(text) == expected

    @pytest.mark.parametrize("text", ["", "0", "6..1", "a..b", "1.5"])
    def test_parse_n_set_rejects(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_n_set(text)

    def test_canonical_json(self):
        assert canonical_json({'b': 1, 'a': [1, 2]}) == '{"a":[1,2],"b":1}\n'

    def test_envelope_has_no_timestamp(self):
        document = envelope("verify", {'n': [1]}, {'ok': True})
        assert set(document) == {'tool', 'version', 'command', 'input_digest', 'result'}
        assert document['input_digest'] == input_digest({'n': [1]})


class TestGen:
    def test_game_document(self, tmp_path):
        out = tmp_path / "legco5.json"
        assert main(["gen", "--n", "5", "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text()) == {'n': 5, 'scenario': 'status_quo', 'type': 'legco'}

    def test_realization_document(self, capsys):
        assert main(["gen", "--n", "2", "--kind", "realization"]) == EXIT_OK
        document = _stdout_json(capsys)
        assert document == {'players': 5, 'rows': [{'q': '4', 'w': ['1'] * 5}], 'type': 'weighted'}

    def test_zero_is_usage_error(self):
        assert main(["gen", "--n", "0"]) == EXIT_USAGE


class TestAnalyze:
    def test_round_trip_through_file(self, tmp_path, capsys):
        path = tmp_path / "legco5.json"
        main(["gen", "--n", "5", "--out", str(path)])
        capsys.readouterr()
        assert main(["analyze", "--game", str(path)]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert result['swap_robust'] is False
        assert result['complete'] is False
        assert result['weakly_complete'] is False
        assert {label: clause['status'] for label, clause in result['proposition1'].items()} == {
            'a': 'pass', 'b': 'pass', 'c': 'out_of_range', 'd': 'pass',
        }

    def test_result_keys(self, capsys):
        assert main(["analyze", "--n", "2"]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert set(result) == {'swap_robust', 'swap_witness', 'complete', 'weakly_complete', 'proposition1'}
        assert set(result['proposition1']) == {'a', 'b', 'c', 'd'}
        assert result['proposition1']['a']['name'] == 'intra_chamber_equivalence'

    def test_swap_witness_for_legco_three(self, capsys):
        assert main(["analyze", "--n", "3"]) == EXIT_OK
        witness = _stdout_json(capsys)['result']['swap_witness']
        assert (witness['first'], witness['second']) == ([1, 2, 4, 5], [1, 3, 4, 6])
        assert (witness['leaving'], witness['entering']) == (2, 6)

    def test_weighted_game(self, tmp_path, capsys):
        path = tmp_path / "maj.json"
        path.write_text(json.dumps({'type': 'weighted', 'players': 3, 'rows': [{'q': 2, 'w': [1, 1, 1]}]}))
        assert main(["analyze", "--game", str(path)]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert result['complete'] is True
        assert result['proposition1'] is None

    @pytest.mark.parametrize("q", [0, 5])
    def test_weighted_game_must_be_simple(self, tmp_path, q):
        path = tmp_path / "degenerate.json"
        path.write_text(json.dumps({'type': 'weighted', 'players': 2, 'rows': [{'q': q, 'w': [1, 1]}]}))
        assert main(["analyze", "--game", str(path)]) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert main(["analyze", "--game", str(tmp_path / "nope.json")]) == EXIT_USAGE

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["analyze", "--game", str(path)]) == EXIT_USAGE

    def test_non_monotone_game(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({'type': 'explicit', 'players': 2, 'winning': [[1]]}))
        assert main(["analyze", "--game", str(path)]) == EXIT_USAGE

    def test_game_source_required(self):
        with pytest.raises(SystemExit) as info:
            main(["analyze"])
        assert info.value.code == 2


class TestDimension:
    def test_default_candidate(self, capsys):
        assert main(["dimension", "--n", "4"]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert (result['lower'], result['upper'], result['certified']) == (2, 2, True)

    def test_candidate_file(self, tmp_path, capsys):
        candidate = tmp_path / "A5.json"
        main(["gen", "--n", "5", "--kind", "realization", "--out", str(candidate)])
        out = tmp_path / "cert.json"
        assert main(["dimension", "--n", "5", "--candidate", str(candidate), "--out", str(out)]) == EXIT_OK
        result = json.loads(out.read_text())['result']
        assert result['lower'] == result['upper'] == 3

    def test_wrong_candidate(self, tmp_path):
        candidate = tmp_path / "uni.json"
        main(["gen", "--n", "5", "--scenario", "unicameral", "--kind", "realization", "--out", str(candidate)])
        assert main(["dimension", "--n", "5", "--candidate", str(candidate)]) == EXIT_CHECK_FAILED

    def test_lp_budget_exceeded(self):
        assert main(["dimension", "--n", "5", "--lp-budget", "10"]) == EXIT_USAGE

    def test_factors(self, capsys):
        assert main(["dimension", "--n", "6", "--factors"]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert result['passed'] is True
        assert result['parity'] == 'even'


class TestPower:
    def test_headline(self, capsys):
        assert main(["power", "--n", "35", "--index", "ssi", "--digits", "3"]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        ssi = result['closed_form']['shapley_shubik']
        assert ssi['ssi_gov_decimal'] == "0.0395"
        assert ssi['ssi_ord_decimal'] == "0.0137"
        assert 'banzhaf' not in result['closed_form']
        assert result['enumerated'] is None

    def test_enumerated_csv(self, capsys):
        assert main(["power", "--n", "2", "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0].startswith("player,category,swings")
        assert len(lines) == 6

    def test_reform_scenario_has_no_closed_form(self, capsys):
        assert main(["power", "--n", "3", "--scenario", "unicameral"]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert result['closed_form'] is None
        assert result['enumerated'][-1]['swings'] == 0

    def test_reform_csv_above_cap(self):
        assert main(["power", "--n", "20", "--scenario", "unicameral", "--format", "csv"]) == EXIT_USAGE


class TestSweep:
    def test_csv(self, capsys):
        assert main(["sweep", "--from", "1", "--to", "100"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "n,parity,b_ord,b_gov,bi_ratio,bi_ratio_asymptotic,ssi_gov,ssi_ord,ssi_ratio"
        assert len(lines) == 101

    def test_probe(self, capsys):
        assert main(["sweep", "--from", "20", "--to", "60", "--probe", "--format", "json"]) == EXIT_OK
        result = _stdout_json(capsys)['result']
        assert 0.4 <= result['probe']['slope'] <= 0.6

    def test_empty_range(self):
        assert main(["sweep", "--from", "10", "--to", "5"]) == EXIT_USAGE


class TestVerify:
    def test_reports_are_deterministic(self, tmp_path):
        first, second = tmp_path / "a", tmp_path / "b"
        assert main(["verify", "--n", "1..4", "--out", str(first)]) == EXIT_OK
        assert main(["verify", "--n", "1..4", "--out", str(second)]) == EXIT_OK
        for name in ("verify_report.json", "verify_report.md"):
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_headline_without_enumeration(self, tmp_path):
        assert main(["verify", "--n", "35", "--out", str(tmp_path)]) == EXIT_OK
        report = json.loads((tmp_path / "verify_report.json").read_text())['result']
        checks = report['results']['35']
        assert checks['headline_ssi']['status'] == "pass"
        assert checks['headline_bi_ratio']['status'] == "pass"
        assert checks['enumeration']['status'] == "skipped"
        assert report['summary']['passed'] is True

    def test_discrepancies_reported(self, tmp_path):
        assert main(["verify", "--n", "5", "--out", str(tmp_path)]) == EXIT_OK
        report = json.loads((tmp_path / "verify_report.json").read_text())['result']
        names = {item['name'] for item in report['summary']['discrepancies']}
        assert "chain_win_5" in names
        assert "Divergências conhecidas" in (tmp_path / "verify_report.md").read_text()

    def test_forced_enumeration_over_cap(self, tmp_path):
        code = main(["verify", "--n", "9", "--force-enum", "--max-players", "17", "--out", str(tmp_path)])
        assert code == EXIT_USAGE

    def test_default_output_directory(self, tmp_path, monkeypatch):
        from src.core.config import Config

        monkeypatch.setattr(Config, "OUTPUT_DIR", tmp_path / "padrao")
        assert main(["verify", "--n", "1"]) == EXIT_OK
        assert (tmp_path / "padrao" / "verify_report.json").exists()
