from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import CapacityError, GameInputError, RealizationError
from src.core.models import AmalgamatedMatrix
from src.games import WeightedGame, games_equal
from src.dimension import (
    Profile,
    certify_dimension,
    check_chamber_symmetry,
    factor_dimension_report,
    profile_table,
    refute_symmetric_realization,
    separable,
    separate,
    symmetric_refutation,
    symmetric_rows,
    symmetrize,
)
from src.legco import PlayerCategories, legco_game, reference_realization, scenario_realization

from .conftest import weighted

P = Profile


class TestProfiles:
    def test_frontiers_n_five(self):
        table = profile_table(5)
        assert table.minimal_winning == (
            P(3, 3, 0), P(5, 1, 1), P(4, 2, 1), P(2, 4, 1), P(1, 5, 1),
        )
        assert table.maximal_losing == (
            P(5, 2, 0), P(2, 5, 0),
            P(5, 0, 1), P(4, 1, 1), P(3, 2, 1), P(2, 3, 1), P(1, 4, 1), P(0, 5, 1),
        )

    def test_wins(self):
        table = profile_table(3)
        assert table.wins((2, 2, 0))
        assert not table.wins((3, 1, 0))
        assert table.wins((3, 1, 1))

    def test_symmetry(self, legco):
        assert check_chamber_symmetry(legco(3), PlayerCategories(3)) is None
        asymmetric = weighted(1, [1, 0, 0, 0, 0])
        assert check_chamber_symmetry(asymmetric, PlayerCategories(2)).members == (2,)

    def test_symmetrize_averages_chambers(self):
        matrix = AmalgamatedMatrix.from_rows([(2, [1, 3, 0, 2, 1])])
        averaged = symmetrize(matrix, PlayerCategories(2))
        assert averaged.rows[0].weights == (2, 2, 1, 1, 1)
        assert averaged.rows[0].threshold == 2

    def test_symmetrize_keeps_symmetric_matrix(self):
        matrix = reference_realization(3)
        assert symmetrize(matrix, PlayerCategories(3)) == matrix

    def test_symmetric_rows(self):
        realization = symmetric_rows(reference_realization(5), PlayerCategories(5))
        assert len(realization.rows) == 3
        assert realization.rows[1].g == Fraction(5, 2)
        assert realization.realizes(profile_table(5))

    def test_symmetric_rows_rejects_asymmetric(self):
        matrix = AmalgamatedMatrix.from_rows([(2, [1, 3, 0, 2, 1])])
        with pytest.raises(GameInputError):
            symmetric_rows(matrix, PlayerCategories(2))


class TestSeparation:
    def test_single_profile_separable(self):
        table = profile_table(5)
        row = separable(table, [P(2, 5, 0)])
        assert row is not None
        assert not row.accepts(P(2, 5, 0))
        assert all(row.accepts(p) for p in table.minimal_winning)

    def test_conflicting_profiles(self):
        table = profile_table(5)
        assert separable(table, [P(5, 2, 0), P(0, 5, 1)]) is None
        result = separate(table, [P(5, 2, 0), P(0, 5, 1)])
        assert result.certificate is not None

    def test_empty_must_lose(self):
        table = profile_table(5)
        row = separable(table, [])
        assert row is not None
        assert all(row.accepts(p) for p in table.winning)

    def test_winning_profile_rejected(self):
        with pytest.raises(GameInputError):
            separate(profile_table(5), [P(3, 3, 0)])


class TestRefutation:
    @pytest.mark.parametrize("n, m, refuted", [
        (5, 2, True),
        (3, 1, True),
        (2, 1, False),
        (4, 1, True),
        (4, 2, False),
    ])
    def test_refutation(self, n, m, refuted):
        assert refute_symmetric_realization(profile_table(n), m) is refuted

    def test_transcript_n_five(self):
        transcript = symmetric_refutation(profile_table(5), 2)
        assert transcript.refuted
        assert len(transcript.maximal_losing) == 8
        assert len(transcript.cases) == 256
        assert all(case.infeasible_row is not None for case in transcript.cases)
        assert transcript.to_dict()['cases_checked'] == 256

    def test_realization_found(self):
        transcript = symmetric_refutation(profile_table(3), 2)
        assert not transcript.refuted
        assert transcript.realization.realizes(profile_table(3))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_refuting_two_rows_refutes_one(self, n):
        table = profile_table(n)
        if refute_symmetric_realization(table, 2):
            assert refute_symmetric_realization(table, 1)
        if not refute_symmetric_realization(table, 1):
            assert not refute_symmetric_realization(table, 2)

    def test_budget(self):
        with pytest.raises(CapacityError) as info:
            symmetric_refutation(profile_table(5), 2, budget=100)
        assert info.value.required == 256


class TestCertificate:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (6, 3)])
    def test_status_quo_ladder(self, legco, n, expected):
        certificate = certify_dimension(legco(n), reference_realization(n))
        assert certificate.certified
        assert certificate.dimension == expected

    @pytest.mark.parametrize("n", [5, 6])
    @pytest.mark.parametrize("scenario, expected", [("bicameral_only", 2), ("unicameral", 1)])
    def test_scenarios(self, legco, n, scenario, expected):
        certificate = certify_dimension(legco(n, scenario), scenario_realization(n, scenario))
        assert certificate.dimension == expected

    def test_wrong_candidate(self, legco):
        with pytest.raises(RealizationError) as info:
            certify_dimension(legco(5), scenario_realization(5, "unicameral"))
        assert info.value.comparison.witness is not None

    def test_width_mismatch(self, legco):
        with pytest.raises(GameInputError):
            certify_dimension(legco(3), reference_realization(4))

    def test_evidence_methods(self, legco):
        certificate = certify_dimension(legco(5), reference_realization(5))
        methods = [entry['method'] for entry in certificate.evidence]
        assert methods == ['trivial', 'swap_witness', 'symmetric_refutation']
        assert certificate.notes

    def test_weighted_game_with_categories(self):
        game = weighted(4, [1, 1, 1, 1, 1])
        certificate = certify_dimension(game, reference_realization(2), categories=PlayerCategories(2))
        assert certificate.dimension == 1


class TestFactorReport:
    def test_even(self):
        report = factor_dimension_report(6)
        assert report.passed
        assert report.check("weakly_complete").passed
        assert report.w_dimension['value'] == 1
        assert report.c_dimension['value'] == 2
        assert report.dimension == 3

    def test_odd(self):
        report = factor_dimension_report(5)
        assert report.passed
        assert report.check("exchange_chain").passed
        assert report.c_dimension['basis'] == 'asserted'
        landmarks = {entry['name']: entry for entry in report.landmarks}
        assert landmarks['chain_loss_6']['observed_win'] is False
        assert [d['name'] for d in report.discrepancies] == ['chain_win_5']

    def test_odd_names_incomparable_pair(self):
        detail = factor_dimension_report(5).check("not_weakly_complete").detail
        assert detail['pair'] == [1, 11]
        assert detail['relation'] == 'incomparable'
        assert detail['government']['total'] == 130
        assert detail['government']['counts'][6] == 110

    def test_small_n(self):
        with pytest.raises(GameInputError):
            factor_dimension_report(4)


@st.composite
def symmetric_single_rows(draw):
    weights = draw(st.lists(st.integers(min_value=0, max_value=4), min_size=5, max_size=5))
    weights[0] = max(weights[0], 1)
    return weighted(draw(st.integers(min_value=1, max_value=sum(weights))), weights)


@settings(max_examples=50, deadline=None)
@given(symmetric_single_rows())
def test_symmetrization_preserves_symmetric_games(game):
    categories = PlayerCategories(2)
    if check_chamber_symmetry(game, categories) is not None:
        return
    averaged = WeightedGame(symmetrize(game.matrix, categories))
    assert games_equal(game, averaged).equal


@st.composite
def perturbed_realizations(draw):
    """Realização de referência com pesos acrescidos de até 4/100 (a folga das perdedoras é >= 1/2)"""
    n = draw(st.integers(min_value=1, max_value=5))
    rows = []
    for row in reference_realization(n).rows:
        bumps = draw(st.lists(st.integers(min_value=0, max_value=4), min_size=row.width, max_size=row.width))
        rows.append((row.threshold, [w + Fraction(b, 100) for w, b in zip(row.weights, bumps)]))
    return n, AmalgamatedMatrix.from_rows(rows)


@settings(max_examples=30, deadline=None)
@given(perturbed_realizations())
def test_symmetrization_of_perturbed_realization(case):
    n, matrix = case
    game = legco_game(n)
    assert games_equal(WeightedGame(matrix), game).equal
    averaged = WeightedGame(symmetrize(matrix, PlayerCategories(n)))
    assert games_equal(averaged, game).equal
