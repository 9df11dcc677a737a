import pytest

from src.core.errors import GameInputError
from src.core.models import Coalition
from src.games import WeightedGame, games_equal
from src.legco import (
    LANDMARK_NAMES,
    FactorClaim,
    PlayerCategories,
    Scenario,
    intersection_factors,
    landmark_coalition,
    landmark_facts,
    legco_game,
    majority,
    reference_realization,
    scenario_realization,
    swap_pair,
)


class TestLegcoRule:
    def test_categories(self):
        cats = PlayerCategories(3)
        assert cats.players == 7
        assert list(cats.geo) == [1, 2, 3]
        assert list(cats.func) == [4, 5, 6]
        assert cats.government == 7
        assert cats.category_of(5) == "func"
        assert cats.profile_of(Coalition.of([1, 4, 5, 7], 7).mask) == (1, 2, 1)

    def test_n_one(self):
        game = legco_game(1)
        assert game.wins(1, 2)
        assert game.wins(1, 2, 3)
        assert not game.wins(1, 3)
        assert not game.wins(2, 3)

    def test_large_n_evaluates_without_enumeration(self):
        game = legco_game(35)
        assert not game.evaluate(Coalition.of(list(range(1, 36)) + [36, 37], 71))
        with_government = list(range(1, 19)) + list(range(36, 54)) + [71]
        assert game.evaluate(Coalition.of(with_government, 71))

    def test_unicameral(self):
        assert legco_game(5, "unicameral").wins(1, 2, 3, 4, 5, 6)
        assert not legco_game(5).wins(1, 2, 3, 4, 5, 6)

    def test_bicameral_only_ignores_government(self):
        game = legco_game(4, Scenario.BICAMERAL_ONLY)
        assert game.wins(1, 2, 3, 5, 6, 7)
        assert not game.wins(1, 2, 3, 4, 5, 9)

    @pytest.mark.parametrize("bad", [0, -1, True, "3"])
    def test_invalid_n(self, bad):
        with pytest.raises(GameInputError):
            legco_game(bad)

    def test_invalid_scenario(self):
        with pytest.raises(GameInputError, match="Cenário"):
            legco_game(3, "tricameral")

    def test_majority(self):
        assert [majority(n) for n in (1, 2, 3, 4, 5)] == [1, 2, 2, 3, 3]

    def test_document(self):
        assert legco_game(4, "unicameral").to_document() == {'type': 'legco', 'n': 4, 'scenario': 'unicameral'}


class TestRealizations:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
    def test_reference_realizes_legco(self, n, legco):
        matrix = reference_realization(n)
        assert games_equal(WeightedGame(matrix), legco(n)).equal

    def test_row_counts(self):
        assert [reference_realization(n).m for n in (1, 2, 3, 4, 5, 9)] == [1, 1, 2, 2, 3, 3]

    def test_n_two_is_four_of_five(self):
        assert reference_realization(2).to_dict()['rows'] == [{'q': '4', 'w': ['1'] * 5}]

    @pytest.mark.parametrize("scenario", ["bicameral_only", "unicameral"])
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_scenario_realizations(self, n, scenario, legco):
        matrix = scenario_realization(n, scenario)
        assert games_equal(WeightedGame(matrix), legco(n, scenario)).equal
        assert all(row.weights[-1] == 0 for row in matrix.rows)

    def test_wrong_matrix_detected(self, legco):
        comparison = games_equal(WeightedGame(scenario_realization(5, "unicameral")), legco(5))
        assert not comparison.equal
        assert comparison.left_wins is True


class TestFactors:
    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_intersection_is_legco(self, n, legco):
        decomposition = intersection_factors(n)
        assert len(decomposition.factors) == 2
        assert games_equal(decomposition.intersection(), legco(n)).equal

    def test_claims(self):
        assert intersection_factors(6).claim is FactorClaim.C_DIMENSION
        assert intersection_factors(5).claim is FactorClaim.W_DIMENSION

    def test_single_factor_differs(self, legco):
        factor = intersection_factors(5).factors[0]
        assert not games_equal(factor, legco(5)).equal

    def test_small_n_rejected(self):
        with pytest.raises(GameInputError):
            intersection_factors(4)

    def test_even_system_rule(self):
        geo_system = intersection_factors(6).factors[0]
        # sem governo: r + s >= 8 e r >= 4
        assert geo_system.wins_profile(4, 4, 0)
        assert not geo_system.wins_profile(3, 5, 0)
        assert geo_system.wins_profile(2, 5, 1)


class TestLandmarks:
    def test_named_examples(self):
        assert landmark_coalition(5, "chain_loss_2").members == (1, 2, 3, 4, 6, 7)
        assert landmark_coalition(3, "swap_source").members == (1, 2, 4, 5)
        assert landmark_coalition(3, "swap_partner").members == (1, 3, 4, 6)
        assert landmark_coalition(5, "chamber_block").members == (6, 7, 8, 9, 10)
        assert swap_pair(3) == (2, 6)

    def test_aliases(self):
        assert landmark_coalition(3, "S_swap") == landmark_coalition(3, "swap_source")
        assert landmark_coalition(3, "S'_swap").members == (1, 3, 4, 6)
        assert landmark_coalition(5, "U").members == (6, 7, 8, 9, 10)
        assert landmark_coalition(5, "L2") == landmark_coalition(5, "chain_loss_2")
        with pytest.raises(GameInputError):
            landmark_coalition(4, "L1")

    def test_chain_loss_duplicate(self):
        assert landmark_coalition(7, "chain_loss_7") == landmark_coalition(7, "chain_loss_3")

    def test_unknown_or_undefined(self):
        with pytest.raises(GameInputError):
            landmark_coalition(5, "nope")
        with pytest.raises(GameInputError):
            landmark_coalition(4, "chain_win_0")

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 9])
    def test_no_unexpected_failures(self, n):
        facts = landmark_facts(n)
        assert facts
        assert not [fact.name for fact in facts if fact.is_failure]

    def test_known_discrepancies_are_flagged(self):
        facts = {fact.name: fact for fact in landmark_facts(5)}
        assert not facts["chain_win_5"].observed_win
        assert facts["chain_win_5"].known_discrepancy
        assert not facts["chamber_block_with_government"].holds
        assert facts["chain_loss_6"].holds

    def test_prefix_filter(self):
        names = [fact.name for fact in landmark_facts(7, prefix="chain_loss")]
        assert names == [f"chain_loss_{k}" for k in range(1, 8)]

    def test_catalogue_names(self):
        assert "government_edge_with_government" in LANDMARK_NAMES
