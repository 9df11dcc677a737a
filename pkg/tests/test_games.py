from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.errors import CapacityError, GameInputError
from src.core.models import AmalgamatedMatrix, Coalition
from src.games import (
    ExplicitGame,
    IntersectionGame,
    WeightedGame,
    check_monotone,
    evaluate,
    games_equal,
    maximal_losing,
    minimal_winning,
)
from src.games.enumeration import block_mask, ensure_enumerable, popcount

from .conftest import weighted


def members(coalitions):
    return [c.members for c in coalitions]


@st.composite
def weighted_games(draw):
    """Jogos ponderados pequenos (1 ou 2 linhas, até 6 jogadores)"""
    players = draw(st.integers(min_value=1, max_value=6))
    rows = []
    for _ in range(draw(st.integers(min_value=1, max_value=2))):
        weights = draw(st.lists(st.integers(min_value=0, max_value=5), min_size=players, max_size=players))
        total = sum(weights)
        if total == 0:
            weights[0] = 1
            total = 1
        q = draw(st.integers(min_value=1, max_value=total))
        rows.append((q, weights))
    return WeightedGame(AmalgamatedMatrix.from_rows(rows))


class TestEvaluate:
    def test_weighted_examples(self, dummy_pair):
        assert evaluate(dummy_pair, Coalition.of([1, 2], 3))
        assert not evaluate(dummy_pair, Coalition.empty(3))
        assert not dummy_pair.wins(1, 3)

    def test_legco_small(self, legco):
        assert evaluate(legco(2), Coalition.of([1, 2, 3, 5], 5))

    def test_width_mismatch(self, dummy_pair):
        with pytest.raises(GameInputError):
            evaluate(dummy_pair, Coalition.of([1], 4))

    @pytest.mark.parametrize("q, weights", [
        (0, [1, 1]),
        (-1, [1, 1]),
        (5, [1, 1]),
        ("5/2", [1, "1/2", "1/2"]),
    ])
    def test_weighted_must_be_simple(self, q, weights):
        with pytest.raises(GameInputError):
            weighted(q, weights)

    def test_one_positive_threshold_is_enough(self):
        # ∅ perde se ao menos uma linha tem limiar positivo
        game = WeightedGame(AmalgamatedMatrix.from_rows([(0, [1, 1]), (1, [1, 1])]))
        assert not game.evaluate_mask(0)

    def test_grand_must_win_in_every_row(self):
        with pytest.raises(GameInputError):
            WeightedGame(AmalgamatedMatrix.from_rows([(1, [1, 1]), (3, [1, 1])]))


class TestMonotonicity:
    def test_chain_is_monotone(self):
        assert check_monotone([[1, 2], [1, 2, 3]], 3) == []

    def test_upward_closed_set_has_no_violation(self):
        winning = [[1, 2], [1, 3], [2, 3], [1, 2, 3]]
        assert check_monotone(winning, 3) == []

    def test_superset_losing_reported(self):
        violations = check_monotone([[1]], 2)
        assert violations
        assert violations[0].reason == "superset_losing"
        assert violations[0].superset.members == (1, 2)

    def test_empty_and_no_winning(self):
        assert check_monotone([], 2)[0].reason == "no_winning"
        reasons = {v.reason for v in check_monotone([[], [1], [2], [1, 2]], 2)}
        assert "empty_wins" in reasons

    def test_explicit_game_rejects_non_monotone(self):
        with pytest.raises(GameInputError, match="monótono"):
            ExplicitGame(2, [[1]])

    def test_explicit_document(self):
        game = ExplicitGame(2, [[1, 2], [1]])
        assert game.to_document() == {'type': 'explicit', 'players': 2, 'winning': [[1], [1, 2]]}


class TestFrontiers:
    def test_dummy_pair(self, dummy_pair):
        assert members(minimal_winning(dummy_pair)) == [(1, 2)]
        assert members(maximal_losing(dummy_pair)) == [(1, 3), (2, 3)]

    def test_unanimity(self):
        unanimity = weighted(3, [1, 1, 1])
        assert members(maximal_losing(unanimity)) == [(1, 2), (1, 3), (2, 3)]
        assert members(minimal_winning(unanimity)) == [(1, 2, 3)]

    def test_legco_two(self, legco):
        # [4;1,1,1,1,1]: minimais são as 5 coalizões de tamanho 4
        frontier = minimal_winning(legco(2))
        assert len(frontier) == 5
        assert {c.size for c in frontier} == {4}

    def test_legco_five_counts(self, legco):
        assert len(minimal_winning(legco(5))) == 210
        assert len(maximal_losing(legco(5))) == 272

    def test_capacity(self, legco):
        with pytest.raises(CapacityError) as info:
            minimal_winning(legco(5), max_players=10)
        assert info.value.required == 11
        assert info.value.limit == 10

    @settings(max_examples=40, deadline=None)
    @given(weighted_games())
    def test_minimal_winning_property(self, game):
        for coalition in minimal_winning(game):
            assert game.evaluate(coalition)
            for player in coalition:
                assert not game.evaluate(coalition.without_player(player))

    @settings(max_examples=40, deadline=None)
    @given(weighted_games())
    def test_maximal_losing_property(self, game):
        for coalition in maximal_losing(game):
            assert not game.evaluate(coalition)
            for player in range(1, game.players + 1):
                if player not in coalition:
                    assert game.evaluate(coalition.with_player(player))


class TestGamesEqual:
    def test_same_game_different_matrices(self, legco):
        assert games_equal(legco(2), weighted(4, [1, 1, 1, 1, 1])).equal

    def test_witness_is_first_disagreement(self):
        comparison = games_equal(weighted(2, [1, 1, 0]), weighted(1, [1, 1, 0]))
        assert not comparison
        assert comparison.witness.members == (1,)
        assert comparison.left_wins is False
        assert comparison.right_wins is True

    def test_width_mismatch(self, dummy_pair):
        with pytest.raises(GameInputError):
            games_equal(dummy_pair, weighted(1, [1, 1]))

    @settings(max_examples=30, deadline=None)
    @given(weighted_games())
    def test_explicit_copy_is_equal(self, game):
        table = game.win_table()
        if not table.any() or table[0]:
            return
        copy = ExplicitGame.from_table(game.players, table)
        assert games_equal(game, copy).equal

    def test_intersection(self):
        left = weighted(1, [1, 0])
        right = weighted(1, [0, 1])
        both = IntersectionGame([left, right])
        assert games_equal(both, weighted(2, [1, 1])).equal


class TestEnumeration:
    def test_popcount(self):
        values = np.array([0, 1, 3, 7, (1 << 40) - 1], dtype=np.int64)
        assert popcount(values).tolist() == [0, 1, 2, 3, 40]

    def test_block_mask(self):
        assert block_mask(2, 3) == 0b110
        assert block_mask(3, 2) == 0

    def test_ensure_enumerable(self):
        ensure_enumerable(10, max_players=10)
        with pytest.raises(CapacityError):
            ensure_enumerable(11, max_players=10)


@st.composite
def game_pairs(draw):
    players = draw(st.integers(min_value=1, max_value=5))

    def one():
        weights = draw(st.lists(st.integers(min_value=0, max_value=4), min_size=players, max_size=players))
        weights[0] = max(weights[0], 1)
        return weighted(draw(st.integers(min_value=1, max_value=sum(weights))), weights)

    return one(), one()


@settings(max_examples=40, deadline=None)
@given(game_pairs())
def test_games_equal_is_symmetric(pair):
    left, right = pair
    forward = games_equal(left, right)
    backward = games_equal(right, left)
    assert forward.equal == backward.equal
    if not forward.equal:
        assert forward.witness == backward.witness
        assert forward.left_wins == backward.right_wins


@st.composite
def fractional_matrices(draw):
    """Matrizes de 1 a 3 linhas com pesos racionais, até 13 jogadores"""
    players = draw(st.integers(min_value=1, max_value=13))
    rows = []
    for _ in range(draw(st.integers(min_value=1, max_value=3))):
        weights = [
            Fraction(draw(st.integers(min_value=0, max_value=9)), draw(st.integers(min_value=1, max_value=4)))
            for _ in range(players)
        ]
        if not any(weights):
            weights[0] = Fraction(1)
        total = sum(weights)
        q = Fraction(draw(st.integers(min_value=1, max_value=12)), 12) * total
        rows.append((q, weights))
    return AmalgamatedMatrix.from_rows(rows)


@settings(max_examples=25, deadline=None)
@given(fractional_matrices())
def test_vectorized_table_matches_threshold_comparison(matrix):
    table = WeightedGame(matrix).win_table()
    expected = [matrix.accepts(mask) for mask in range(1 << matrix.width)]
    assert table.tolist() == expected


@settings(max_examples=40, deadline=None)
@given(weighted_games())
def test_every_winning_coalition_contains_a_minimal_one(game):
    frontier = [c.mask for c in minimal_winning(game)]
    for mask in np.flatnonzero(game.win_table()):
        assert any(int(mask) & m == m for m in frontier)


@st.composite
def game_triples(draw):
    players = draw(st.integers(min_value=1, max_value=4))

    def one():
        weights = draw(st.lists(st.integers(min_value=0, max_value=2), min_size=players, max_size=players))
        weights[0] = max(weights[0], 1)
        return weighted(draw(st.integers(min_value=1, max_value=sum(weights))), weights)

    return one(), one(), one()


@settings(max_examples=60, deadline=None)
@given(game_triples())
def test_games_equal_is_transitive(triple):
    first, second, third = triple
    if games_equal(first, second).equal and games_equal(second, third).equal:
        assert games_equal(first, third).equal


@settings(max_examples=25, deadline=None)
@given(weighted_games())
def test_equal_representations_chain(game):
    doubled = WeightedGame(AmalgamatedMatrix.from_rows(
        [(row.threshold * 2, [w * 2 for w in row.weights]) for row in game.matrix.rows]
    ))
    explicit = ExplicitGame.from_table(game.players, game.win_table())
    assert games_equal(game, doubled).equal
    assert games_equal(doubled, explicit).equal
    assert games_equal(game, explicit).equal
