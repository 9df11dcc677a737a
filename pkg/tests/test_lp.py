from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.dimension.lp import (
    farkas_certificate,
    find_feasible_point,
    is_farkas_certificate,
    satisfies,
    solve_feasibility,
)


def test_trivial_system_has_origin():
    assert find_feasible_point([[1, 1]], [2]) == (Fraction(0), Fraction(0))


def test_lower_bound_constraint():
    # x1 >= 1, x1 + x2 <= 3
    A = [[-1, 0], [1, 1]]
    b = [-1, 3]
    point = find_feasible_point(A, b)
    assert point is not None
    assert satisfies(A, b, point)
    assert point[0] >= 1


def test_infeasible_interval():
    # x <= 1 e x >= 2
    A = [[1], [-1]]
    b = [1, -2]
    assert find_feasible_point(A, b) is None
    certificate = farkas_certificate(A, b)
    assert certificate is not None
    assert is_farkas_certificate(A, b, certificate)


def test_certificate_absent_for_feasible_system():
    assert farkas_certificate([[1]], [1]) is None


def test_solve_feasibility_exact_fractions():
    # 3x >= 1  ->  ponto racional exato
    result = solve_feasibility([[-3]], [-1])
    assert result.feasible
    assert result.point[0] >= Fraction(1, 3)
    assert all(isinstance(v, Fraction) for v in result.point)


def test_solve_feasibility_reports_certificate():
    result = solve_feasibility([[1, 1], [-1, -1]], [1, -3])
    assert not result.feasible
    assert result.certificate is not None


@st.composite
def small_systems(draw):
    cols = draw(st.integers(min_value=1, max_value=3))
    rows = draw(st.integers(min_value=1, max_value=4))
    entries = st.integers(min_value=-4, max_value=4)
    A = [[draw(entries) for _ in range(cols)] for _ in range(rows)]
    b = [draw(entries) for _ in range(rows)]
    return A, b


@settings(max_examples=60, deadline=None)
@given(small_systems())
def test_every_answer_is_checkable(system):
    A, b = system
    result = solve_feasibility(A, b)
    if result.feasible:
        assert satisfies([[Fraction(v) for v in row] for row in A], [Fraction(v) for v in b], result.point)
    else:
        assert is_farkas_certificate(A, b, result.certificate)


@pytest.mark.parametrize("A, b", [
    ([[1, -1], [-1, 1]], [0, 0]),
    ([[2, 1], [1, 3], [-1, -1]], [4, 6, -1]),
])
def test_degenerate_systems(A, b):
    result = solve_feasibility(A, b)
    assert result.feasible
    assert satisfies(A, b, result.point)
