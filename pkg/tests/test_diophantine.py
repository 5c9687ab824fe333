import math

import pytest
from hypothesis import given, strategies as st

from intfrustum.diophantine import (
    CompletenessViolation,
    ThreeSquaresParams,
    ThreeSquaresSolution,
    TwoSquareParams,
    TwoSquareSolution,
    enumerate_three_squares,
    enumerate_two_square,
    find_params_for,
    find_two_square_params,
    three_squares_from_params,
    three_squares_subfamily,
    two_square_from_params,
)
from intfrustum.exactmath import DomainError, ParameterError

from oracles import three_squares_double_loop, two_square_triple_loop


@pytest.mark.parametrize(
    "l, m, n, expected",
    [(1, 1, 1, (1, 2, 2, 3)), (1, 3, 2, (3, 2, 6, 7))],
)
def test_three_squares_from_params(l, m, n, expected):
    assert three_squares_from_params(ThreeSquaresParams(l, m, n)).as_tuple() == expected


@pytest.mark.parametrize("l, m, n", [(2, 1, 5), (1, 3, 3), (2, 2, 0)])
def test_three_squares_params_rejected(l, m, n):
    with pytest.raises(ParameterError):
        ThreeSquaresParams(l, m, n)


@pytest.mark.parametrize(
    "l, m, expected",
    [(1, 1, (1, 2, 2, 3)), (3, 1, (9, 6, 2, 11)), (2, 2, (7, 4, 4, 9))],
)
def test_subfamily(l, m, expected):
    s = three_squares_subfamily(l, m)
    assert s.as_tuple() == expected
    assert s == three_squares_from_params(ThreeSquaresParams(l, m, 1))


def test_solution_type_rejects_non_solutions():
    with pytest.raises(DomainError):
        ThreeSquaresSolution(1, 1, 1, 2)
    with pytest.raises(DomainError):
        TwoSquareSolution(1, 1, 2)


def test_enumerate_three_squares_small():
    assert enumerate_three_squares(2) == []
    assert [s.as_tuple() for s in enumerate_three_squares(3)] == [(1, 2, 2, 3)]
    frozen = [(1, 2, 2, 3), (2, 4, 4, 6), (2, 3, 6, 7)]
    assert three_squares_double_loop(7) == frozen
    got = [s.as_tuple() for s in enumerate_three_squares(7)]
    assert got == frozen
    assert (3, 6, 6, 9) not in got


def test_enumerate_three_squares_matches_double_loop():
    got = [s.as_tuple() for s in enumerate_three_squares(40)]
    expected = sorted(three_squares_double_loop(40), key=lambda s: (s[3], s[2], s[1], s[0]))
    assert got == expected


@pytest.mark.parametrize(
    "sol, params",
    [((2, 3, 6, 7), (1, 3, 2)), ((1, 2, 2, 3), (1, 1, 1)), ((4, 4, 2, 6), (1, 2, 1))],
)
def test_find_params_for(sol, params):
    s = ThreeSquaresSolution(*sol)
    w = find_params_for(s)
    assert (w.params.l, w.params.m, w.params.n) == params
    out = three_squares_from_params(w.params)
    assert out.t == s.t
    assert [s.legs()[i] for i in w.perm] == list(out.legs())


def test_find_params_for_example_witness_also_valid():
    # (l, m, n) = (2, 2, 2) reproduces (4, 4, 2, 6) too; the least witness is (1, 2, 1).
    out = three_squares_from_params(ThreeSquaresParams(2, 2, 2))
    assert sorted(out.legs()) == [2, 4, 4] and out.t == 6


def test_find_params_for_reports_violation():
    class Fake:
        t = 3

        def legs(self):
            return (1, 1, 1)

        def as_tuple(self):
            return (1, 1, 1, 3)

    with pytest.raises(CompletenessViolation):
        find_params_for(Fake())


@pytest.mark.parametrize(
    "delta, m, n, expected",
    [(1, 1, 1, (1, 2, 3)), (1, 1, 2, (7, 4, 9)), (2, 1, 1, (2, 4, 6))],
)
def test_two_square_from_params(delta, m, n, expected):
    assert two_square_from_params(TwoSquareParams(delta, m, n)).as_tuple() == expected


def test_two_square_params_need_coprime():
    with pytest.raises(ParameterError):
        TwoSquareParams(1, 2, 4)


def test_enumerate_two_square_small():
    assert enumerate_two_square(2) == []
    assert [s.as_tuple() for s in enumerate_two_square(3)] == [(1, 2, 3)]
    frozen = [(1, 2, 3), (2, 4, 6), (7, 4, 9), (3, 6, 9)]
    assert two_square_triple_loop(9) == frozen
    assert [s.as_tuple() for s in enumerate_two_square(9)] == frozen


def test_enumerate_two_square_matches_triple_loop():
    got = [s.as_tuple() for s in enumerate_two_square(80)]
    assert got == sorted(two_square_triple_loop(80), key=lambda s: (s[2], s[1], s[0]))


@given(st.integers(1, 1000), st.integers(1, 1000), st.data())
def test_three_squares_soundness(l, m, data):
    total = l * l + m * m
    candidates = [n for n in range(1, math.isqrt(total) + 1) if total % n == 0 and n * n < total]
    n = data.draw(st.sampled_from(candidates))
    s = three_squares_from_params(ThreeSquaresParams(l, m, n))
    assert s.t**2 == s.x**2 + s.y**2 + s.z**2
    sub = three_squares_subfamily(l, m)
    assert sub.t**2 == sub.x**2 + sub.y**2 + sub.z**2


@given(st.integers(1, 1000), st.integers(1, 1000), st.integers(1, 1000))
def test_two_square_soundness(delta, m, n):
    if math.gcd(m, n) != 1:
        return
    s = two_square_from_params(TwoSquareParams(delta, m, n))
    assert s.Z**2 == s.X**2 + 2 * s.Y**2


def test_three_squares_completeness_to_60():
    for s in enumerate_three_squares(60):
        w = find_params_for(s)
        out = three_squares_from_params(w.params)
        assert sorted(out.legs()) == sorted(s.legs()) and out.t == s.t


def test_two_square_completeness_to_200():
    reachable = set()
    for m in range(1, 15):
        for n in range(1, 11):
            if math.gcd(m, n) != 1 or m * m + 2 * n * n > 200:
                continue
            for delta in range(1, 200 // (m * m + 2 * n * n) + 1):
                reachable.add(two_square_from_params(TwoSquareParams(delta, m, n)).as_tuple())
    brute = [s.as_tuple() for s in enumerate_two_square(200)]
    assert set(brute) == reachable
    for s in enumerate_two_square(200):
        assert two_square_from_params(find_two_square_params(s)) == s


def test_parity_and_no_equilateral():
    for s in enumerate_three_squares(60):
        assert sum(v % 2 == 0 for v in s.legs()) >= 2
        assert not (s.x == s.y == s.z)
        assert s.x <= s.y <= s.z


def test_subfamily_containment():
    # enumerating up to t = 1801 costs ~5e8 steps, so larger pairs get the identity check only
    found = {s.as_tuple() for s in enumerate_three_squares(200)}
    checked_pairs = 0
    for l in range(1, 31):
        for m in range(1, 31):
            s = three_squares_subfamily(l, m)
            if s.t <= 200:
                assert s.canonical().as_tuple() in found
                checked_pairs += 1
            else:
                assert s.canonical() == ThreeSquaresSolution(*sorted(s.legs()), s.t)
    assert checked_pairs > 100


def test_enumeration_independent_of_workers():
    assert enumerate_three_squares(30, workers=1) == enumerate_three_squares(30, workers=3)
    assert enumerate_two_square(60, workers=1) == enumerate_two_square(60, workers=2)
