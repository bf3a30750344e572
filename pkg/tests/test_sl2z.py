"""Matrix arithmetic, trace recurrence and conjugacy classification."""

from __future__ import annotations

import random

import pytest

from skeinpf import (
    IDENTITY,
    S,
    T,
    DeterminantError,
    FiniteOrder,
    Hyperbolic,
    NegativeShear,
    SL2Matrix,
    Shear,
    branch_representatives,
    classify,
    format_matrix,
    parse_matrix,
    random_conjugate,
    same_class,
    trace_power,
)

TS = T * S


def test_determinant_is_enforced():
    with pytest.raises(DeterminantError):
        SL2Matrix(1, 0, 0, 2)
    with pytest.raises(DeterminantError):
        SL2Matrix(2, 0, 0, 2)


def test_group_identities():
    assert S ** 4 == IDENTITY
    assert S ** 2 == -IDENTITY
    assert TS ** 6 == IDENTITY
    assert (-TS) ** 3 == IDENTITY
    assert (T ** 3) * (T ** -3) == IDENTITY
    g = parse_matrix("2,1;3,2")
    assert g * g.inverse() == IDENTITY
    assert g ** 0 == IDENTITY
    assert g ** -2 == (g ** 2).inverse()


def test_trace_power_small_values():
    assert trace_power(4, 0) == 2
    assert trace_power(4, 1) == 4
    assert trace_power(4, 2) == 14
    assert trace_power(3, 2) == 7
    assert [trace_power(1, d) for d in range(7)] == [2, 1, -1, -2, -1, 1, 2]
    with pytest.raises(ValueError):
        trace_power(4, -1)


def test_trace_power_matches_matrix_powers():
    rng = random.Random(11)
    for g in branch_representatives():
        h = random_conjugate(g, rng.randrange(10 ** 6))
        for d in range(9):
            assert trace_power(h.trace, d) == (h ** d).trace


CLASSIFY_CASES = [
    ("2,1;3,2", Hyperbolic(4)),
    ("0,1;-1,3", Hyperbolic(3)),
    ("-3,-1;1,0", Hyperbolic(-3)),
    ("1,0;0,1", FiniteOrder(1)),
    ("-1,0;0,-1", FiniteOrder(2)),
    ("0,-1;1,0", FiniteOrder(4)),
    ("1,-1;1,0", FiniteOrder(6)),
    ("-1,1;-1,0", FiniteOrder(3)),
    ("1,5;0,1", Shear(5)),
    ("1,-3;0,1", Shear(-3)),
    ("1,0;4,1", Shear(-4)),
    ("-1,-1;0,-1", NegativeShear(1)),
    ("-1,2;0,-1", NegativeShear(-2)),
]


@pytest.mark.parametrize("text,expected", CLASSIFY_CASES)
def test_classify_cases(text, expected):
    assert classify(parse_matrix(text)) == expected


def test_classify_shear_representatives():
    for m in (1, -1, 2, -2, 3, -3):
        assert classify(T ** m) == Shear(m)
        assert classify(-(T ** m)) == NegativeShear(m)


def test_classify_invariant_under_conjugation():
    for g in branch_representatives():
        cls = classify(g)
        for seed in range(12):
            conj = random_conjugate(g, seed)
            assert conj.trace == g.trace
            assert same_class(classify(conj), cls)


def test_shear_parameter_magnitude_survives_conjugation():
    g = T ** 2
    conj = random_conjugate(g, 5)
    got = classify(conj)
    assert isinstance(got, Shear) and abs(got.m) == 2


def test_random_conjugate_is_deterministic():
    g = parse_matrix("2,1;3,2")
    assert random_conjugate(g, 7) == random_conjugate(g, 7)
    assert random_conjugate(g, 7).trace == 4


def test_parse_and_format():
    assert parse_matrix("0,-1;1,0") == S
    assert parse_matrix(" 2 , 1 ; 3 , 2 ") == parse_matrix("2,1;3,2")
    assert format_matrix(-T) == "-1,-1;0,-1"
    assert parse_matrix(format_matrix(TS)) == TS
    for bad in ("1,0,0,1", "1,0;0", "1;0", "a,b;c,d", ""):
        with pytest.raises(ValueError):
            parse_matrix(bad)
    with pytest.raises(DeterminantError):
        parse_matrix("1,0;0,2")


def test_branch_representatives_cover_all_branches():
    reps = branch_representatives()
    classes = [classify(g) for g in reps]
    assert FiniteOrder(1) in classes
    assert FiniteOrder(2) in classes
    assert FiniteOrder(3) in classes
    assert FiniteOrder(4) in classes
    assert FiniteOrder(6) in classes
    assert {c.m for c in classes if isinstance(c, Shear)} == {1, 2, 3}
    assert {c.m for c in classes if isinstance(c, NegativeShear)} == {1, 2, 3}
    assert {c.trace for c in classes if isinstance(c, Hyperbolic)} == {
        -6, -5, -4, -3, 3, 4, 5, 6,
    }
