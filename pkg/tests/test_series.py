"""Euler product expansion and exponent extraction."""

from __future__ import annotations

import random

import pytest

from skeinpf import (
    EulerExponents,
    IntSeries,
    expand_euler_product,
    extract_euler_exponents,
    multiply_series,
)

# prod (1 - t^k)^(-k) counts plane partitions
PLANE_PARTITIONS = (1, 1, 3, 6, 13, 24, 48, 86, 160, 282)


def test_expand_plane_partitions():
    assert expand_euler_product(range(1, 10), 9).coefficients == PLANE_PARTITIONS


def test_expand_all_ones_gives_partition_numbers():
    series = expand_euler_product([1] * 10, 10)
    assert series.coefficients == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_expand_trivial_and_single_factor():
    assert expand_euler_product([0, 0, 0], 3).coefficients == (1, 0, 0, 0)
    # (1 - t)^(-1) is the geometric series
    assert expand_euler_product([1, 0, 0, 0], 4).coefficients == (1, 1, 1, 1, 1)
    # (1 - t^2)^(-1) skips odd orders
    assert expand_euler_product([0, 1, 0, 0], 4).coefficients == (1, 0, 1, 0, 1)
    # a negative exponent gives the polynomial (1 - t) itself
    assert expand_euler_product([-1, 0, 0], 3).coefficients == (1, -1, 0, 0)


def test_expand_input_validation():
    with pytest.raises(ValueError):
        expand_euler_product([1, 2], 5)  # not enough exponents


def test_extract_inverts_expand():
    values = (4, 1, 4, 1, 4, 1)
    series = expand_euler_product(values, 6)
    assert extract_euler_exponents(series).values == values


def test_extract_requires_monic():
    with pytest.raises(ValueError):
        extract_euler_exponents(IntSeries((2, 1)))


def test_round_trip_random_exponents():
    rng = random.Random(99)
    for _ in range(500):
        order = rng.randint(1, 40)
        values = tuple(rng.randint(-3, 6) for _ in range(order))
        series = expand_euler_product(values, order)
        recovered = extract_euler_exponents(series)
        assert recovered.values == values


def test_negative_positions_reported_not_raised():
    series = expand_euler_product((2, -1, 1), 3)
    exps = extract_euler_exponents(series)
    assert exps.values == (2, -1, 1)
    assert exps.negative_positions() == (2,)
    assert EulerExponents((1, 1, 1)).negative_positions() == ()


def test_exponents_accessors():
    exps = EulerExponents((5, 7, 9))
    assert exps.max_order == 3
    assert exps.value(1) == 5 and exps.value(3) == 9
    with pytest.raises(IndexError):
        exps.value(0)
    with pytest.raises(IndexError):
        exps.value(4)


def test_multiply_series():
    geo = expand_euler_product([1, 0, 0, 0, 0], 5)
    one_minus_t = IntSeries((1, -1, 0, 0, 0, 0))
    assert multiply_series(geo, one_minus_t).coefficients == (1, 0, 0, 0, 0, 0)
    a = IntSeries((1, 2, 3))
    b = IntSeries((1, 1))
    assert multiply_series(a, b).coefficients == (1, 3)
    assert multiply_series(a, b, order=2).coefficients == (1, 3, 5)


def test_series_validation():
    with pytest.raises(ValueError):
        IntSeries(())
    s = IntSeries.one(4)
    assert s.order == 4 and s.coefficient(0) == 1 and s.coefficient(4) == 0
