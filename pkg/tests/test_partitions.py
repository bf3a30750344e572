"""Cycle types, partition enumeration and the natural permutation."""

from __future__ import annotations

import pytest

from skeinpf import CycleType, enumerate_partitions, natural_permutation, partition_count

# p(1)..p(12)
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_cycle_type_construction():
    ct = CycleType.from_parts([3, 1, 3, 1, 1])
    assert ct.n == 9
    assert ct.multiplicities == ((1, 3), (3, 2))
    assert ct.parts() == (3, 3, 1, 1, 1)
    assert str(ct) == "3,3,1,1,1"


def test_cycle_type_validation():
    with pytest.raises(ValueError):
        CycleType.from_parts([])
    with pytest.raises(ValueError):
        CycleType.from_parts([0, 1])
    with pytest.raises(ValueError):
        CycleType(4, ((2, 1),))  # parts sum to 2, not 4
    with pytest.raises(ValueError):
        CycleType(4, ((2, 0), (1, 4)))  # zero multiplicity
    with pytest.raises(ValueError):
        CycleType(4, ((3, 1), (1, 1)))  # parts not ascending


def test_enumeration_order_for_four():
    got = [ct.parts() for ct in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumeration_counts():
    for n, expected in enumerate(PARTITION_COUNTS, start=1):
        types = list(enumerate_partitions(n))
        assert len(types) == expected == partition_count(n)
        assert len(set(types)) == expected
        assert all(ct.n == n for ct in types)
    with pytest.raises(ValueError):
        list(enumerate_partitions(0))


def test_partition_count_larger_values():
    assert partition_count(20) == 627
    assert partition_count(30) == 5604
    assert partition_count(50) == 204226


def test_natural_permutation():
    ct = CycleType.from_parts([3, 3, 1, 1, 1])
    w = natural_permutation(ct)
    assert w == (0, 1, 2, 4, 5, 3, 7, 8, 6)
    # cycle structure of w matches the cycle type
    seen = [False] * ct.n
    lengths = []
    for start in range(ct.n):
        if seen[start]:
            continue
        size, x = 0, start
        while not seen[x]:
            seen[x] = True
            size += 1
            x = w[x]
        lengths.append(size)
    assert sorted(lengths) == sorted(ct.parts())


def test_natural_permutation_is_permutation():
    for n in range(1, 8):
        for ct in enumerate_partitions(n):
            w = natural_permutation(ct)
            assert sorted(w) == list(range(n))
