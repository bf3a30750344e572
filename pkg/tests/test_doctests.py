"""Run the doctest examples embedded in the library modules."""

from __future__ import annotations

import doctest

import pytest

import skeinpf.exactla
import skeinpf.formula
import skeinpf.oracle
import skeinpf.partitions
import skeinpf.series
import skeinpf.sl2z

MODULES = [
    skeinpf.sl2z,
    skeinpf.exactla,
    skeinpf.partitions,
    skeinpf.series,
    skeinpf.formula,
    skeinpf.oracle,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
