"""Truncated integer power series and Euler product exponents.

A series here is the coefficient list a_0..a_K of a Z[[t]] element truncated
at order K.  The package's generating functions all arise as Euler products
prod_k (1 - t^k)^(-c_k) with integer exponents c_k, and the two conversions
below move between the exponent sequence and the coefficient sequence without
ever leaving integer arithmetic.

Taking log-derivatives of the product gives the convolution identity

    n * a_n = sum_{i=1..n} b_i * a_{n-i},   b_i = sum_{d | i} d * c_d,

which determines the a_n from the c_k by exact division and, run backwards,
the c_k from the a_n.  A failed division certifies that the input is not an
Euler product with integer exponents (NonIntegralError).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union


class NonIntegralError(ArithmeticError):
    """Raised when an exact integer division required by a recursion fails."""


@dataclass(frozen=True)
class EulerExponents:
    """Exponents c_1..c_K of an Euler product prod (1 - t^k)^(-c_k)."""

    values: tuple[int, ...]

    @property
    def max_order(self) -> int:
        return len(self.values)

    def value(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise IndexError(f"exponent index {k} out of range")
        return self.values[k - 1]

    def negative_positions(self) -> tuple[int, ...]:
        """Indices k with c_k < 0; nonempty flags a positivity violation."""
        return tuple(k for k, c in enumerate(self.values, start=1) if c < 0)


@dataclass(frozen=True)
class IntSeries:
    """Coefficients a_0..a_K of a truncated integer power series."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> int:
        return self.coefficients[n]

    @classmethod
    def one(cls, order: int) -> "IntSeries":
        return cls((1,) + (0,) * order)


def multiply_series(s: IntSeries, t: IntSeries, order: int | None = None) -> IntSeries:
    """Cauchy product truncated at ``order`` (default: the shorter input)."""
    if order is None:
        order = min(s.order, t.order)
    out = [0] * (order + 1)
    for i, a in enumerate(s.coefficients[: order + 1]):
        if a == 0:
            continue
        for j, b in enumerate(t.coefficients[: order + 1 - i]):
            out[i + j] += a * b
    return IntSeries(tuple(out))


def _exponent_values(exponents: Union[EulerExponents, Sequence[int]]) -> tuple[int, ...]:
    if isinstance(exponents, EulerExponents):
        return exponents.values
    return tuple(int(c) for c in exponents)


def expand_euler_product(
    exponents: Union[EulerExponents, Sequence[int]], order: int
) -> IntSeries:
    """Coefficients a_0..a_order of prod_k (1 - t^k)^(-c_k).

    Needs c_1..c_order; raises NonIntegralError if the recursion's division
    ever fails, which cannot happen for genuine integer exponents.

    >>> expand_euler_product(range(1, 10), 9).coefficients
    (1, 1, 3, 6, 13, 24, 48, 86, 160, 282)
    """
    values = _exponent_values(exponents)
    if order < 0:
        raise ValueError("order must be nonnegative")
    if len(values) < order:
        raise ValueError(f"need exponents up to order {order}, got {len(values)}")
    b = [0] * (order + 1)
    for d in range(1, order + 1):
        c = values[d - 1]
        if c == 0:
            continue
        for n in range(d, order + 1, d):
            b[n] += d * c
    a = [1] + [0] * order
    for n in range(1, order + 1):
        total = sum(b[i] * a[n - i] for i in range(1, n + 1))
        q, r = divmod(total, n)
        if r:
            raise NonIntegralError(f"coefficient a_{n} is not an integer")
        a[n] = q
    return IntSeries(tuple(a))


def extract_euler_exponents(series: IntSeries) -> EulerExponents:
    """Exponents c_1..c_K with prod (1 - t^k)^(-c_k) = series + O(t^(K+1)).

    The series must have constant coefficient 1.  Negative exponents are
    returned as computed (see EulerExponents.negative_positions); a
    NonIntegralError means no integer exponent sequence exists at all.
    """
    a = series.coefficients
    if a[0] != 1:
        raise ValueError("series must have constant coefficient 1")
    order = series.order
    b = [0] * (order + 1)
    c = [0] * (order + 1)
    for n in range(1, order + 1):
        b[n] = n * a[n] - sum(b[i] * a[n - i] for i in range(1, n))
        divisor_part = sum(d * c[d] for d in range(1, n) if n % d == 0)
        q, r = divmod(b[n] - divisor_part, n)
        if r:
            raise NonIntegralError(f"exponent c_{n} is not an integer")
        c[n] = q
    return EulerExponents(tuple(c[1:]))
