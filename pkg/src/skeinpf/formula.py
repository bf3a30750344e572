"""Closed-form Euler exponents and skein module dimensions.

For a torus mapping class g, the graded dimensions of the associated skein
modules assemble into a partition function that factors as an Euler product
prod_k (1 - t^k)^(-c_k).  The exponent c_k counts orbits of g on the torsion
of the group presented by Id - g^k, and admits a closed form split by
conjugacy class:

* g^k = Id (finite order dividing k):        c_k = 1
* g conjugate to T^m, m != 0:                c_k = |m| * k
* g conjugate to -T^m, k even:               c_k = |m| * k / 2 + 1
* g conjugate to -T^m, k odd:                c_k = 4
* otherwise (so tr(g^k) != 2):
      c_k = (1/k) * sum_{d | k} phi(k/d) * |tr(g^d) - 2|

The divisor average is a Burnside count, so it is always an integer, and
this module checks that on every call.  Dimension formulas follow: a cycle type
1^r1 2^r2 ... of a permutation of n contributes the product over k of the
multiset coefficient ((c_k over r_k)), and the dimension in rank n sums these
contributions over all partitions of n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .partitions import CycleType, enumerate_partitions
from .series import EulerExponents, NonIntegralError
from .sl2z import (
    ConjugacyClass,
    FiniteOrder,
    Hyperbolic,
    NegativeShear,
    Shear,
    trace_of_class,
    trace_power,
)


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_totient(n: int) -> int:
    """Euler's phi, the number of units modulo n."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    p = 2
    remaining = n
    while p * p <= remaining:
        if remaining % p == 0:
            while remaining % p == 0:
                remaining //= p
            result -= result // p
        p += 1
    if remaining > 1:
        result -= result // remaining
    return result


def _generic_exponent(trace: int, k: int) -> int:
    # Burnside average over the cyclic group of order k.  Valid whenever
    # tr(g^k) != 2, which holds for hyperbolic g and for finite-order g whose
    # order does not divide k.
    total = sum(
        euler_totient(k // d) * abs(trace_power(trace, d) - 2) for d in divisors(k)
    )
    q, r = divmod(total, k)
    if r:
        raise NonIntegralError(f"divisor sum {total} not divisible by {k}")
    return q


def euler_exponent(cls: ConjugacyClass, k: int) -> int:
    """The exponent c_k of the class, by the closed form.

    The finite-order test comes first: a matrix with g^k = Id always gives
    c_k = 1, including -Id at even k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if isinstance(cls, FiniteOrder):
        if k % cls.order == 0:
            return 1
        return _generic_exponent(trace_of_class(cls), k)
    if isinstance(cls, Shear):
        return abs(cls.m) * k
    if isinstance(cls, NegativeShear):
        return abs(cls.m) * k // 2 + 1 if k % 2 == 0 else 4
    return _generic_exponent(cls.trace, k)


def euler_exponents(cls: ConjugacyClass, max_k: int) -> EulerExponents:
    return EulerExponents(tuple(euler_exponent(cls, k) for k in range(1, max_k + 1)))


def multiset_coefficient(count: int, multiplicity: int) -> int:
    """Number of multisets of size ``multiplicity`` from ``count`` symbols."""
    if count < 0 or multiplicity < 0:
        raise ValueError("arguments must be nonnegative")
    if multiplicity == 0:
        return 1
    return comb(count + multiplicity - 1, multiplicity)


def coinvariant_dimension(cls: ConjugacyClass, ct: CycleType) -> int:
    """Dimension contributed by one cycle type: prod_k ((c_k over r_k))."""
    result = 1
    for k, r in ct.multiplicities:
        result *= multiset_coefficient(euler_exponent(cls, k), r)
    return result


def skein_dimension(cls: ConjugacyClass, n: int) -> int:
    """Skein module dimension in rank n: the cycle type sum over partitions."""
    return skein_dimensions(cls, n)[-1]


def skein_dimensions(cls: ConjugacyClass, max_n: int) -> list[int]:
    """Dimensions for ranks 1..max_n, computing each exponent once."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    cks = [euler_exponent(cls, k) for k in range(1, max_n + 1)]
    out = []
    for n in range(1, max_n + 1):
        total = 0
        for ct in enumerate_partitions(n):
            term = 1
            for k, r in ct.multiplicities:
                term *= multiset_coefficient(cks[k - 1], r)
            total += term
        out.append(total)
    return out


@dataclass(frozen=True)
class RationalPolynomial:
    """A polynomial with Fraction coefficients, ascending by degree."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_coefficients(cls, coeffs) -> "RationalPolynomial":
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return RationalPolynomial.from_coefficients(x + y for x, y in zip(a, b))

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1 or 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return RationalPolynomial.from_coefficients(out)

    def scale(self, factor) -> "RationalPolynomial":
        f = Fraction(factor)
        return RationalPolynomial.from_coefficients(f * c for c in self.coefficients)

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append(("- " if c < 0 else "+ ") + body)
        joined = " ".join(terms)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]


_X = RationalPolynomial.from_coefficients([0, 1])
_TWO = RationalPolynomial.from_coefficients([2])


def _trace_polynomial(d: int) -> RationalPolynomial:
    # p_d(x) = tr(g^d) as a polynomial in x = tr(g); the same recurrence as
    # trace_power, carried out on coefficients.
    prev, cur = _TWO, _X
    for _ in range(d):
        prev, cur = cur, _X * cur + prev.scale(-1)
    return prev


def exponent_polynomial(k: int) -> RationalPolynomial:
    """c_k as a polynomial in the trace x, valid on the branch x > 2.

    There |tr(g^d) - 2| = tr(g^d) - 2, so the Burnside average becomes the
    polynomial (1/k) sum_{d | k} phi(k/d) (p_d(x) - 2).  It takes integer
    values at every integer x > 2 (and nothing is claimed for x <= 2).

    >>> print(exponent_polynomial(2))
    1/2*x^2 + 1/2*x - 3
    """
    if k < 1:
        raise ValueError("k must be positive")
    total = RationalPolynomial.from_coefficients([])
    for d in divisors(k):
        total = total + (_trace_polynomial(d) + _TWO.scale(-1)).scale(euler_totient(k // d))
    return total.scale(Fraction(1, k))
