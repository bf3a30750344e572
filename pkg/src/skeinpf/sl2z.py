"""Integer 2x2 matrices of determinant 1 and their conjugacy classes.

A matrix in SL(2,Z) acts on the torus, and everything this package computes
from it depends only on its conjugacy class.  Up to conjugation and up to the
sign ambiguity in the shear parameter, a matrix g falls into exactly one of:

* ``Hyperbolic(trace)``       |trace| > 2
* ``FiniteOrder(order)``      order in {1, 2, 3, 4, 6}; traces 2, -2, -1, 0, 1
* ``Shear(m)``                conjugate to T**m with m != 0 (trace 2, not Id)
* ``NegativeShear(m)``        conjugate to -T**m with m != 0 (trace -2, not -Id)

where T is the standard unit shear.  ``classify`` computes the class from the
trace plus, in the trace +-2 cases, the gcd of the entries of g -+ Id.

>>> classify(parse_matrix("2,1;3,2"))
Hyperbolic(trace=4)
>>> classify(S * S)
FiniteOrder(order=2)
>>> classify(T ** -3)
Shear(m=-3)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd


class DeterminantError(ValueError):
    """Raised when a matrix that should have determinant 1 does not."""


@dataclass(frozen=True)
class SL2Matrix:
    """An element ((a, b), (c, d)) of SL(2,Z).  Entries are exact ints."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise DeterminantError(f"determinant is {det}, expected 1")

    @property
    def trace(self) -> int:
        return self.a + self.d

    def entries(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "SL2Matrix":
        base = self if k >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(k)):
            result = result * base
        return result


IDENTITY = SL2Matrix(1, 0, 0, 1)
S = SL2Matrix(0, -1, 1, 0)
T = SL2Matrix(1, 1, 0, 1)


def trace_power(trace: int, d: int) -> int:
    """Trace of g**d given the trace of g.

    Traces of powers satisfy the two-term recurrence
    tr(g**(d+1)) = tr(g) * tr(g**d) - tr(g**(d-1)), anchored at
    tr(g**0) = 2.  The value depends on g only through its trace.

    >>> trace_power(4, 2)
    14
    >>> [trace_power(0, d) for d in range(5)]
    [2, 0, -2, 0, 2]
    """
    if d < 0:
        raise ValueError("power must be nonnegative")
    prev, cur = 2, trace
    for _ in range(d):
        prev, cur = cur, trace * cur - prev
    return prev


@dataclass(frozen=True)
class Hyperbolic:
    trace: int  # |trace| > 2


@dataclass(frozen=True)
class FiniteOrder:
    order: int  # 1, 2, 3, 4 or 6


@dataclass(frozen=True)
class Shear:
    m: int  # conjugate to T**m, m != 0


@dataclass(frozen=True)
class NegativeShear:
    m: int  # conjugate to -T**m, m != 0


ConjugacyClass = Hyperbolic | FiniteOrder | Shear | NegativeShear

# Traces realized by each finite order. Orders 3, 4, 6 are determined by
# the trace alone; orders 1 and 2 are the scalar matrices.
_ORDER_BY_TRACE = {-1: 3, 0: 4, 1: 6}
_TRACE_BY_ORDER = {1: 2, 2: -2, 3: -1, 4: 0, 6: 1}


def trace_of_class(cls: ConjugacyClass) -> int:
    if isinstance(cls, Hyperbolic):
        return cls.trace
    if isinstance(cls, FiniteOrder):
        return _TRACE_BY_ORDER[cls.order]
    return 2 if isinstance(cls, Shear) else -2


def _shear_parameter(n: tuple[int, int, int, int]) -> int:
    # n is g -+ Id written as m times a conjugate of the nilpotent ((0,1),(0,0)).
    # Such a conjugate is (-pr, p**2; -r**2, pr) with gcd(p, r) = 1, so |m| is
    # the gcd of the entries and the b and -c slots both carry the sign of m.
    a, b, c, d = n
    g = gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)))
    sign = 1 if (b > 0 or (b == 0 and c < 0)) else -1
    return sign * g


def classify(g: SL2Matrix) -> ConjugacyClass:
    """Conjugacy class of g, with the shear parameter m determined up to sign.

    The sign of m is read off the unique nonzero value among b/|m| and -c/|m|
    of g - Id (of -(g + Id) in the negative shear case), which matches the
    representatives T**m and -T**m themselves.  Conjugation can flip it;
    everything computed downstream depends on |m| only.
    """
    t = g.trace
    if abs(t) > 2:
        return Hyperbolic(t)
    if t == 2:
        if g == IDENTITY:
            return FiniteOrder(1)
        return Shear(_shear_parameter((g.a - 1, g.b, g.c, g.d - 1)))
    if t == -2:
        if g == -IDENTITY:
            return FiniteOrder(2)
        return NegativeShear(_shear_parameter((-g.a - 1, -g.b, -g.c, -g.d - 1)))
    return FiniteOrder(_ORDER_BY_TRACE[t])


def same_class(x: ConjugacyClass, y: ConjugacyClass) -> bool:
    """Equality of classes ignoring the sign of the shear parameter."""
    if type(x) is not type(y):
        return False
    if isinstance(x, (Shear, NegativeShear)):
        return abs(x.m) == abs(y.m)
    return x == y


def random_conjugate(g: SL2Matrix, seed: int, max_letters: int = 12) -> SL2Matrix:
    """h * g * h**-1 for a seeded pseudo-random word h in S and T.

    The word uses the alphabet {S, S**-1, T, T**-1} and has at most
    max_letters letters.  Deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    letters = (S, S.inverse(), T, T.inverse())
    h = IDENTITY
    for _ in range(rng.randint(0, max_letters)):
        h = h * rng.choice(letters)
    return h * g * h.inverse()


def parse_matrix(text: str) -> SL2Matrix:
    """Parse the matrix format "a,b;c,d" (whitespace tolerated).

    >>> parse_matrix(" 0, -1; 1, 0 ") == S
    True
    """
    rows = text.split(";")
    if len(rows) != 2:
        raise ValueError(f"expected two rows separated by ';' in {text!r}")
    values = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected two entries separated by ',' in {row!r}")
        values.extend(int(p.strip()) for p in parts)
    return SL2Matrix(*values)


def format_matrix(g: SL2Matrix) -> str:
    return f"{g.a},{g.b};{g.c},{g.d}"


def branch_representatives(
    trace_min: int = -6, trace_max: int = 6, shear_max: int = 3
) -> list[SL2Matrix]:
    """Matrices covering every conjugacy branch, for sweeps and cross-checks.

    Companion matrices (t,-1;1,0) for each hyperbolic trace in range, the five
    finite-order representatives, and the shears T**m and -T**m for
    1 <= m <= shear_max.
    """
    reps = [IDENTITY, -IDENTITY, S, T * S, -(T * S)]
    for m in range(1, shear_max + 1):
        reps.append(T ** m)
        reps.append(-(T ** m))
    for t in range(trace_min, trace_max + 1):
        if abs(t) > 2:
            reps.append(SL2Matrix(t, -1, 1, 0))
    return reps
