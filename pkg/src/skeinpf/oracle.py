"""Brute-force ground truth for the closed-form exponents and dimensions.

Everything here recomputes quantities of the formula module from first
principles, by explicit enumeration of finite abelian groups, and exists to
be compared against the closed forms.  The central object for a matrix g and
a positive k is the cokernel of Id - g^k: its torsion part is a finite group
on which g acts, every orbit has size dividing k (g^k acts trivially by
construction), and the exponent c_k is the number of orbits.

The enumeration is uniform over all conjugacy classes; no branch looks at
the trace.  Degenerate cases simply show up as free ranks: g^k = Id gives
free rank 2 and a trivial torsion group, shears give free rank 1 and a
cyclic torsion group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .exactla import (
    IntMatrix,
    block_diagonal,
    cokernel,
    CokernelStructure,
    det,
    identity_minus,
    induced_endomorphism,
    permutation_tensor,
)
from .formula import divisors, euler_totient
from .partitions import CycleType, natural_permutation
from .series import NonIntegralError
from .sl2z import FiniteOrder, SL2Matrix, classify, trace_power

ELEMENT_CAP = 10 ** 7
TUPLE_CAP = 10 ** 6


class CapExceeded(RuntimeError):
    """An enumeration would visit more elements than the configured cap."""

    def __init__(self, torsion_size: int, cap: int):
        super().__init__(f"enumeration of size {torsion_size} exceeds cap {cap}")
        self.torsion_size = torsion_size
        self.cap = cap


class DegenerateError(ValueError):
    """The Burnside count is undefined because tr(g^k) = 2."""


@dataclass(frozen=True)
class OrbitReport:
    """Orbit census of the action on the torsion of coker(Id - g^k).

    fixed_point_counts[p - 1] is the number of elements fixed by g^p, for
    p = 1..k; the count at p = k equals element_count.
    """

    group_size: int
    element_count: int
    orbit_count: int
    fixed_point_counts: tuple[int, ...]
    free_rank: int


def _as_int_matrix(g: SL2Matrix) -> IntMatrix:
    return IntMatrix.from_rows(g.entries())


def twist_presentation(g: SL2Matrix, k: int) -> IntMatrix:
    """The 2x2 presentation Id - g^k of the level-k twisted homology group."""
    if k < 1:
        raise ValueError("k must be positive")
    return identity_minus(_as_int_matrix(g ** k))


def _torsion_action(
    g: SL2Matrix, k: int, cap: int | None = None
) -> tuple[CokernelStructure, "list[int]"]:
    """Cokernel of Id - g^k plus the permutation induced by g on its torsion.

    Torsion elements are indexed in mixed radix over the invariant factors
    (at most two of them for a 2x2 presentation); the returned list sends
    each index to the index of its image under g.  The cap is enforced
    before the index list is materialized.
    """
    ck = cokernel(twist_presentation(g, k))
    if cap is not None and ck.torsion_size > cap:
        raise CapExceeded(ck.torsion_size, cap)
    act = induced_endomorphism(ck, _as_int_matrix(g))
    mods = act.moduli
    if len(mods) == 0:
        return ck, [0]
    if len(mods) == 1:
        d = mods[0]
        (a,) = act.matrix[0]
        return ck, [(a * x) % d for x in range(d)]
    if len(mods) == 2:
        d1, d2 = mods
        (m00, m01), (m10, m11) = act.matrix
        perm = [0] * (d1 * d2)
        idx = 0
        for i in range(d1):
            r1 = m00 * i
            r2 = m10 * i
            for j in range(d2):
                perm[idx] = ((r1 + m01 * j) % d1) * d2 + (r2 + m11 * j) % d2
                idx += 1
        return ck, perm
    # A 2x2 presentation never has more than two factors; keep a generic
    # fallback so the helper stays honest if reused.
    strides = []
    acc = 1
    for d in reversed(mods):
        strides.append(acc)
        acc *= d
    strides.reverse()
    perm = []
    for coords in product(*(range(d) for d in mods)):
        image = act.apply(coords)
        perm.append(sum(s * x for s, x in zip(strides, image)))
    return ck, perm


def _cycles(perm: list[int]) -> tuple[list[int], list[int]]:
    """Orbit label per index plus the length of each labeled cycle."""
    labels = [-1] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if labels[start] != -1:
            continue
        label = len(lengths)
        size = 0
        x = start
        while labels[x] == -1:
            labels[x] = label
            size += 1
            x = perm[x]
        lengths.append(size)
    return labels, lengths


def orbit_report(g: SL2Matrix, k: int, cap: int = ELEMENT_CAP) -> OrbitReport:
    """Count orbits of g on the torsion of coker(Id - g^k) by enumeration.

    Raises CapExceeded if the torsion group has more than ``cap`` elements.
    The orbit count here is the ground truth for the closed-form c_k.
    """
    ck, perm = _torsion_action(g, k, cap)
    _, lengths = _cycles(perm)
    # g^k acts trivially on coker(Id - g^k), so orbit sizes divide k.
    assert all(k % length == 0 for length in lengths)
    counts_by_length: dict[int, int] = {}
    for length in lengths:
        counts_by_length[length] = counts_by_length.get(length, 0) + 1
    fixed = tuple(
        sum(length * cnt for length, cnt in counts_by_length.items() if p % length == 0)
        for p in range(1, k + 1)
    )
    return OrbitReport(
        group_size=k,
        element_count=ck.torsion_size,
        orbit_count=len(lengths),
        fixed_point_counts=fixed,
        free_rank=ck.free_rank,
    )


def euler_exponent_burnside(g: SL2Matrix, k: int) -> int:
    """The Burnside average (1/k) sum_{d | k} phi(k/d) |tr(g^d) - 2|.

    Defined only when tr(g^k) != 2 (DegenerateError otherwise); each
    |tr(g^d) - 2| is then the size of the fixed subgroup of g^d.  Integrality
    of the average is part of the claim, so a failure raises
    NonIntegralError instead of rounding.
    """
    if k < 1:
        raise ValueError("k must be positive")
    tr = g.trace
    if trace_power(tr, k) == 2:
        raise DegenerateError(f"tr(g^{k}) = 2, fixed subgroups are infinite")
    total = sum(euler_totient(k // d) * abs(trace_power(tr, d) - 2) for d in divisors(k))
    q, r = divmod(total, k)
    if r:
        raise NonIntegralError(f"Burnside sum {total} not divisible by {k}")
    return q


def fixed_count_prediction(g: SL2Matrix, k: int, p: int) -> int:
    """|det(Id - g^gcd)| with the gcd taken over k, p and any finite order.

    Predicts OrbitReport.fixed_point_counts[p - 1] whenever
    det(Id - g^k) != 0.
    """
    cls = classify(g)
    d = gcd(k, p, cls.order) if isinstance(cls, FiniteOrder) else gcd(k, p)
    return abs(det(twist_presentation(g, d)))


def hochschild_dimension(g: SL2Matrix, ct: CycleType, cap: int = ELEMENT_CAP) -> int:
    """Product over cycle lengths of the torsion size of coker(Id - g^k).

    This is the dimension before taking coinvariants; each factor is capped
    separately.
    """
    result = 1
    for k, r in ct.multiplicities:
        size = cokernel(twist_presentation(g, k)).torsion_size
        if size > cap:
            raise CapExceeded(size, cap)
        result *= size ** r
    return result


def coinvariant_dimension_bruteforce(
    g: SL2Matrix,
    ct: CycleType,
    tuple_cap: int = TUPLE_CAP,
    cap: int = ELEMENT_CAP,
) -> int:
    """Count orbits of the full symmetry on tuples, by canonical forms.

    For each distinct cycle length k with multiplicity r, the symmetry lets g
    rotate every coordinate independently and permutes the r coordinates, so
    a tuple's orbit is determined by the multiset of per-coordinate orbit
    labels.  The count of distinct sorted label tuples over all of
    torsion^r is the factor for k, and the factors multiply.
    """
    result = 1
    for k, r in ct.multiplicities:
        ck, perm = _torsion_action(g, k, cap)
        size = ck.torsion_size
        if size ** r > tuple_cap:
            raise CapExceeded(size ** r, tuple_cap)
        labels, _ = _cycles(perm)
        seen = set()
        for tup in product(range(len(perm)), repeat=r):
            seen.add(tuple(sorted(labels[e] for e in tup)))
        result *= len(seen)
    return result


def block_presentation(g: SL2Matrix, ct: CycleType) -> IntMatrix:
    """Id_{2n} - (w tensor g) for the natural permutation w of the cycle type."""
    return identity_minus(permutation_tensor(natural_permutation(ct), _as_int_matrix(g)))


def split_presentation(g: SL2Matrix, ct: CycleType) -> IntMatrix:
    """Block diagonal of Id - g^k repeated per multiplicity, same size."""
    blocks = []
    for k, r in ct.multiplicities:
        blocks.extend([twist_presentation(g, k)] * r)
    return block_diagonal(blocks)
