"""
Brute force against closed form
===============================

The exponent c_k has a closed form (a divisor average of traces), but it
is also literally the number of orbits of the matrix acting on a finite
abelian group. This demo enumerates those orbits element by element and
compares. The same pattern checks the coinvariant dimension: a product
of multiset coefficients on one side, a tuple enumeration on the other.
"""

from skeinpf import (
    CycleType,
    classify,
    coinvariant_dimension,
    coinvariant_dimension_bruteforce,
    euler_exponent,
    orbit_report,
    parse_matrix,
)

g = parse_matrix("2,1;3,2")
cls = classify(g)

print(f"{g.entries()}  ({cls})")
print(f"{'k':>2}  {'elements':>9}  {'orbits':>7}  {'formula':>8}")
for k in range(1, 8):
    report = orbit_report(g, k)
    formula = euler_exponent(cls, k)
    assert report.orbit_count == formula
    print(f"{k:>2}  {report.element_count:>9}  {report.orbit_count:>7}  {formula:>8}")

# Orbit counts obey the averaging identity: the number of orbits times k
# equals the total number of fixed points over all powers.
report = orbit_report(g, 6)
assert 6 * report.orbit_count == sum(report.fixed_point_counts)
print()
print("fixed points of successive powers at k=6:", list(report.fixed_point_counts))

# Coinvariants of a wreath product action, brute forced over all label
# tuples. The cycle type 3,3,1,1,1 of 9 strands gives dimension 684.
ct = CycleType.from_parts([3, 3, 1, 1, 1])
brute = coinvariant_dimension_bruteforce(g, ct)
print()
print(f"cycle type {ct}: brute force {brute}, formula {coinvariant_dimension(cls, ct)}")
