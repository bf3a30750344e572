"""
Partition functions two ways
============================

The generating function Z(t) = 1 + sum_N dim(N) t^N can be computed by
summing multiset coefficients over integer partitions, or by expanding
the infinite product prod_k (1 - t^k)^(-c_k). The two must agree term
by term, and the exponents c_k can be recovered back from the series.
"""

from skeinpf import (
    IntSeries,
    classify,
    euler_exponents,
    expand_euler_product,
    extract_euler_exponents,
    parse_matrix,
    skein_dimensions,
)

ORDER = 10

for text in ["1,1;0,1", "-1,-1;0,-1", "2,1;3,2"]:
    cls = classify(parse_matrix(text))
    exps = euler_exponents(cls, ORDER)

    # partition sum on one side, product expansion on the other
    dims = skein_dimensions(cls, ORDER)
    series = expand_euler_product(exps, ORDER)
    assert series.coefficients == (1, *dims)

    # and the expansion inverts exactly
    recovered = extract_euler_exponents(IntSeries(series.coefficients))
    assert recovered.values == exps.values

    print(f"{text}  ({cls})")
    print(f"  exponents  {list(exps.values)}")
    print(f"  dimensions {dims}")
    print()

# The shear T is the classic case: its dimensions count plane partitions
# in a box of growing size, the MacMahon numbers.
print("plane partition counts:", skein_dimensions(classify(parse_matrix("1,1;0,1")), 9))
