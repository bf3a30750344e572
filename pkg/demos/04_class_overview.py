"""
One row per conjugacy class
===========================

A compact overview: for a representative of each class, the torsion size
of coker(Id - g^k) next to the exponent c_k. Finite-order classes repeat
periodically, shears grow linearly, hyperbolics grow like a power of the
trace. Whenever the torsion group is trivial the exponent bottoms out
at 1, never 0.
"""

from skeinpf import CycleType, classify, euler_exponent, hochschild_dimension, parse_matrix

REPRESENTATIVES = [
    ("Id", "1,0;0,1"),
    ("-Id", "-1,0;0,-1"),
    ("order 4", "0,-1;1,0"),
    ("order 6", "1,-1;1,0"),
    ("order 3", "-1,1;-1,0"),
    ("shear 1", "1,1;0,1"),
    ("shear 2", "1,2;0,1"),
    ("-shear 1", "-1,-1;0,-1"),
    ("trace 3", "3,-1;1,0"),
    ("trace 4", "2,1;3,2"),
    ("trace -3", "-3,-1;1,0"),
]

K = 8

print(f"{'class':<10} {'matrix':>10}  torsion sizes / exponents for k = 1..{K}")
for label, text in REPRESENTATIVES:
    g = parse_matrix(text)
    cls = classify(g)
    torsions = [hochschild_dimension(g, CycleType.from_parts([k])) for k in range(1, K + 1)]
    exponents = [euler_exponent(cls, k) for k in range(1, K + 1)]
    print(f"{label:<10} {text:>10}  {torsions}")
    print(f"{'':<10} {'':>10}  {exponents}")
