"""
Classifying mapping classes
===========================

Every determinant-1 integer 2x2 matrix is conjugate to exactly one of:
the identity, its negative, a finite-order rotation (order 3, 4 or 6),
a shear T^m or -T^m, or a hyperbolic matrix pinned down by its trace.
The classification drives everything else in the library, so this demo
starts there.
"""

from skeinpf import classify, euler_exponents, parse_matrix, random_conjugate

SAMPLES = [
    "1,0;0,1",
    "-1,0;0,-1",
    "0,-1;1,0",
    "1,-1;1,0",
    "1,1;0,1",
    "1,-3;0,1",
    "-1,5;0,-1",
    "2,1;3,2",
    "0,1;-1,-5",
]

print(f"{'matrix':>12}  {'class':<22} {'c_1..c_8'}")
for text in SAMPLES:
    g = parse_matrix(text)
    cls = classify(g)
    exps = euler_exponents(cls, 8).values
    print(f"{text:>12}  {str(cls):<22} {list(exps)}")

# The class is a conjugation invariant: scrambling a matrix by a random
# word in the generators never changes the classification.
g = parse_matrix("2,1;3,2")
print()
print("conjugates of 2,1;3,2:")
for seed in range(4):
    h = random_conjugate(g, seed)
    print(f"  seed {seed}: {h.entries()} -> {classify(h)}")
