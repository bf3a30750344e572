"""Exact skein module dimensions of genus-one mapping tori.

Given a torus mapping class as a matrix in SL(2,Z), this package computes the
dimensions of the associated skein modules in every rank, the Euler product
exponents of their generating function, and brute-force cross-checks of both
by direct enumeration of finite abelian groups.  All arithmetic is exact.
"""

from .sl2z import (
    IDENTITY,
    S,
    T,
    ConjugacyClass,
    DeterminantError,
    FiniteOrder,
    Hyperbolic,
    NegativeShear,
    SL2Matrix,
    Shear,
    branch_representatives,
    classify,
    format_matrix,
    parse_matrix,
    random_conjugate,
    same_class,
    trace_of_class,
    trace_power,
)
from .exactla import (
    CokernelStructure,
    CommutationError,
    DimensionMismatch,
    IntMatrix,
    SmithDecomposition,
    TorsionCoords,
    TorsionMap,
    block_diagonal,
    cokernel,
    det,
    identity_minus,
    induced_endomorphism,
    permutation_tensor,
    project_to_torsion,
    smith_normal_form,
)
from .partitions import CycleType, enumerate_partitions, natural_permutation, partition_count
from .series import (
    EulerExponents,
    IntSeries,
    NonIntegralError,
    expand_euler_product,
    extract_euler_exponents,
    multiply_series,
)
from .formula import (
    RationalPolynomial,
    coinvariant_dimension,
    divisors,
    euler_exponent,
    euler_exponents,
    euler_totient,
    exponent_polynomial,
    multiset_coefficient,
    skein_dimension,
    skein_dimensions,
)
from .oracle import (
    CapExceeded,
    DegenerateError,
    OrbitReport,
    block_presentation,
    coinvariant_dimension_bruteforce,
    euler_exponent_burnside,
    fixed_count_prediction,
    hochschild_dimension,
    orbit_report,
    split_presentation,
    twist_presentation,
)

__version__ = "0.1.0"
