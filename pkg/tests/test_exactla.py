"""Smith normal form, cokernels and induced endomorphisms."""

from __future__ import annotations

import random
from math import prod

import pytest

from skeinpf import (
    IDENTITY,
    T,
    CommutationError,
    DimensionMismatch,
    IntMatrix,
    block_diagonal,
    cokernel,
    det,
    identity_minus,
    induced_endomorphism,
    parse_matrix,
    permutation_tensor,
    project_to_torsion,
    smith_normal_form,
)

G4 = parse_matrix("2,1;3,2")


def _mat(g):
    return IntMatrix.from_rows(g.entries())


def test_int_matrix_basics():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.rows == 2 and m.cols == 2
    assert m[1, 0] == 3
    assert (m * IntMatrix.identity(2)) == m
    assert m.apply((1, 1)) == (3, 7)
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        m * IntMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        m.apply((1, 2, 3))


def test_det_examples():
    assert det(IntMatrix.identity(3)) == 1
    assert det(IntMatrix.from_rows([[4, 6], [2, 8]])) == 20
    assert det(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert det(IntMatrix.from_rows([[0, 2, 1], [1, 0, 0], [0, 1, 0]])) == 1
    # determinant is multiplicative
    a = IntMatrix.from_rows([[3, 1, 0], [1, 2, 5], [0, 7, 1]])
    b = IntMatrix.from_rows([[1, 0, 2], [0, 1, 0], [4, 0, 1]])
    assert det(a * b) == det(a) * det(b)


def test_smith_golden_decomposition():
    # The pivoting strategy pins the whole decomposition, not just D.
    a = IntMatrix.from_rows([[4, 6], [2, 8]])
    snf = smith_normal_form(a)
    assert snf.d.entries == ((2, 0), (0, 10))
    assert snf.u.entries == ((0, 1), (-1, 2))
    assert snf.v.entries == ((1, -4), (0, 1))
    assert snf.u_inv.entries == ((2, -1), (1, 0))
    assert snf.u * a * snf.v == snf.d


def test_smith_small_cases():
    # Id - T presents Z + Z: one unit, one zero on the diagonal.
    assert smith_normal_form(identity_minus(_mat(T))).d.diagonal() == (1, 0)
    # Id - (-Id) = 2 Id presents (Z/2)^2.
    assert smith_normal_form(identity_minus(_mat(-IDENTITY))).d.diagonal() == (2, 2)
    # Id - G4 has determinant -2 and a unimodular entry.
    assert smith_normal_form(identity_minus(_mat(G4))).d.diagonal() == (1, 2)
    # Zero and empty-ish matrices.
    assert smith_normal_form(IntMatrix.zeros(2, 3)).d.entries == ((0, 0, 0), (0, 0, 0))
    assert smith_normal_form(IntMatrix.from_rows([[6]])).d.entries == ((6,),)


def _check_decomposition(a: IntMatrix):
    snf = smith_normal_form(a)
    assert snf.u * a * snf.v == snf.d
    assert abs(det(snf.u)) == 1
    assert abs(det(snf.v)) == 1
    assert snf.u * snf.u_inv == IntMatrix.identity(a.rows)
    diag = snf.d.diagonal()
    # off-diagonal zero
    for i in range(snf.d.rows):
        for j in range(snf.d.cols):
            if i != j:
                assert snf.d[i, j] == 0
    # nonnegative, zeros trailing, divisor chain
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d != 0]
    assert diag[: len(nonzero)] == tuple(nonzero)
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    if a.rows == a.cols:
        d = det(a)
        if d != 0:
            assert prod(nonzero) == abs(d)
        else:
            assert 0 in diag


def test_smith_random_matrices():
    rng = random.Random(2024)
    for _ in range(300):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = IntMatrix.from_rows(
            [[rng.randint(-99, 99) for _ in range(cols)] for _ in range(rows)]
        )
        _check_decomposition(a)


def test_smith_low_rank_and_structured():
    _check_decomposition(IntMatrix.from_rows([[2, 4], [4, 8]]))
    _check_decomposition(IntMatrix.from_rows([[6, 0], [0, 4]]))  # chain repair: gcd 2, lcm 12
    snf = smith_normal_form(IntMatrix.from_rows([[6, 0], [0, 4]]))
    assert snf.d.diagonal() == (2, 12)
    _check_decomposition(IntMatrix.from_rows([[0, 0], [0, 0]]))


def test_cokernel_structures():
    ck = cokernel(identity_minus(_mat(G4)))
    assert ck.free_rank == 0
    assert ck.invariant_factors == (2,)
    assert ck.torsion_size == 2

    ck = cokernel(identity_minus(_mat(T ** 3)))
    assert ck.free_rank == 1
    assert ck.invariant_factors == (3,)

    ck = cokernel(identity_minus(_mat(-IDENTITY)))
    assert ck.free_rank == 0
    assert ck.invariant_factors == (2, 2)
    assert ck.torsion_size == 4

    ck = cokernel(identity_minus(_mat(IDENTITY)))
    assert ck.free_rank == 2
    assert ck.invariant_factors == ()
    assert ck.torsion_size == 1


def test_torsion_size_matches_determinant():
    for text in ("2,1;3,2", "0,1;-1,3", "-3,-1;1,0", "0,-1;1,0"):
        g = parse_matrix(text)
        a = identity_minus(_mat(g))
        ck = cokernel(a)
        assert ck.free_rank == 0
        assert ck.torsion_size == abs(det(a)) == abs(g.trace - 2)


def test_project_to_torsion():
    a = identity_minus(_mat(-IDENTITY))  # (Z/2)^2
    ck = cokernel(a)
    classes = {project_to_torsion(ck, v).residues for v in [(0, 0), (1, 0), (0, 1), (1, 1)]}
    assert len(classes) == 4
    # shifting by a column of the presentation does not move the class
    col = tuple(a[i, 0] for i in range(2))
    v = (1, 1)
    shifted = tuple(x + y for x, y in zip(v, col))
    assert project_to_torsion(ck, v) == project_to_torsion(ck, shifted)

    free_ck = cokernel(identity_minus(_mat(T)))  # Z/1 + Z
    coords = project_to_torsion(free_ck, (0, 1))
    assert coords.residues == ()
    assert len(coords.free) == 1 and coords.free[0] != 0
    with pytest.raises(DimensionMismatch):
        project_to_torsion(free_ck, (1, 2, 3))


def test_induced_endomorphism_requires_commutation():
    ck = cokernel(identity_minus(_mat(G4)))
    with pytest.raises(CommutationError):
        induced_endomorphism(ck, IntMatrix.from_rows([[1, 1], [0, 1]]))


def test_induced_endomorphism_basic_identities():
    a = identity_minus(_mat(G4 ** 3))
    ck = cokernel(a)
    assert ck.torsion_size == 50  # |tr(g^3) - 2| = 50

    # Id + A and Id induce the same map, and A itself induces zero.
    one = IntMatrix.identity(2)
    assert induced_endomorphism(ck, one + a) == induced_endomorphism(ck, one)
    assert induced_endomorphism(ck, one).is_identity()
    zero_map = induced_endomorphism(ck, a)
    assert all(x == 0 for row in zero_map.matrix for x in row)

    # g acts with order dividing 3 on coker(Id - g^3).
    act = induced_endomorphism(ck, _mat(G4))
    start_points = [tuple((i + j) % m for j, m in enumerate(act.moduli)) for i in range(5)]
    for start in start_points:
        assert act.apply(act.apply(act.apply(start))) == tuple(
            x % m for x, m in zip(start, act.moduli)
        )


def test_permutation_tensor_structure():
    g = _mat(G4)
    swap = permutation_tensor((1, 0), g)
    assert swap.rows == 4 and swap.cols == 4
    # block at (perm[j], j): column block 0 lands in row block 1
    assert [[swap[2 + i, j] for j in range(2)] for i in range(2)] == [[2, 1], [3, 2]]
    assert [[swap[i, j] for j in range(2)] for i in range(2)] == [[0, 0], [0, 0]]
    with pytest.raises(ValueError):
        permutation_tensor((0, 0), g)


def test_block_diagonal():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[5]])
    m = block_diagonal([a, b])
    assert m.entries == ((1, 2, 0), (3, 4, 0), (0, 0, 5))
