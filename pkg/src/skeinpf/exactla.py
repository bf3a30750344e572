"""Exact integer linear algebra: Smith normal form, cokernels, induced maps.

All arithmetic is over Z with unbounded Python ints.  The central routine is
``smith_normal_form``, which factors an integer matrix A as U * A * V = D with
U, V unimodular and D diagonal with a divisor chain d1 | d2 | ... and zeros
trailing.  On top of it, ``cokernel`` describes Z^r / A Z^c as a free part
plus cyclic torsion factors, and ``induced_endomorphism`` pushes a commuting
matrix forward to an endomorphism of the torsion part.  The change of basis U
is what makes the cokernel usable: a vector x of the ambient Z^r has
coordinates U * x in the normal form, so its class is read off componentwise
against the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence


class DimensionMismatch(ValueError):
    """Raised when matrix or vector shapes do not line up."""


class CommutationError(ValueError):
    """Raised when a map does not commute with the presentation matrix."""


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rectangular integer matrix."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise DimensionMismatch("rows have unequal lengths")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries)) if other.entries else []
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in subtraction")
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} against {self.rows}x{self.cols}")
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))


def identity_minus(m: IntMatrix) -> IntMatrix:
    if m.rows != m.cols:
        raise DimensionMismatch("identity_minus needs a square matrix")
    return IntMatrix.identity(m.rows) - m


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact by Sylvester's identity: prev divides the 2x2 minor.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _exgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) > 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = D with U, V unimodular, D diagonal with divisor chain.

    u_inv is the exact inverse of u, tracked during the reduction; it maps
    normal form coordinates back to the ambient basis.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Deterministic Smith normal form with unimodular transforms.

    Stage t picks as pivot the nonzero entry of smallest absolute value in the
    submatrix a[t:, t:], ties broken by lowest (row, col); the pivot moves to
    (t, t) and its row and column are cleared by exact Euclidean steps (a
    Bezout row/column pair when the pivot does not divide the target, plain
    elimination when it does).  Clearing restarts whenever it dirties the
    other side; each Bezout step strictly shrinks |pivot|, so this ends.
    A final pass repairs divisor chain violations d_i does-not-divide d_{i+1}
    by folding column i+1 into column i and rerunning the local reduction,
    which replaces the pair by gcd and lcm.  Diagonal entries end nonnegative
    with zeros trailing.  No randomness anywhere, so the output triple is a
    deterministic function of the input.
    """
    rows, cols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    uinv = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    # Row ops act as a = E*a, so u = E*u and uinv = uinv*E^-1; column ops act
    # as a = a*F, so v = v*F.  Keeping all three in lockstep maintains
    # u * m * v == a and u * uinv == Id throughout.

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def row_add(i, src, coef):
        # row_i += coef * row_src; inverse folds -coef of column i into column src.
        a[i] = [x + coef * y for x, y in zip(a[i], a[src])]
        u[i] = [x + coef * y for x, y in zip(u[i], u[src])]
        for r in uinv:
            r[src] -= coef * r[i]

    def col_add(j, src, coef):
        for r in a:
            r[j] += coef * r[src]
        for r in v:
            r[j] += coef * r[src]

    def row_combine(t, i, x, y, p, q):
        # (row_t, row_i) <- (x*row_t + y*row_i, p*row_t + q*row_i), det = +1,
        # so the inverse acts on columns as (col_t, col_i) <- (q*col_t - p*col_i,
        # -y*col_t + x*col_i).
        a[t], a[i] = (
            [x * s + y * w for s, w in zip(a[t], a[i])],
            [p * s + q * w for s, w in zip(a[t], a[i])],
        )
        u[t], u[i] = (
            [x * s + y * w for s, w in zip(u[t], u[i])],
            [p * s + q * w for s, w in zip(u[t], u[i])],
        )
        for r in uinv:
            r[t], r[i] = q * r[t] - p * r[i], -y * r[t] + x * r[i]

    def col_combine(t, j, x, y, p, q):
        for r in a:
            r[t], r[j] = x * r[t] + y * r[j], p * r[t] + q * r[j]
        for r in v:
            r[t], r[j] = x * r[t] + y * r[j], p * r[t] + q * r[j]

    def clear_cross(t):
        # Zero column t below the pivot and row t to its right.
        while True:
            for i in range(t + 1, rows):
                b = a[i][t]
                if b == 0:
                    continue
                p = a[t][t]
                if b % p == 0:
                    row_add(i, t, -(b // p))
                else:
                    g, x, y = _exgcd(p, b)
                    row_combine(t, i, x, y, -(b // g), p // g)
            for j in range(t + 1, cols):
                b = a[t][j]
                if b == 0:
                    continue
                p = a[t][t]
                if b % p == 0:
                    col_add(j, t, -(b // p))
                else:
                    g, x, y = _exgcd(p, b)
                    col_combine(t, j, x, y, -(b // g), p // g)
            if all(a[i][t] == 0 for i in range(t + 1, rows)):
                return

    rank = 0
    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best[0]):
                    best = (val, i, j)
        if best is None:
            break
        if best[1] != t:
            row_swap(t, best[1])
        if best[2] != t:
            col_swap(t, best[2])
        clear_cross(t)
        if a[t][t] < 0:
            row_negate(t)
        rank = t + 1

    # Repair the divisor chain; each fix replaces (d_i, d_{i+1}) by their gcd
    # and lcm, so the leading entries only shrink and the loop terminates.
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            p, q = a[i][i], a[i + 1][i + 1]
            if q % p != 0:
                changed = True
                col_add(i, i + 1, 1)
                clear_cross(i)
                if a[i][i] < 0:
                    row_negate(i)

    return SmithDecomposition(
        u=IntMatrix.from_rows(u),
        d=IntMatrix.from_rows(a),
        v=IntMatrix.from_rows(v),
        u_inv=IntMatrix.from_rows(uinv),
    )


@dataclass(frozen=True)
class CokernelStructure:
    """Z^r / A Z^c as Z^free_rank + sum of Z/d for d in invariant_factors.

    basis_map is the unimodular U of the normal form: a vector x in the
    ambient Z^r represents the class with normal form coordinates U * x, so
    coordinate i lives in Z/d_i (in Z when d_i = 0, and is discarded when
    d_i = 1).
    """

    matrix: IntMatrix
    smith: SmithDecomposition
    free_rank: int
    invariant_factors: tuple[int, ...]

    @property
    def basis_map(self) -> IntMatrix:
        return self.smith.u

    @property
    def torsion_size(self) -> int:
        return prod(self.invariant_factors)

    def torsion_positions(self) -> tuple[int, ...]:
        diag = self.smith.d.diagonal()
        return tuple(i for i, d in enumerate(diag) if d >= 2)


def cokernel(m: IntMatrix) -> CokernelStructure:
    snf = smith_normal_form(m)
    diag = snf.d.diagonal()
    nonzero = sum(1 for d in diag if d != 0)
    return CokernelStructure(
        matrix=m,
        smith=snf,
        free_rank=m.rows - nonzero,
        invariant_factors=tuple(d for d in diag if d >= 2),
    )


@dataclass(frozen=True)
class TorsionCoords:
    """Coordinates of a cokernel class: one residue per invariant factor,
    plus the coordinates on the free part."""

    residues: tuple[int, ...]
    free: tuple[int, ...]


def project_to_torsion(ck: CokernelStructure, vector: Sequence[int]) -> TorsionCoords:
    """Class of an ambient vector in normal form coordinates."""
    y = ck.basis_map.apply(vector)
    diag = ck.smith.d.diagonal()
    residues = tuple(y[i] % d for i, d in enumerate(diag) if d >= 2)
    free = tuple(y[i] for i in range(len(y)) if i >= len(diag) or diag[i] == 0)
    return TorsionCoords(residues=residues, free=free)


@dataclass(frozen=True)
class TorsionMap:
    """Endomorphism of the torsion part, row i reduced modulo moduli[i]."""

    moduli: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != len(self.moduli):
            raise DimensionMismatch("coordinate count does not match moduli")
        return tuple(
            sum(a * x for a, x in zip(row, coords)) % mod
            for row, mod in zip(self.matrix, self.moduli)
        )

    def is_identity(self) -> bool:
        return all(
            row[j] % mod == (1 if i == j else 0)
            for i, (row, mod) in enumerate(zip(self.matrix, self.moduli))
            for j in range(len(row))
        )


def induced_endomorphism(ck: CokernelStructure, m: IntMatrix) -> TorsionMap:
    """Push a matrix commuting with the presentation down to the torsion part.

    If m commutes with A then m preserves the image of A and descends to the
    cokernel.  In normal form coordinates the descended map is
    B = U * m * U^-1, and its restriction to the torsion coordinates, with
    row i read modulo d_i, is the induced endomorphism.  Raises
    CommutationError when m * A != A * m.
    """
    a = ck.matrix
    if m.rows != m.cols or m.rows != a.rows or a.rows != a.cols:
        raise DimensionMismatch("need a square matrix of the presentation's size")
    if m * a != a * m:
        raise CommutationError("matrix does not commute with the presentation")
    b = ck.smith.u * m * ck.smith.u_inv
    moduli = list(ck.smith.d.diagonal())
    # Commutation makes B respect the diagonal lattice: d_j * B[i][j] must be
    # a multiple of d_i (exactly zero against a free row).  This is a
    # consequence, not an input condition, so check it as a bug trap.
    for i in range(a.rows):
        for j in range(a.rows):
            scaled = moduli[j] * b[i, j]
            assert (scaled == 0) if moduli[i] == 0 else (scaled % moduli[i] == 0)
    positions = ck.torsion_positions()
    factors = ck.invariant_factors
    return TorsionMap(
        moduli=factors,
        matrix=tuple(
            tuple(b[pi, pj] % factors[i] for pj in positions)
            for i, pi in enumerate(positions)
        ),
    )


def permutation_tensor(perm: Sequence[int], block: IntMatrix) -> IntMatrix:
    """Kronecker product w x block for a permutation w given as an image list.

    The result has block rows indexed like block columns: the block at
    (perm[j], j) is a copy of ``block`` and every other block is zero.
    """
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    r, c = block.rows, block.cols
    out = [[0] * (n * c) for _ in range(n * r)]
    for j, i in enumerate(perm):
        for bi in range(r):
            for bj in range(c):
                out[i * r + bi][j * c + bj] = block[bi, bj]
    return IntMatrix.from_rows(out)


def block_diagonal(blocks: Sequence[IntMatrix]) -> IntMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    ro = co = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[ro + i][co + j] = b[i, j]
        ro += b.rows
        co += b.cols
    return IntMatrix.from_rows(out)
