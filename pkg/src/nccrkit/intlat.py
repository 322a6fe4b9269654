"""
Exact integer lattice linear algebra.

Everything here works on Python ints, so there is no overflow at any
magnitude.  The main entry points are

    hnf(A)          -> (H, U) with U @ A == H, H in row Hermite normal form
    snf(A)          -> SmithDecomposition with U @ A @ V == D
    kernel_basis(A) -> canonical basis of {x : A x = 0}, as columns
    cokernel(A)     -> Z^rows / (column span of A), plus images of e_i

Conventions (fixed, so outputs are byte-deterministic):

* HNF is row-style: row echelon, positive pivots, entries above a pivot
  reduced into [0, pivot).
* SNF pivots on the smallest nonzero absolute value of the remaining block.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable integer matrix stored row-major as a tuple of tuples."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError(f"ragged matrix: expected {cols} columns, got {len(row)}")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(([0] * cols for _ in range(rows)), cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        return cls(([col[i] for col in columns] for i in range(rows)), cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self._data for x in r)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            ([r[j] for r in self._data] for j in range(self.cols)), cols=self.rows
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            ([sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data),
            cols=other.cols,
        )

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self.tolist())

    def rank(self) -> int:
        H, _ = hnf(self)
        return sum(1 for i in range(H.rows) if any(H.row(i)))


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def as_matrix(A) -> IntMatrix:
    return A if isinstance(A, IntMatrix) else IntMatrix(A)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def hnf(A) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  Zero rows of
    ``H`` sit at the bottom.
    """
    A = as_matrix(A)
    m, n = A.shape
    H = A.tolist()
    U = IntMatrix.identity(m).tolist()

    def combine(i: int, k: int, a: int, b: int, c: int, d: int) -> None:
        # rows (i, k) <- [[a, b], [c, d]] @ rows (i, k); the 2x2 has det +-1
        for M in (H, U):
            ri, rk = M[i], M[k]
            M[i] = [a * x + b * y for x, y in zip(ri, rk)]
            M[k] = [c * x + d * y for x, y in zip(ri, rk)]

    r = 0
    for j in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][j] == 0:
                continue
            a, b = H[r][j], H[i][j]
            g, x, y = xgcd(a, b)
            combine(r, i, x, y, -b // g, a // g)
        if H[r][j] == 0:
            continue
        if H[r][j] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][j]
        for i in range(r):
            q = H[i][j] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return IntMatrix(H, cols=n), IntMatrix(U, cols=m)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with D diagonal and d_1 | d_2 | ... ."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def snf(A) -> SmithDecomposition:
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row dst += q * row src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero |entry| in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; re-pivot on it
                best = None
                for i in range(t, m):
                    if D[i][t] and (best is None or abs(D[i][t]) < best[0]):
                        best = (abs(D[i][t]), i, "r")
                for j in range(t, n):
                    if D[t][j] and (best is None or abs(D[t][j]) < best[0]):
                        best = (abs(D[t][j]), j, "c")
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            # row and column clear; enforce divisibility of the rest
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = tuple(D[i][i] for i in range(min(m, n)) if D[i][i])
    return SmithDecomposition(
        U=IntMatrix(U, cols=m), D=IntMatrix(D, cols=n), V=IntMatrix(V, cols=n),
        invariant_factors=factors,
    )


def kernel_basis(A) -> IntMatrix:
    """Basis of the integer kernel of ``A`` as the columns of the result.

    The basis is the row HNF of the kernel lattice, transposed, so it does
    not depend on how the kernel was found.
    """
    A = as_matrix(A)
    n = A.cols
    # row ops on A^T record column ops on A; zero rows of the HNF give kernel vectors
    H, U = hnf(A.T)
    vecs = [U.row(i) for i in range(H.rows) if not any(H.row(i))]
    if not vecs:
        return IntMatrix((() for _ in range(n)), cols=0)
    K, _ = hnf(IntMatrix(vecs, cols=n))
    basis = [K.row(i) for i in range(K.rows) if any(K.row(i))]
    return IntMatrix.from_columns(basis, rows=n)


def row_lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> IntMatrix:
    """Canonical (HNF) basis of the lattice spanned by ``vectors``, as rows."""
    if not vectors:
        return IntMatrix((), cols=dim)
    H, _ = hnf(IntMatrix(vectors, cols=dim))
    return IntMatrix([H.row(i) for i in range(H.rows) if any(H.row(i))], cols=dim)


def inverse_unimodular(U) -> IntMatrix:
    U = as_matrix(U)
    inv = rational_inverse(U)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return IntMatrix(out, cols=U.rows)


def rational_inverse(A) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; raises ValueError when singular."""
    A = as_matrix(A)
    n = A.rows
    if n != A.cols:
        raise ValueError("inverse of a non-square matrix")
    M = [[Fraction(x) for x in A.row(i)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def solve_rational(A, b: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Some rational solution of ``A x = b`` (None if inconsistent).

    When ``A`` has full column rank the solution is unique.
    """
    A = as_matrix(A)
    m, n = A.shape
    M = [[Fraction(x) for x in A.row(i)] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return tuple(x)


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in vec)


def cokernel(A):
    """Present ``Z^rows / colspan(A)`` as a group in invariant-factor form.

    Returns ``(group, images)`` where ``images[i]`` is the class of the i-th
    standard basis vector.
    """
    from .abgroup import FinAbGroup, GroupElement

    A = as_matrix(A)
    dec = snf(A)
    r = dec.rank
    torsion_rows = [k for k in range(r) if dec.invariant_factors[k] > 1]
    free_rows = list(range(r, A.rows))
    group = FinAbGroup(len(free_rows), tuple(dec.invariant_factors[k] for k in torsion_rows))
    images = []
    for i in range(A.rows):
        col = dec.U.column(i)
        images.append(GroupElement(
            tuple(col[k] for k in free_rows),
            tuple(col[k] % dec.invariant_factors[k] for k in torsion_rows),
        ))
    return group, images


def cokernel_coordinates(A):
    """Like :func:`cokernel`, but also return a function mapping any vector
    of ``Z^rows`` to its class, and a lift of each group generator.

    The lifts are the vectors whose class is the k-th torsion generator
    (resp. free generator); they are columns of ``U^{-1}``.
    """
    from .abgroup import FinAbGroup, GroupElement

    A = as_matrix(A)
    dec = snf(A)
    r = dec.rank
    torsion_rows = [k for k in range(r) if dec.invariant_factors[k] > 1]
    free_rows = list(range(r, A.rows))
    group = FinAbGroup(len(free_rows), tuple(dec.invariant_factors[k] for k in torsion_rows))
    U = dec.U

    def to_class(vec: Sequence[int]) -> GroupElement:
        y = U.apply(vec)
        return GroupElement(
            tuple(y[k] for k in free_rows),
            tuple(y[k] % dec.invariant_factors[k] for k in torsion_rows),
        )

    Uinv = inverse_unimodular(U)
    torsion_lifts = [Uinv.column(k) for k in torsion_rows]
    free_lifts = [Uinv.column(k) for k in free_rows]
    return group, to_class, torsion_lifts, free_lifts
