"""Exact dense linear algebra over a session Field.

Vectors are tuples of FieldElement, subspaces are row spaces of matrices.
Row reduction uses a fixed pivot rule (first nonzero column, topmost row),
so every canonical form is reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import Field, FieldElement, FieldMismatchError

Vector = tuple[FieldElement, ...]


class DimensionMismatchError(ValueError):
    """Raised when shapes or ambient dimensions are inconsistent."""


class Matrix:
    """Immutable dense matrix over a fixed Field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        self.field = field
        self.rows: tuple[Vector, ...] = tuple(
            tuple(field.coerce(x) for x in row) for row in rows
        )
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatchError("ragged rows")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def identity(field: Field, n: int) -> Matrix:
        one, zero = field.one(), field.zero()
        return Matrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(field: Field, nrows: int, ncols: int) -> Matrix:
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)])

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence]) -> Matrix:
        return Matrix(field, rows)

    # -- basic algebra ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def transpose(self) -> Matrix:
        return Matrix(self.field, list(zip(*self.rows))) if self.rows else Matrix(self.field, [])

    def __add__(self, other: Matrix) -> Matrix:
        self._shape_check(other)
        return Matrix(
            self.field,
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._shape_check(other)
        return Matrix(
            self.field,
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)],
        )

    def scale(self, s) -> Matrix:
        s = self.field.coerce(s)
        return Matrix(self.field, [[s * x for x in row] for row in self.rows])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"{self.ncols} != {other.nrows}")
        cols = other.transpose().rows
        return Matrix(
            self.field,
            [[_dot(r, c) for c in cols] for r in self.rows],
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product M @ v."""
        vv = tuple(self.field.coerce(x) for x in v)
        if len(vv) != self.ncols:
            raise DimensionMismatchError(f"{len(vv)} != {self.ncols}")
        return tuple(_dot(row, vv) for row in self.rows)

    def stack(self, other: Matrix) -> Matrix:
        if other.nrows and self.nrows and self.ncols != other.ncols:
            raise DimensionMismatchError("column mismatch in stack")
        return Matrix(self.field, list(self.rows) + list(other.rows))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        return Matrix(
            self.field, [[self.rows[i][j] for j in col_idx] for i in row_idx]
        )

    def _shape_check(self, other: Matrix):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatchError("shape mismatch")
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")

    # -- row reduction ----------------------------------------------------------

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row-echelon form and pivot columns (deterministic)."""
        rows = [list(r) for r in self.rows]
        zero = self.field.zero()
        pivots: list[int] = []
        pr = 0
        for pc in range(self.ncols):
            pivot_row = None
            for r in range(pr, len(rows)):
                if rows[r][pc]:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            inv = rows[pr][pc].inverse()
            rows[pr] = [inv * x for x in rows[pr]]
            for r in range(len(rows)):
                if r != pr and rows[r][pc]:
                    f = rows[r][pc]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == len(rows):
                break
        return Matrix(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_kernel(self) -> Matrix:
        """Rows span {x : M @ x = 0}; canonical basis from rref free columns."""
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for fc in free:
            v = [zero] * self.ncols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -R.rows[r][fc]
            basis.append(v)
        return Matrix(self.field, basis) if basis else Matrix(self.field, [])

    def solve_right(self, b: Sequence) -> Vector | None:
        """One solution x of M @ x = b, or None if inconsistent."""
        bb = tuple(self.field.coerce(x) for x in b)
        if len(bb) != self.nrows:
            raise DimensionMismatchError("rhs length mismatch")
        aug = Matrix(self.field, [list(r) + [bb[k]] for k, r in enumerate(self.rows)])
        R, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        zero = self.field.zero()
        x = [zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = R.rows[r][self.ncols]
        return tuple(x)

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise DimensionMismatchError("determinant of non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = self.field.one()
        for pc in range(n):
            pivot_row = None
            for r in range(pc, n):
                if rows[r][pc]:
                    pivot_row = r
                    break
            if pivot_row is None:
                return self.field.zero()
            if pivot_row != pc:
                rows[pc], rows[pivot_row] = rows[pivot_row], rows[pc]
                det = -det
            det = det * rows[pc][pc]
            inv = rows[pc][pc].inverse()
            for r in range(pc + 1, n):
                if rows[r][pc]:
                    f = rows[r][pc] * inv
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[pc])]
        return det

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise DimensionMismatchError("inverse of non-square matrix")
        aug = Matrix(
            self.field,
            [list(r) + list(Matrix.identity(self.field, self.nrows).rows[k]) for k, r in enumerate(self.rows)],
        )
        R, pivots = aug.rref()
        if pivots != tuple(range(self.nrows)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, [row[self.nrows:] for row in R.rows])


def _dot(u: Vector, v: Vector) -> FieldElement:
    acc = None
    for x, y in zip(u, v):
        term = x * y
        acc = term if acc is None else acc + term
    if acc is None:
        raise DimensionMismatchError("dot of empty vectors")
    return acc


# -- vector helpers -------------------------------------------------------------


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(x + y for x, y in zip(u, v))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(x - y for x, y in zip(u, v))

def vec_scale(s: FieldElement, v: Vector) -> Vector:
    return tuple(s * x for x in v)

def vec_is_zero(v: Vector) -> bool:
    return not any(v)

def zero_vector(field: Field, n: int) -> Vector:
    return tuple([field.zero()] * n)

def basis_vector(field: Field, n: int, k: int) -> Vector:
    v = [field.zero()] * n
    v[k] = field.one()
    return tuple(v)


# -- subspaces as row spaces -----------------------------------------------------


def row_space(m: Matrix) -> Matrix:
    """Canonical basis (rref, zero rows dropped) of the row space."""
    R, pivots = m.rref()
    return Matrix(m.field, [R.rows[k] for k in range(len(pivots))])

def subspace_dim(m: Matrix) -> int:
    return m.rank()

def row_space_contains(m: Matrix, v: Sequence) -> bool:
    vv = [m.field.coerce(x) for x in v]
    if m.nrows == 0:
        return not any(vv)
    if len(vv) != m.ncols:
        raise DimensionMismatchError("ambient dimension mismatch")
    return m.stack(Matrix(m.field, [vv])).rank() == m.rank()

def same_row_space(a: Matrix, b: Matrix) -> bool:
    if a.nrows == 0 and b.nrows == 0:
        return True
    if a.nrows == 0 or b.nrows == 0:
        return a.rank() == 0 and b.rank() == 0
    return row_space(a) == row_space(b)

def subspace_sum(a: Matrix, b: Matrix) -> Matrix:
    if a.nrows == 0:
        return row_space(b)
    if b.nrows == 0:
        return row_space(a)
    return row_space(a.stack(b))

def subspace_meet(a: Matrix, b: Matrix) -> Matrix:
    """Canonical basis of (row space of a) intersect (row space of b)."""
    if a.nrows == 0 or b.nrows == 0:
        n = a.ncols or b.ncols
        return Matrix(a.field, [])
    if a.ncols != b.ncols:
        raise DimensionMismatchError("ambient dimension mismatch")
    if a.field != b.field:
        raise FieldMismatchError("subspaces over different fields")
    # left kernel of [A; -B]: rows (u, v) with u@A = v@B.
    stacked = a.stack(b.scale(-1))
    left_kernel = stacked.transpose().right_kernel()
    vecs = []
    for k in range(left_kernel.nrows):
        u = left_kernel.rows[k][: a.nrows]
        vec = zero_vector(a.field, a.ncols)
        for coeff, row in zip(u, a.rows):
            vec = vec_add(vec, vec_scale(coeff, row))
        vecs.append(vec)
    return row_space(Matrix(a.field, vecs)) if vecs else Matrix(a.field, [])


def rational_rows(m: Matrix) -> tuple[Matrix, bool]:
    """Q-rational skeleton of a row space.

    Returns (basis of {v in rowspace : all entries rational} as a Q-matrix
    over the same field, full) where ``full`` is True iff that skeleton
    spans the whole row space over the field, i.e. the space is defined
    over Q.  Works uniformly for Q(i) and Q(sqrt(d))(i); for subspaces of
    the real subfield use the same routine (i/wi parts are then zero).
    """
    field = m.field
    if m.nrows == 0:
        return Matrix(field, []), True
    deg = field.degree
    k, n = m.nrows, m.ncols
    # unknowns: Q-coordinates of the k combination coefficients
    # constraints: every non-rational basis part of every ambient coordinate is 0
    constraint_rows = []
    for col in range(n):
        for part in range(1, deg):
            row = []
            for j in range(k):
                for p in range(deg):
                    # contribution of coefficient part p of c_j to part `part` of coord col
                    unit = [Fraction(0)] * 4
                    unit[_PART_INDEX[deg][p]] = Fraction(1)
                    c = field.from_basis_parts(tuple(unit))
                    prod = c * m.rows[j][col]
                    row.append(field.basis_parts(prod)[part])
            constraint_rows.append(row)
    from .field import QQ

    qmat = Matrix(QQ, [[Fraction(x) for x in row] for row in constraint_rows])
    if qmat.nrows == 0:
        kern = Matrix.identity(QQ, k * deg)
    else:
        kern = qmat.right_kernel()
    vecs = []
    for s in range(kern.nrows):
        coeffs = []
        for j in range(k):
            parts = tuple(kern.rows[s][j * deg + p].a for p in range(deg))
            full_parts = [Fraction(0)] * 4
            for p, val in enumerate(parts):
                full_parts[_PART_INDEX[deg][p]] = val
            coeffs.append(field.from_basis_parts(tuple(full_parts)))
        vec = zero_vector(field, n)
        for c, rowv in zip(coeffs, m.rows):
            vec = vec_add(vec, vec_scale(c, rowv))
        if not vec_is_zero(vec):
            vecs.append(vec)
    basis = row_space(Matrix(field, vecs)) if vecs else Matrix(field, [])
    return basis, basis.nrows == m.rank()


# positions of the degree-p basis element inside the (a, b, c, e) tuple
_PART_INDEX = {1: [0], 2: [0, 1], 4: [0, 1, 2, 3]}
