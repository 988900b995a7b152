"""Integer lattices in Hermite normal form.

Lattices are row lattices of integer matrices.  The HNF here is the row
echelon form with positive pivots and entries above each pivot reduced
into [0, pivot), which is the canonical representative of the lattice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntRow = tuple[int, ...]


def hnf_with_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Full HNF including zero rows, with unimodular U such that U @ M = H."""
    m = [list(int(x) for x in row) for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]

    def row_op_sub(i, j, q):
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def row_neg(i):
        m[i] = [-a for a in m[i]]
        u[i] = [-a for a in u[i]]

    r = 0
    for c in range(nc):
        while True:
            nonzero = [i for i in range(r, nr) if m[i][c] != 0]
            if not nonzero:
                break
            i0 = min(nonzero, key=lambda i: (abs(m[i][c]), i))
            if i0 != r:
                row_swap(r, i0)
            others = [i for i in range(r + 1, nr) if m[i][c] != 0]
            if not others:
                break
            for i in others:
                row_op_sub(i, r, m[i][c] // m[r][c])
        if r < nr and m[r][c] != 0:
            if m[r][c] < 0:
                row_neg(r)
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    row_op_sub(i, r, q)
            r += 1
            if r == nr:
                break
    return m, u


def hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical HNF basis of the row lattice (zero rows dropped)."""
    h, _ = hnf_with_transform(rows)
    return [row for row in h if any(row)]


class IntegerLattice:
    """Full- or partial-rank sublattice of Z^n, stored by its HNF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, rows: Sequence[Sequence[int]] = ()):
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("ambient dimension mismatch")
        self.ambient_dim = ambient_dim
        self.basis: tuple[IntRow, ...] = tuple(tuple(r) for r in hnf(rows))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntegerLattice)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"IntegerLattice(dim={self.ambient_dim}, basis={list(map(list, self.basis))})"

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        rem = [int(x) for x in v]
        for row in self.basis:
            pc = next(k for k, x in enumerate(row) if x)
            if rem[pc] % row[pc] != 0:
                return False
            q = rem[pc] // row[pc]
            rem = [a - q * b for a, b in zip(rem, row)]
        return not any(rem)


def integer_kernel(rows: Sequence[Sequence[Fraction | int]]) -> list[list[int]]:
    """Saturated basis of {x in Z^n : M @ x = 0} for a rational matrix M.

    Uses the HNF transform of the transpose: rows of U facing zero rows of
    H form a basis of the kernel, and it is saturated because U is
    unimodular.
    """
    if not rows:
        raise ValueError("empty constraint matrix (ambient dimension unknown)")
    scaled = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        den = 1
        for f in fracs:
            den = den * f.denominator // _gcd(den, f.denominator)
        scaled.append([int(f * den) for f in fracs])
    n = len(scaled[0])
    h, u = hnf_with_transform([list(col) for col in zip(*scaled)] if scaled else [])
    if not h:
        return [list(row) for row in _identity(n)]
    kernel = [u[i] for i in range(len(h)) if not any(h[i])]
    return hnf(kernel) if kernel else []


def saturate(rows: Sequence[Sequence[int]], ambient_dim: int) -> list[list[int]]:
    """(Q-span of rows) intersected with Z^n, as an HNF basis."""
    if not rows:
        return []
    from .matrix import Matrix
    from .field import QQ

    B = Matrix(QQ, [[Fraction(x) for x in row] for row in rows])
    C = B.right_kernel()
    if C.nrows == 0:
        return [list(r) for r in _identity(ambient_dim)]
    constraints = [[x.rational_value() for x in row] for row in C.rows]
    return integer_kernel(constraints)


def _identity(n: int) -> list[IntRow]:
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
