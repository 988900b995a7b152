"""Exact scalar fields, dense exact linear algebra, and integer lattices."""

from .field import (
    Field,
    FieldElement,
    FieldMismatchError,
    QQ,
    QQ_I,
    QQ_SQRT_I,
    parse_scalar,
)
from .matrix import (
    DimensionMismatchError,
    Matrix,
    basis_vector,
    rational_rows,
    row_space,
    row_space_contains,
    same_row_space,
    subspace_dim,
    subspace_meet,
    subspace_sum,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .lattice import IntegerLattice, hnf, hnf_with_transform, integer_kernel, saturate

__all__ = [
    "Field",
    "FieldElement",
    "FieldMismatchError",
    "QQ",
    "QQ_I",
    "QQ_SQRT_I",
    "parse_scalar",
    "DimensionMismatchError",
    "Matrix",
    "basis_vector",
    "rational_rows",
    "row_space",
    "row_space_contains",
    "same_row_space",
    "subspace_dim",
    "subspace_meet",
    "subspace_sum",
    "vec_add",
    "vec_is_zero",
    "vec_scale",
    "vec_sub",
    "zero_vector",
    "IntegerLattice",
    "hnf",
    "hnf_with_transform",
    "integer_kernel",
    "saturate",
]
