"""Exact linear algebra over prime fields and the rationals."""

from .backend import HAVE_COMPILED, backend_name
from .elim import (
    SubspaceBasis,
    bareiss_rank,
    column_space_basis,
    intersect,
    kernel_basis,
    rank_dense,
    row_space_basis,
    rref,
)
from .matrix import ExactMatrix, mat_mul, mat_vec, pack_gf2_rows

__all__ = [
    "ExactMatrix",
    "SubspaceBasis",
    "backend_name",
    "bareiss_rank",
    "column_space_basis",
    "HAVE_COMPILED",
    "intersect",
    "kernel_basis",
    "mat_mul",
    "mat_vec",
    "pack_gf2_rows",
    "rank_dense",
    "row_space_basis",
    "rref",
]
