"""Tensor commutation (swap) matrices and generalized Gell-Mann bases.

Builds the pq x pq swap matrix exchanging the factors of a tensor product
by two independent constructions, generates the generator basis for any
dimension n >= 2, and decomposes operators over single and product
generator bases by Hilbert-Schmidt projection.
"""

from .matops import (
    DEFAULT_ABS_EPS,
    dagger,
    elementary,
    hs_inner,
    identity,
    kron,
    matmul,
    max_abs_diff,
    trace,
)
from .gellmann import (
    BasisCoefficients,
    GellMannBasis,
    GeneratorLabel,
    antisymmetric_generator,
    basis,
    diagonal_generator,
    expand_in_basis,
    reconstruct,
    symmetric_generator,
)
from .swap import SwapMatrix, swap_by_formula, swap_by_rule
from .product import (
    ClosedFormReport,
    ProductCoefficients,
    closed_form_swap_coefficients,
    decompose_product,
    diagonal_family_reference,
    diagonal_family_sum,
    extended_labels,
    offdiag_family_reference,
    offdiag_family_sum,
    reconstruct_product,
    swap_23_expression,
    swap_32_expression,
    verify_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ABS_EPS",
    "BasisCoefficients",
    "ClosedFormReport",
    "GellMannBasis",
    "GeneratorLabel",
    "ProductCoefficients",
    "SwapMatrix",
    "antisymmetric_generator",
    "basis",
    "closed_form_swap_coefficients",
    "dagger",
    "decompose_product",
    "diagonal_family_reference",
    "diagonal_family_sum",
    "diagonal_generator",
    "elementary",
    "expand_in_basis",
    "extended_labels",
    "hs_inner",
    "identity",
    "kron",
    "matmul",
    "max_abs_diff",
    "offdiag_family_reference",
    "offdiag_family_sum",
    "reconstruct",
    "reconstruct_product",
    "swap_23_expression",
    "swap_32_expression",
    "swap_by_formula",
    "swap_by_rule",
    "symmetric_generator",
    "trace",
    "verify_closed_form",
]
