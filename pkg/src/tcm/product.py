"""Decomposition of pq x pq operators over the product generator basis.

The product basis is ``{I_p, G_1, ..., G_{p^2-1}} (x) {I_q, H_1, ...}``
with G, H the generator bases of the two factors.  Coefficients are
recovered by Hilbert-Schmidt projection: each basis element is orthogonal
to the others, with squared norm n for the identity of dimension n and 2
for every generator, so every grid cell is an independent projection.

For equal factors the swap matrix has the closed-form expansion

    swap(n, n) = (1/n) I (x) I + (1/2) sum_k G_k (x) G_k

exposed as a coefficient grid by :func:`closed_form_swap_coefficients`
and checked numerically by :func:`verify_closed_form`.  The per-family
sums behind that expansion (`offdiag_family_sum`, `diagonal_family_sum`)
are provided together with their condensed elementary-matrix forms so the
identity can be audited piecewise.
"""

from dataclasses import dataclass

import numpy as np

from .matops import DEFAULT_ABS_EPS, as_matrix, elementary, identity, max_abs_diff
from .gellmann import antisymmetric_generator, basis, diagonal_generator, symmetric_generator


@dataclass(frozen=True)
class ProductCoefficients:
    """p^2 x q^2 coefficient grid over the product basis.

    Index 0 on each axis is the identity; indices 1..n^2-1 follow the
    canonical generator order of the corresponding factor.
    """

    p: int
    q: int
    grid: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=np.complex128)
        expected = (self.p * self.p, self.q * self.q)
        if grid.shape != expected:
            raise ValueError(f"grid shape must be {expected}, got {grid.shape}")
        grid.setflags(write=False)
        object.__setattr__(self, "grid", grid)


@dataclass(frozen=True)
class ClosedFormReport:
    """Outcome of one closed-form swap check."""

    n: int
    max_error: float
    abs_eps: float
    passed: bool


def _extended_factors(n):
    """Matrices and squared HS norms of ``{I_n} + basis(n)``.

    Dimension 1 has no generators; its extended basis is just ``I_1``.
    """
    mats = [identity(n)]
    norms = [float(n)]
    if n >= 2:
        mats.extend(basis(n).matrices)
        norms.extend([2.0] * (n * n - 1))
    return mats, norms


def extended_labels(n):
    """Axis labels for a coefficient grid: ``I`` then S/A/D notation."""
    labels = ["I"]
    if n >= 2:
        labels.extend(str(label) for label in basis(n).labels)
    return labels


def decompose_product(m, p, q):
    """Project ``m`` onto the product basis of dimensions p and q.

    Each cell is ``hs_inner(kron(A_a, B_b), m)`` divided by the product of
    the factors' squared norms; the cells are independent of each other
    and of evaluation order.
    """
    m = as_matrix(m)
    if p < 1 or q < 1:
        raise ValueError(f"factor dimensions must be positive, got p={p}, q={q}")
    if m.shape != (p * q, p * q):
        raise ValueError(f"matrix shape {m.shape} does not match p*q = {p * q}")
    a_mats, a_norms = _extended_factors(p)
    b_mats, b_norms = _extended_factors(q)
    grid = np.empty((p * p, q * q), dtype=np.complex128)
    for a, (ma, na) in enumerate(zip(a_mats, a_norms)):
        for b, (mb, nb) in enumerate(zip(b_mats, b_norms)):
            grid[a, b] = np.vdot(np.kron(ma, mb), m) / (na * nb)
    return ProductCoefficients(p=p, q=q, grid=grid)


def reconstruct_product(coeffs):
    """Evaluate ``sum_ab grid[a, b] * kron(A_a, B_b)``."""
    p, q = coeffs.p, coeffs.q
    a_mats, _ = _extended_factors(p)
    b_mats, _ = _extended_factors(q)
    out = np.zeros((p * q, p * q), dtype=np.complex128)
    for a, ma in enumerate(a_mats):
        for b, mb in enumerate(b_mats):
            z = coeffs.grid[a, b]
            if z != 0:
                out += z * np.kron(ma, mb)
    return out


def closed_form_swap_coefficients(n):
    """Coefficient grid of ``swap(n, n)``: 1/n at (0,0), 1/2 on the diagonal."""
    if n < 2:
        raise ValueError(f"closed form needs n >= 2, got {n}")
    grid = np.zeros((n * n, n * n), dtype=np.complex128)
    grid[0, 0] = 1.0 / n
    for k in range(1, n * n):
        grid[k, k] = 0.5
    return ProductCoefficients(p=n, q=n, grid=grid)


def offdiag_family_sum(n):
    """``sum_{i<j} kron(S_ij, S_ij) + kron(A_ij, A_ij)``."""
    if n < 2:
        raise ValueError(f"family sums need n >= 2, got {n}")
    out = np.zeros((n * n, n * n), dtype=np.complex128)
    for j in range(2, n + 1):
        for i in range(1, j):
            s = symmetric_generator(n, i, j)
            a = antisymmetric_generator(n, i, j)
            out += np.kron(s, s) + np.kron(a, a)
    return out


def offdiag_family_reference(n):
    """Condensed form of the pair-family sum: ``2 sum_{i!=j} kron(E_ij, E_ji)``."""
    if n < 2:
        raise ValueError(f"family sums need n >= 2, got {n}")
    out = np.zeros((n * n, n * n), dtype=np.complex128)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out += 2.0 * np.kron(elementary(n, i, j), elementary(n, j, i))
    return out


def diagonal_family_sum(n):
    """``sum_{d=1..n-1} kron(D_d, D_d)``."""
    if n < 2:
        raise ValueError(f"family sums need n >= 2, got {n}")
    out = np.zeros((n * n, n * n), dtype=np.complex128)
    for d in range(1, n):
        g = diagonal_generator(n, d)
        out += np.kron(g, g)
    return out


def diagonal_family_reference(n):
    """Condensed diagonal-family sum: ``-(2/n) I + 2 sum_i kron(E_ii, E_ii)``."""
    if n < 2:
        raise ValueError(f"family sums need n >= 2, got {n}")
    out = -(2.0 / n) * identity(n * n)
    for i in range(1, n + 1):
        e = elementary(n, i, i)
        out += 2.0 * np.kron(e, e)
    return out


def verify_closed_form(n, abs_eps=DEFAULT_ABS_EPS):
    """Check ``sum_k kron(G_k, G_k) == 2*swap(n,n) - (2/n) I`` numerically."""
    from .swap import swap_by_formula

    lhs = np.zeros((n * n, n * n), dtype=np.complex128)
    for g in basis(n).matrices:
        lhs += np.kron(g, g)
    rhs = 2.0 * swap_by_formula(n, n).dense() - (2.0 / n) * identity(n * n)
    err = max_abs_diff(lhs, rhs)
    return ClosedFormReport(n=n, max_error=err, abs_eps=abs_eps, passed=err <= abs_eps)


def swap_32_expression():
    """Six-term product-generator expression equal to the 3 (x) 2 swap.

    Each term is an elementary 6 x 6 matrix written as a tensor product of
    its factor expansions over {I_3, lambda} and {I_2, sigma}; the terms
    are evaluated literally, term by term.
    """
    i2, i3 = identity(2), identity(3)
    s1, s2, s3 = basis(2).matrices
    l = basis(3).matrices  # l[0] = lambda_1, ..., l[7] = lambda_8
    rt3 = np.sqrt(3.0)
    terms = [
        np.kron(i3 / 3 + l[2] / 2 + rt3 / 6 * l[7], i2 / 2 + s3 / 2),
        np.kron(l[0] / 2 + 0.5j * l[1], s1 / 2 - 0.5j * s2),
        np.kron(l[5] / 2 + 0.5j * l[6], i2 / 2 + s3 / 2),
        np.kron(l[0] / 2 - 0.5j * l[1], i2 / 2 - s3 / 2),
        np.kron(l[5] / 2 - 0.5j * l[6], s1 / 2 + 0.5j * s2),
        np.kron(i3 / 3 - rt3 / 3 * l[7], i2 / 2 - s3 / 2),
    ]
    return sum(terms)


def swap_23_expression():
    """Six-term product-generator expression equal to the 2 (x) 3 swap."""
    i2, i3 = identity(2), identity(3)
    s1, s2, s3 = basis(2).matrices
    l = basis(3).matrices
    rt3 = np.sqrt(3.0)
    terms = [
        np.kron(i2 / 2 + s3 / 2, i3 / 3 + l[2] / 2 + rt3 / 6 * l[7]),
        np.kron(s1 / 2 + 0.5j * s2, l[0] / 2 - 0.5j * l[1]),
        np.kron(i2 / 2 + s3 / 2, l[5] / 2 - 0.5j * l[6]),
        np.kron(i2 / 2 - s3 / 2, l[0] / 2 + 0.5j * l[1]),
        np.kron(s1 / 2 - 0.5j * s2, l[5] / 2 + 0.5j * l[6]),
        np.kron(i2 / 2 - s3 / 2, i3 / 3 - rt3 / 3 * l[7]),
    ]
    return sum(terms)
