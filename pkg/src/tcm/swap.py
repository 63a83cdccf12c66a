"""Tensor commutation (swap) matrices.

``swap(p, q)`` is the pq x pq permutation matrix U satisfying
``U @ kron(a, b) == kron(b, a)`` for every p-vector ``a`` and q-vector
``b``.  Two independent constructions are provided: a delta formula
(`swap_by_formula`, the implementation of record) and a literal
column-by-column walk (`swap_by_rule`, a cross-check).  Both store the
permutation as an index map; the dense 0/1 matrix is rendered on demand.

Index layout matches :mod:`tcm.matops`: the column of the single 1 for
input slot ``(j1, j2)`` is ``j1*q + j2`` (``j1 < p`` outer, ``j2 < q``
inner) and its row is ``j2*p + j1``, so applying U moves the entry of
``a (x) b`` at (j1, j2) to the slot of ``b (x) a`` at (j2, j1).
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SwapMatrix:
    """Permutation representation of the p (x) q swap.

    ``perm[col]`` is the row holding the single 1 of that column
    (0-based).  Instances are immutable and safe to share.
    """

    p: int
    q: int
    perm: np.ndarray

    def __post_init__(self):
        total = self.p * self.q
        perm = np.asarray(self.perm, dtype=np.int64)
        if perm.shape != (total,) or not np.array_equal(np.sort(perm), np.arange(total)):
            raise ValueError(f"perm must be a permutation of 0..{total - 1}")
        perm.setflags(write=False)
        object.__setattr__(self, "perm", perm)

    @property
    def size(self):
        return self.p * self.q

    def apply(self, v):
        """Permute a length-pq vector without building the dense matrix.

        ``out[perm[c]] = v[c]``; for ``v = kron(a, b)`` the result equals
        ``kron(b, a)`` exactly (entries are moved, never recomputed).
        """
        v = np.asarray(v, dtype=np.complex128)
        if v.shape != (self.size,):
            raise ValueError(f"vector length must be {self.size}, got {v.shape}")
        out = np.empty_like(v)
        out[self.perm] = v
        return out

    def dense(self):
        """Dense pq x pq rendering with one 1 per row and column."""
        total = self.size
        m = np.zeros((total, total), dtype=np.complex128)
        m[self.perm, np.arange(total)] = 1.0
        return m

    def one_positions(self):
        """1-based (row, col) pairs of the ones, sorted by row."""
        return sorted((int(self.perm[col]) + 1, col + 1) for col in range(self.size))


def _check_dims(p, q):
    if p < 1 or q < 1:
        raise ValueError(f"factor dimensions must be positive, got p={p}, q={q}")


def swap_by_formula(p, q):
    """Construct the swap from the delta formula.

    The entry at composite row ``(i1, i2)`` and column ``(j1, j2)`` is 1
    exactly when ``i1 == j2`` and ``i2 == j1``, i.e.
    ``perm[j1*q + j2] = j2*p + j1``.  A factor of dimension 1 yields the
    identity permutation (the degenerate swap of a scalar factor).
    """
    _check_dims(p, q)
    j1 = np.repeat(np.arange(p), q)
    j2 = np.tile(np.arange(q), p)
    return SwapMatrix(p=p, q=q, perm=j2 * p + j1)


def swap_by_rule(p, q):
    """Construct the swap by the constructive column walk.

    Start with a 1 at row 1, column 1; in each following column descend p
    rows and place a 1.  Whenever fewer than p rows remain (after the k-th
    group of q ones), restart the descent at row k+1 in the next column.
    The walk ends with a 1 at (pq, pq).  Kept free of any call into
    :func:`swap_by_formula` so the two constructions stay independent
    cross-checks of each other.
    """
    _check_dims(p, q)
    total = p * q
    rows = np.empty(total, dtype=np.int64)
    row = 1
    group = 1
    for col in range(1, total + 1):
        rows[col - 1] = row
        if row + p <= total:
            row += p
        else:
            # Walk checkpoints: each group holds exactly q ones, and group
            # k+1 starts in the next column at row k+1.
            assert col == group * q, f"group {group} ended at column {col}, expected {group * q}"
            group += 1
            row = group
    assert rows[-1] == total, "walk must end with a 1 at (pq, pq)"
    return SwapMatrix(p=p, q=q, perm=rows - 1)
