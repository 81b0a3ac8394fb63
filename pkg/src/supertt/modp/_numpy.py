"""Pure-numpy mod-p linear algebra (fallback backend).

All matrices are int64 arrays with entries already reduced into [0, p).
Primes are kept below 2^31 so products fit comfortably in int64.
"""

from __future__ import annotations

import numpy as np


def rref_mod_p(a: np.ndarray, p: int):
    """Row-reduce in place over F_p.

    Returns (matrix, pivot_cols, row_perm) where row_perm[i] is the original
    index of the row now at position i.
    """
    a = a % p
    n_rows, n_cols = a.shape
    row_perm = np.arange(n_rows)
    pivots = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
            row_perm[[r, pr]] = row_perm[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots, row_perm


def rank_mod_p(a: np.ndarray, p: int) -> int:
    _, pivots, _ = rref_mod_p(a.copy(), p)
    return len(pivots)


def kernel_basis_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Right kernel basis, one vector per row of the result."""
    n_cols = a.shape[1]
    r, pivots, _ = rref_mod_p(a.copy(), p)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-int(r[i, fc])) % p
    return basis


def det_mod_p(a: np.ndarray, p: int) -> int:
    a = a.copy() % p
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        pr = c + int(nz[0])
        if pr != c:
            a[[c, pr]] = a[[pr, c]]
            det = (-det) % p
        det = (det * int(a[c, c])) % p
        inv = pow(int(a[c, c]), p - 2, p)
        a[c] = (a[c] * inv) % p
        rows = np.nonzero(a[c + 1 :, c])[0] + c + 1
        if rows.size:
            a[rows] = (a[rows] - np.outer(a[rows, c], a[c])) % p
    return det % p


def pivot_submatrix_mod_p(a: np.ndarray, p: int):
    """Row and column indices of a maximal invertible square submatrix."""
    red, pivots, row_perm = rref_mod_p(a.copy(), p)
    rows = sorted(int(row_perm[i]) for i in range(len(pivots)))
    return rows, [int(c) for c in pivots]
