"""Numba-accelerated mod-p linear algebra kernels.

Same contracts as `_numpy`; the elimination inner loops are @njit-compiled.
Falls back transparently when numba is unavailable (see package __init__).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _inv_mod(x, p):
    # Fermat inverse via fast exponentiation
    result = 1
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


@njit(cache=True)
def _rref_kernel(a, p, row_perm):
    n_rows, n_cols = a.shape
    pivots = np.empty(min(n_rows, n_cols), dtype=np.int64)
    n_piv = 0
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        pr = -1
        for i in range(r, n_rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(n_cols):
                tmp = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = tmp
            tmp_i = row_perm[r]
            row_perm[r] = row_perm[pr]
            row_perm[pr] = tmp_i
        inv = _inv_mod(a[r, c], p)
        for j in range(n_cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(n_rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(n_cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[n_piv] = c
        n_piv += 1
        r += 1
    return pivots[:n_piv]


@njit(cache=True)
def _det_kernel(a, p):
    n = a.shape[0]
    det = 1
    for c in range(n):
        pr = -1
        for i in range(c, n):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            return 0
        if pr != c:
            for j in range(n):
                tmp = a[c, j]
                a[c, j] = a[pr, j]
                a[pr, j] = tmp
            det = (-det) % p
        det = (det * a[c, c]) % p
        inv = _inv_mod(a[c, c], p)
        for j in range(n):
            a[c, j] = (a[c, j] * inv) % p
        for i in range(c + 1, n):
            if a[i, c] != 0:
                f = a[i, c]
                for j in range(n):
                    a[i, j] = (a[i, j] - f * a[c, j]) % p
    return det % p


def rref_mod_p(a: np.ndarray, p: int):
    a = (a % p).astype(np.int64)
    row_perm = np.arange(a.shape[0], dtype=np.int64)
    pivots = _rref_kernel(a, p, row_perm)
    return a, [int(c) for c in pivots], row_perm


def rank_mod_p(a: np.ndarray, p: int) -> int:
    _, pivots, _ = rref_mod_p(a.copy(), p)
    return len(pivots)


def kernel_basis_mod_p(a: np.ndarray, p: int) -> np.ndarray:
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
    return int(_det_kernel((a % p).astype(np.int64).copy(), p))


def pivot_submatrix_mod_p(a: np.ndarray, p: int):
    red, pivots, row_perm = rref_mod_p(a.copy(), p)
    rows = sorted(int(row_perm[i]) for i in range(len(pivots)))
    return rows, [int(c) for c in pivots]
