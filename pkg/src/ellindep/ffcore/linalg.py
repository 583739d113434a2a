"""numpy linear algebra over a prime field GF(p).

Arrays are int64 with entries in [0, p). Products are reduced after every
multiplication, so p must stay below 2^25 to keep dot products exact for
the matrix sizes used here.
"""

from __future__ import annotations

import numpy as np

from ..errors import FieldError

P_MAX = 1 << 25


def as_mod(A, p):
    if p >= P_MAX:
        raise FieldError(f"prime {p} too large for int64 matrix arithmetic")
    return np.asarray(A, dtype=np.int64) % p


def matmul_mod(A, B, p):
    return (A @ B) % p


def eye(n):
    return np.eye(n, dtype=np.int64)


def matpow_mod(A, e, p):
    n = A.shape[0]
    if e < 0:
        A, e = inv_mod(A, p), -e
    result = eye(n)
    base = A % p
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def rref_mod(A, p):
    """(R, pivots) with R the nonzero rows of the reduced echelon form."""
    R = np.array(A, dtype=np.int64) % p
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            R[rows] = (R[rows] - np.outer(col[rows], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank_mod(A, p) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod(A, p)[1])


def nullspace_mod(A, p):
    """Rows form a basis of {x : A x = 0}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return eye(n)
    R, pivots = rref_mod(A, p)
    free = [c for c in range(n) if c not in pivots]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        out[k, fc] = 1
        for row, pc in zip(R, pivots):
            out[k, pc] = (-row[fc]) % p
    return out


def inv_mod(A, p):
    n = A.shape[0]
    aug = np.concatenate([np.asarray(A, dtype=np.int64) % p, eye(n)], axis=1)
    R, pivots = rref_mod(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise FieldError("matrix is singular modulo p")
    return R[:, n:]


def det_mod(A, p) -> int:
    M = np.array(A, dtype=np.int64) % p
    n = M.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(M[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + nz[0]
        if i != c:
            M[[c, i]] = M[[i, c]]
            det = -det
        piv = int(M[c, c])
        det = det * piv % p
        inv = pow(piv, -1, p)
        below = M[c + 1 :, c]
        M[c + 1 :] = (M[c + 1 :] - np.outer(below * inv % p, M[c])) % p
    return det % p


def is_identity(A) -> bool:
    n = A.shape[0]
    return bool(np.array_equal(A, np.eye(n, dtype=A.dtype)))
