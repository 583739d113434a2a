"""Truncated exponential and logarithm for unipotent / nilpotent matrices mod p."""

from __future__ import annotations

import numpy as np

from ..errors import NotNilpotentError, NotUnipotentError, ThresholdError
from ..ffcore.linalg import eye, matpow_mod


def _check_char(n, p):
    if p <= n - 1:
        raise ThresholdError(f"truncated series need p > N - 1 (p={p}, N={n})")


def trunc_log(x, p):
    """log(x) = sum_{i<N} (-1)^(i+1) (x - I)^i / i for unipotent x."""
    x = np.asarray(x, dtype=np.int64) % p
    n = x.shape[0]
    _check_char(n, p)
    nil = (x - eye(n)) % p
    if matpow_mod(nil, n, p).any():
        raise NotUnipotentError("matrix is not unipotent")
    out = np.zeros_like(nil)
    term = eye(n)
    for i in range(1, n):
        term = (term @ nil) % p
        coeff = pow(i, -1, p) if i % 2 else (-pow(i, -1, p)) % p
        out = (out + coeff * term) % p
    return out


def trunc_exp(nil, t, p):
    """exp(t * nil) = sum_{i<N} (t nil)^i / i! for nilpotent nil."""
    nil = np.asarray(nil, dtype=np.int64) % p
    n = nil.shape[0]
    _check_char(n, p)
    if matpow_mod(nil, n, p).any():
        raise NotNilpotentError("matrix is not nilpotent")
    tn = (int(t) % p) * nil % p
    out = eye(n)
    term = eye(n)
    fact = 1
    for i in range(1, n):
        term = (term @ tn) % p
        fact = fact * i % p
        out = (out + pow(fact, -1, p) * term) % p
    return out
