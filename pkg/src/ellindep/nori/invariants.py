"""Invariant tensors of a matrix Lie algebra and the induced action of group elements."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import BudgetExceeded
from ..ffcore.linalg import eye, nullspace_mod, rref_mod
from .lie import LieSubalgebra
from .thresholds import DEFAULT, Thresholds


@dataclass
class InvariantSpace:
    n: int
    ell: int
    degree_bound: int
    blocks: dict = field(default_factory=dict)  # degree i -> (k_i, N^i) basis rows

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.blocks.values())

    def dims(self):
        return {i: len(b) for i, b in sorted(self.blocks.items())}


def _derivation(x, i, p):
    n = x.shape[0]
    total = np.zeros((n**i, n**i), dtype=np.int64)
    for k in range(i):
        term = np.ones((1, 1), dtype=np.int64)
        for j in range(i):
            term = np.kron(term, x if j == k else eye(n)) % p
        total = (total + term) % p
    return total


def invariant_subspace(s: LieSubalgebra, degree_bound: int, thresholds: Thresholds = DEFAULT) -> InvariantSpace:
    """Vectors of V + V^2 + ... + V^c killed by every element of s."""
    n, p = s.ambient_dim, s.ell
    if degree_bound < 1:
        raise BudgetExceeded("degree bound must be at least 1")
    if degree_bound > thresholds.max_tensor_degree or n > thresholds.max_tensor_dim:
        raise BudgetExceeded(
            f"tensor space too large (N={n}, c={degree_bound}; limits "
            f"{thresholds.max_tensor_dim}, {thresholds.max_tensor_degree})"
        )
    out = InvariantSpace(n, p, degree_bound)
    for i in range(1, degree_bound + 1):
        basis = eye(n**i)
        for x in s.basis:
            if not len(basis):
                break
            D = _derivation(x, i, p)
            image = (D @ basis.T) % p
            ker = nullspace_mod(image, p)
            basis = (ker @ basis) % p
            if len(basis):
                basis, _ = rref_mod(basis, p)
        out.blocks[i] = basis
    return out


def _tensor_power(g, i, p):
    out = np.ones((1, 1), dtype=np.int64)
    for _ in range(i):
        out = np.kron(out, g) % p
    return out


def t_map(g, W: InvariantSpace):
    """Matrix of g acting diagonally on W, in the stored basis of W.

    Raises ValueError when g does not preserve W.
    """
    p = W.ell
    g = np.asarray(g, dtype=np.int64) % p
    dim = W.dim
    out = np.zeros((dim, dim), dtype=np.int64)
    offset = 0
    for i, B in sorted(W.blocks.items()):
        k = len(B)
        if not k:
            continue
        imgs = (B @ _tensor_power(g, i, p).T) % p  # rows: images of basis rows
        R, piv = rref_mod(B, p)
        for a in range(k):
            coords = imgs[a][piv]
            if np.any((coords @ R - imgs[a]) % p):
                raise ValueError("element does not preserve the invariant space")
            out[offset : offset + k, offset + a] = coords
        offset += k
    return out
