"""Matrix Lie subalgebras of gl_N(F_p) and their bracket closure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..ffcore.linalg import rref_mod
from .explog import trunc_log


@dataclass
class LieSubalgebra:
    ambient_dim: int
    ell: int
    basis: np.ndarray  # (dim, N, N); flattened rows are in reduced echelon form
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, X):
        """Coordinates of X in the basis (read off at the pivot positions)."""
        flat = np.asarray(X, dtype=np.int64).reshape(-1) % self.ell
        return flat[list(self.pivots)].copy()

    def contains(self, X) -> bool:
        c = self.coords(X)
        flat = np.asarray(X, dtype=np.int64).reshape(-1) % self.ell
        recon = (c @ self.basis.reshape(self.dim, -1)) % self.ell if self.dim else np.zeros_like(flat)
        return bool(np.array_equal(recon, flat))

    def to_json(self):
        return {"ambient_dim": self.ambient_dim, "ell": self.ell, "dim": self.dim,
                "basis": self.basis.tolist()}


def bracket(A, B, p):
    return (A @ B - B @ A) % p


class _Closure:
    def __init__(self, n, p):
        self.n, self.p = n, p
        self.span = []  # raw spanning matrices
        self.R = np.zeros((0, n * n), dtype=np.int64)
        self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def _reduce(self, v):
        p = self.p
        for row, pc in zip(self.R, self.pivots):
            if v[pc]:
                v = (v - v[pc] * row) % p
        return v

    def _insert(self, M):
        v = self._reduce(M.reshape(-1) % self.p)
        if not v.any():
            return False
        self.R, self.pivots = rref_mod(np.vstack([self.R, v]), self.p)
        self.span.append(M % self.p)
        return True

    def add(self, mats):
        queue = [m for m in mats if self._insert(np.asarray(m, dtype=np.int64))]
        while queue:
            x = queue.pop()
            for y in list(self.span):
                z = bracket(x, y, self.p)
                if self._insert(z):
                    queue.append(z)

    def result(self):
        n = self.n
        order = np.argsort(self.pivots, kind="stable")
        R = self.R[order] if self.dim else self.R
        return LieSubalgebra(n, self.p, R.reshape(-1, n, n).copy(), tuple(sorted(self.pivots)))


class lie_closure_dim_tracker:
    """Incremental closure over logs of unipotent matrices (used by scanning)."""

    def __init__(self, n, p):
        self._c = _Closure(n, p)
        self._seen = set()

    @property
    def dim(self):
        return self._c.dim

    def add(self, unipotents):
        logs = []
        for u in unipotents:
            k = u.tobytes()
            if k not in self._seen:
                self._seen.add(k)
                logs.append(trunc_log(u, self._c.p))
        self._c.add(logs)


def lie_closure(nilpotents, p, n=None) -> LieSubalgebra:
    """Smallest bracket-closed subspace of gl_N(F_p) containing the inputs."""
    mats = [np.asarray(m, dtype=np.int64) % p for m in nilpotents]
    if n is None:
        if not mats:
            raise ValueError("ambient dimension needed for an empty input")
        n = mats[0].shape[0]
    c = _Closure(n, p)
    c.add(mats)
    return c.result()


def lie_algebra_of(unipotents, p, n) -> LieSubalgebra:
    return lie_closure([trunc_log(u, p) for u in unipotents], p, n)
