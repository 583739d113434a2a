"""Square matrices over a FieldDescriptor."""

from __future__ import annotations

from dataclasses import dataclass

from . import flinalg
from .field import FieldDescriptor


@dataclass(frozen=True)
class MatrixFF:
    field: FieldDescriptor
    rows: tuple

    @classmethod
    def from_ints(cls, F: FieldDescriptor, rows):
        return cls(F, tuple(tuple(F.embed(int(x)) for x in r) for r in rows))

    @classmethod
    def identity(cls, F: FieldDescriptor, n: int):
        return cls(F, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __matmul__(self, other: "MatrixFF") -> "MatrixFF":
        return MatrixFF(self.field, _freeze(flinalg.mat_mul(self.field, self.tolist(), other.tolist())))


def _freeze(M):
    return tuple(tuple(r) for r in M)


def char_poly(M, F: FieldDescriptor | None = None):
    """Monic characteristic polynomial, coefficients lowest degree first.

    Accepts a MatrixFF, or a nested list together with its field.
    """
    if isinstance(M, MatrixFF):
        F, rows = M.field, M.tolist()
    else:
        if F is None:
            raise TypeError("field required for a plain matrix")
        rows = [[F.embed(x) if F.degree == 1 else x for x in r] for r in M]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("char_poly needs a square matrix")
    if not rows:
        return [1]
    return flinalg.char_poly(F, rows)
