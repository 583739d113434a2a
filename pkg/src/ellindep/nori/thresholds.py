"""Configurable stand-ins for the non-effective constants of the theory."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional


def default_ell_min(n: int) -> int:
    return max(2 * n, 7)


@dataclass(frozen=True)
class Thresholds:
    ell_min_fn: Callable[[int], int] = default_ell_min
    weight_bound_override: Optional[int] = None
    field_cap: int = 1 << 31
    bfs_cap: int = 10**6
    # auto mode gives up on enumeration at this size and scans instead
    auto_cap: int = 2 * 10**5
    draws: int = 32
    max_tensor_degree: int = 4
    max_tensor_dim: int = 6

    def ell_min(self, n: int) -> int:
        return max(self.ell_min_fn(n), n)

    def weight_bound(self, n: int) -> int:
        return self.weight_bound_override if self.weight_bound_override is not None else n

    @classmethod
    def with_ell_min(cls, value: int | None, **kw) -> "Thresholds":
        if value is None:
            return cls(**kw)
        return cls(ell_min_fn=lambda n, v=value: v, **kw)


DEFAULT = Thresholds()
