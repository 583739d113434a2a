"""Composition factors of finite groups of Lie type and their ell-ranks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SchemaError
from .ffcore import is_prime
from .nori.catalog import parse_type, type_sort_key

_SUPERSCRIPT = {2: "²", 3: "³"}


@dataclass(frozen=True)
class LieFactorDescriptor:
    """A simple factor over F_ell: closure type, Frobenius orbit length f, diagram twist."""

    type: str
    twist: int = 1
    f: int = 1
    ell: int = 5

    def __post_init__(self):
        try:
            kind, rank = parse_type(self.type)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        object.__setattr__(self, "type", f"{kind}{rank}")
        if not is_prime(self.ell) or self.ell < 5:
            raise SchemaError(f"ell must be a prime >= 5, got {self.ell}")
        if self.f < 1:
            raise SchemaError("f must be positive")
        if self.twist == 2:
            ok = (kind == "A" and rank >= 2) or kind == "D" or (kind, rank) == ("E", 6)
        elif self.twist == 3:
            ok = (kind, rank) == ("D", 4)
        else:
            ok = self.twist == 1
        if not ok:
            raise SchemaError(f"no twist {self.twist} form of type {self.type}")

    @property
    def kind(self):
        return self.type[0]

    @property
    def lie_rank(self):
        return int(self.type[1:])

    @property
    def q(self):
        return self.ell**self.f

    def to_json(self):
        return {"type": self.type, "twist": self.twist, "f": self.f, "ell": self.ell}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(str(obj["type"]), int(obj.get("twist", 1)), int(obj.get("f", 1)), int(obj["ell"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"bad factor descriptor: {exc}") from exc


def composition_factors(d: LieFactorDescriptor):
    """Non-cyclic composition factor name followed by the marker 'cyclic'."""
    kind, rank, q = d.kind, d.lie_rank, d.q
    if d.twist == 1:
        name = f"PSL_2({q})" if (kind, rank) == ("A", 1) else f"{kind}_{rank}({q})"
    else:
        name = f"{_SUPERSCRIPT[d.twist]}{kind}_{rank}({q}^{d.twist})"
    return [name, "cyclic"]


def g_type_rank(factors, g: str) -> int:
    try:
        kind, rank = parse_type(g)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    target = f"{kind}{rank}"
    return sum(d.f * d.lie_rank for d in factors if d.type == target)


@dataclass
class RankReport:
    total_rank: int
    per_type: dict = field(default_factory=dict)
    a4_parity: int = 0

    def to_json(self):
        return {"total_rank": self.total_rank, "per_type": dict(self.per_type), "a4_parity": self.a4_parity}


def total_rank(factors) -> RankReport:
    factors = list(factors)
    per = {}
    for d in factors:
        per[d.type] = per.get(d.type, 0) + d.f * d.lie_rank
    per = {k: per[k] for k in sorted(per, key=type_sort_key)}
    a4 = per.get("A4", 0)
    return RankReport(sum(per.values()), per, (a4 // 4) % 2)


def algebraic_group_rank(factors) -> int:
    """f * rank over the algebraic closure of a semisimple group over F_q, q = ell^f.

    Each descriptor is an F_ell-simple factor whose closure splits into f
    copies of its type, so the closure rank is the sum of f * rank(type).
    """
    return sum(d.f * d.lie_rank for d in factors)


def check_origin(factors, closure_rank: int, f: int = 1) -> bool:
    """f * closure_rank agrees with the total rank computed from composition factors."""
    return total_rank(factors).total_rank == f * closure_rank


def adjoint_rank(factors, g: str, presentation: str = "field") -> int:
    """g-type rank through adjoint simple groups G over F_{ell^f'} with G = prod^m H over the closure.

    ``field``: G is absolutely simple over F_{ell^f} (f' = f, m = 1).
    ``restriction``: G is the restriction of scalars to F_ell (f' = 1, m = f).
    Both give f' * rank(G) = f' * m * rank(h).
    """
    kind, rank = parse_type(g)
    target = f"{kind}{rank}"
    total = 0
    for d in factors:
        if d.type != target:
            continue
        if presentation == "field":
            f_prime, m = d.f, 1
        elif presentation == "restriction":
            f_prime, m = 1, d.f
        else:
            raise ValueError(f"unknown presentation {presentation!r}")
        total += f_prime * (m * d.lie_rank)
    return total


def an_counts(factors, excluded=(1, 2, 3, 4, 5, 7, 8)):
    """Number of closure-level A_n factors for n outside ``excluded``."""
    out = {}
    for d in factors:
        if d.kind == "A" and d.lie_rank not in excluded:
            out[d.type] = out.get(d.type, 0) + d.f
    return {k: out[k] for k in sorted(out, key=type_sort_key)}


def _degrees(kind, n):
    if kind == "A":
        return list(range(2, n + 2)), n * (n + 1) // 2
    if kind in "BC":
        return [2 * i for i in range(1, n + 1)], n * n
    if kind == "D":
        return [2 * i for i in range(1, n)] + [n], n * (n - 1)
    raise SchemaError(f"order formula not available for type {kind}")


def chevalley_order(type_name: str, q: int) -> int:
    """|G(F_q)| for the split simply connected group of the given type (A, B, C, D)."""
    try:
        kind, rank = parse_type(type_name)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    degs, npos = _degrees(kind, rank)
    out = q**npos
    for d in degs:
        out *= q**d - 1
    return out
