"""Families of matrix groups indexed by primes, with declared Frobenius polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import FieldError, SchemaError, ThresholdError
from ..ffcore import is_prime, prime_field
from ..ffcore import flinalg as fl
from ..nori.groups import MatrixGroup, reduce_words
from ..nori.thresholds import DEFAULT, Thresholds


def int_det(M) -> int:
    """Exact integer determinant by fraction-free elimination (Bareiss)."""
    A = [list(map(int, r)) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def int_matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def int_char_poly(M):
    """Characteristic polynomial over Z, highest degree first (Faddeev-LeVerrier)."""
    A = [list(map(int, r)) for r in M]
    n = len(A)
    coeffs = [1]
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev = coeffs[-1]
        Mk = [[Mk[i][j] + (prev if i == j else 0) for j in range(n)] for i in range(n)]
        AM = int_matmul(A, Mk)
        tr = sum(AM[i][i] for i in range(n))
        if tr % k:  # pragma: no cover
            raise ArithmeticError("non-integral trace step")
        coeffs.append(-tr // k)
        Mk = AM
    return coeffs


def char_map(M, p):
    """(c_{N-1}, ..., c_0) of the monic characteristic polynomial of M over GF(p)."""
    F = prime_field(p)
    low = fl.char_poly(F, (np.asarray(M, dtype=np.int64) % p).tolist())
    return [int(x) for x in reversed(low[:-1])]


@dataclass
class SystemBundle:
    n: int
    primes: list
    integral_generators: list = None
    per_prime_groups: dict = field(default_factory=dict)  # ell -> list of generator matrices
    frobenius_words: list = field(default_factory=list)  # [{"word": [...], "poly": [...]}]
    label: str = ""
    bad_primes: list = field(default_factory=list)
    ell_min: int = None
    subgroup_words: list = None

    def __post_init__(self):
        self.primes = sorted(int(p) for p in self.primes)
        if len(set(self.primes)) != len(self.primes):
            raise SchemaError("duplicate primes in bundle")
        for p in self.primes:
            if not is_prime(p):
                raise SchemaError(f"{p} is not prime")
        self.per_prime_groups = {int(k): v for k, v in (self.per_prime_groups or {}).items()}
        if self.integral_generators is None and any(p not in self.per_prime_groups for p in self.primes):
            raise SchemaError("bundle needs integral generators or a group for every prime")
        for w in self.frobenius_words:
            if "word" not in w or "poly" not in w:
                raise SchemaError("frobenius word entries need 'word' and 'poly'")
            if len(w["poly"]) != self.n + 1:
                raise SchemaError(f"polynomial for word {w['word']} must have degree {self.n}")

    # -- groups ---------------------------------------------------------

    def group(self, ell: int) -> MatrixGroup:
        if ell not in self.primes:
            raise SchemaError(f"prime {ell} is not part of the bundle")
        if ell in self.per_prime_groups:
            G = MatrixGroup(self.n, ell, tuple(self.per_prime_groups[ell]), self.label)
        else:
            G = reduce_integral_group(self.integral_generators, ell, self.label)
        if self.subgroup_words:
            G = MatrixGroup(self.n, ell, tuple(reduce_words(G, self.subgroup_words)), self.label)
        return G

    def validate_primes(self, thresholds: Thresholds = DEFAULT):
        floor = self.ell_min if self.ell_min is not None else thresholds.ell_min(self.n)
        for p in self.primes:
            if p < floor:
                raise ThresholdError(f"prime {p} is below ell_min = {floor} for N = {self.n}")
            if p in self.bad_primes:
                raise ThresholdError(f"prime {p} is declared bad for this family")

    # -- json -------------------------------------------------------------

    def to_json(self):
        out = {
            "n": self.n,
            "label": self.label,
            "primes": list(self.primes),
            "frobenius_words": [{"word": list(w["word"]), "poly": list(w["poly"])} for w in self.frobenius_words],
        }
        if self.integral_generators is not None:
            out["integral_generators"] = [[list(map(int, r)) for r in g] for g in self.integral_generators]
        if self.per_prime_groups:
            out["per_prime_groups"] = {
                str(p): [np.asarray(g, dtype=np.int64).tolist() for g in gens]
                for p, gens in sorted(self.per_prime_groups.items())
            }
        if self.bad_primes:
            out["bad_primes"] = sorted(self.bad_primes)
        if self.ell_min is not None:
            out["ell_min"] = self.ell_min
        if self.subgroup_words:
            out["subgroup_words"] = [list(w) for w in self.subgroup_words]
        return out

    @classmethod
    def from_json(cls, obj) -> "SystemBundle":
        if not isinstance(obj, dict):
            raise SchemaError("bundle must be a JSON object")
        try:
            return cls(
                n=int(obj["n"]),
                primes=list(obj["primes"]),
                integral_generators=obj.get("integral_generators"),
                per_prime_groups=obj.get("per_prime_groups") or {},
                frobenius_words=list(obj.get("frobenius_words", [])),
                label=str(obj.get("label", "")),
                bad_primes=[int(p) for p in obj.get("bad_primes", [])],
                ell_min=obj.get("ell_min"),
                subgroup_words=obj.get("subgroup_words"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"bad bundle: {exc}") from exc


def reduce_integral_group(gens, ell: int, label: str = "") -> MatrixGroup:
    """Entrywise reduction of integer generators modulo ell."""
    if not gens:
        raise SchemaError("no integral generators")
    n = len(gens[0])
    for g in gens:
        if int_det(g) % ell == 0:
            raise FieldError(f"{ell} is a bad prime: a generator has determinant divisible by it")
    return MatrixGroup(n, ell, tuple(np.asarray(g, dtype=np.int64) % ell for g in gens), label)


def apply_iota(G: MatrixGroup) -> MatrixGroup:
    """Replace every generator A by (A^t)^(-1)."""
    from ..ffcore.linalg import inv_mod

    return MatrixGroup(G.n, G.ell, tuple(inv_mod(g.T.copy(), G.ell) for g in G.generators), G.label)


def verify_compatibility(b: SystemBundle):
    """Compare characteristic polynomials of the declared words with P_w mod ell at every prime."""
    report = {"label": b.label, "passed": True, "vacuous": False, "warnings": [], "mismatches": []}
    if not b.frobenius_words:
        report["vacuous"] = True
        report["warnings"].append("no frobenius words declared; compatibility check is vacuous")
        return report
    for p in b.primes:
        G = b.group(p)
        words = [w["word"] for w in b.frobenius_words]
        images = reduce_words(G, words)
        for w, M in zip(b.frobenius_words, images):
            got = [1] + char_map(M, p)
            expected = [int(c) % p for c in w["poly"]]
            if got != expected:
                report["passed"] = False
                report["mismatches"].append({"word": list(w["word"]), "ell": p, "got": got, "expected": expected})
    return report
