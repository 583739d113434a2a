"""Characters of tame cyclic groups F_{ell^d}^* as ell-restricted digit vectors.

The level-d fundamental character is pinned to the least primitive element
g of GF(ell^d) under the integer encoding: the character with exponent e
sends g to g^e.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSemisimpleError, SchemaError
from .ffcore import ext_field, is_prime, prime_field
from .ffcore import flinalg as fl
from .ffcore import poly
from .ffcore.linalg import eye, matpow_mod
from .nori.cartan import is_semisimple_matrix

VERDICTS = ("confirmed", "hypothesis-not-met", "violated")


def restrict_digits(e: int, d: int, ell: int):
    """Base-ell digits of e mod (ell^d - 1), low first; the all-(ell-1) pattern becomes zero."""
    if d < 1:
        raise SchemaError("level must be positive")
    e %= ell**d - 1
    out = []
    for _ in range(d):
        e, r = divmod(e, ell)
        out.append(r)
    return tuple(out)


def digits_to_exponent(digits, ell: int) -> int:
    return sum(int(m) * ell**i for i, m in enumerate(digits))


@dataclass(frozen=True)
class TameCharacter:
    ell: int
    level: int
    digits: tuple

    def __post_init__(self):
        digits = tuple(int(x) for x in self.digits)
        if len(digits) != self.level:
            raise SchemaError("digit vector length must equal the level")
        if any(not 0 <= x < self.ell for x in digits):
            raise SchemaError("digits must lie in [0, ell - 1]")
        if all(x == self.ell - 1 for x in digits):
            digits = (0,) * self.level
        object.__setattr__(self, "digits", digits)

    @property
    def exponent(self) -> int:
        return digits_to_exponent(self.digits, self.ell)

    @classmethod
    def from_exponent(cls, e, d, ell):
        return cls(ell, d, restrict_digits(e, d, ell))

    def value(self, x, F=None):
        """theta_d(x)^e for x in GF(ell^level)^*."""
        F = F or ext_field(self.ell, self.level)
        return F.pow(x, self.exponent)

    def to_json(self):
        return {"ell": self.ell, "level": self.level, "digits": list(self.digits)}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(int(obj["ell"]), int(obj["level"]), tuple(obj["digits"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"bad tame character: {exc}") from exc


@dataclass(frozen=True)
class TameRep:
    ell: int
    level: int
    generator_image: tuple  # square matrix over GF(ell), nested tuples

    def __post_init__(self):
        if not is_prime(self.ell):
            raise SchemaError(f"{self.ell} is not prime")
        M = np.asarray(self.generator_image, dtype=np.int64) % self.ell
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise SchemaError("generator image must be a square matrix")
        object.__setattr__(self, "generator_image", tuple(tuple(int(x) for x in r) for r in M))

    @property
    def matrix(self):
        return np.array(self.generator_image, dtype=np.int64).reshape(self.dim, self.dim)

    @property
    def dim(self):
        return len(self.generator_image)

    def to_json(self):
        return {"ell": self.ell, "level": self.level, "generator_image": [list(r) for r in self.generator_image]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(int(obj["ell"]), int(obj["level"]), tuple(tuple(r) for r in obj["generator_image"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(f"bad tame representation: {exc}") from exc


def multiplication_rep(ell: int, d: int) -> TameRep:
    """F_{ell^d}^* acting on F_{ell^d} = GF(ell)^d by multiplication, basis 1, x, ..., x^(d-1)."""
    E = ext_field(ell, d)
    g = E.generator
    cols = [E.to_coeffs(E.mul(g, ell**j)) for j in range(d)]
    return TameRep(ell, d, tuple(tuple(cols[j][i] for j in range(d)) for i in range(d)))


def minimal_polynomial(E, a):
    """Minimal polynomial over the prime field of a in E, low first, as integers."""
    conj = [a]
    x = E.frob(a)
    while x != a:
        conj.append(x)
        x = E.frob(x)
    f = [1]
    for c in conj:
        f = poly.mul(E, f, [E.neg(c), 1])
    if any(not E.in_prime_field(x) for x in f):  # pragma: no cover
        raise ArithmeticError("minimal polynomial left the prime field")
    return f


def companion(f):
    """Companion matrix of a monic polynomial (low first)."""
    n = len(f) - 1
    C = [[0] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = 1
    for i in range(n):
        C[i][n - 1] = -f[i]
    return C


def rep_from_exponents(ell: int, d: int, exponents) -> TameRep:
    """Block sum over the given exponents e of the GF(ell)-rational rep with eigenvalues g^(e ell^i)."""
    E = ext_field(ell, d)
    g = E.generator
    blocks = [companion(minimal_polynomial(E, E.pow(g, e))) for e in exponents]
    n = sum(len(b) for b in blocks)
    M = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                M[off + i][off + j] = b[i][j] % ell
        off += k
    return TameRep(ell, d, tuple(tuple(r) for r in M))


def _roots_with_multiplicity(E, f):
    out = []
    for r in poly.roots(E, f):
        g = f
        while True:
            q, rem = poly.divmod_(E, g, [E.neg(r), 1])
            if rem:
                break
            out.append(r)
            g = q
    return out


def decompose_tame(rep: TameRep):
    """Characters of the representation, one per eigenvalue, sorted by digits."""
    ell, d = rep.ell, rep.level
    M = rep.matrix
    n = rep.dim
    if not np.array_equal(matpow_mod(M, ell**d - 1, ell), eye(n)):
        raise NotSemisimpleError(f"generator image order does not divide {ell}^{d} - 1")
    E = ext_field(ell, d)
    chi = fl.char_poly(prime_field(ell), M.tolist())
    eig = _roots_with_multiplicity(E, chi)
    if len(eig) != n:  # pragma: no cover
        raise NotSemisimpleError("eigenvalues do not lie in the level field")
    chars = [TameCharacter.from_exponent(E.log(x), d, ell) for x in eig]
    return sorted(chars, key=lambda c: c.digits)


def raise_level(c: TameCharacter, D: int) -> TameCharacter:
    """The character x -> c(Nm(x)) of F_{ell^D}^*, with Nm the norm down to F_{ell^d}."""
    d = c.level
    if D < 1 or D % d:
        raise SchemaError(f"source level {d} does not divide target level {D}")
    return TameCharacter(c.ell, D, tuple(c.digits) * (D // d))


def norm(x, E_big, d):
    """Norm from GF(ell^D) to its subfield GF(ell^d), as the product of Frobenius conjugates."""
    D = E_big.degree
    out = 1
    for i in range(D // d):
        out = E_big.mul(out, E_big.pow(x, E_big.ell ** (d * i)))
    return out


def value_on_subfield(c: TameCharacter, y, E_big):
    """c evaluated at y, with y in the copy of GF(ell^level) inside E_big.

    Inside a common field the level-d fundamental character is the inclusion
    itself, so the value is simply y^e.
    """
    return E_big.pow(y, c.exponent)


def check_serre_bound(chars, e: int, i: int):
    """All digits in [0, e*i]; returns (passed, per-character verdict list)."""
    limit = e * i
    verdicts = [all(0 <= x <= limit for x in c.digits) for c in chars]
    return all(verdicts), verdicts


def rigidity_check(rep: TameRep, m: int, s, c: int) -> str:
    """Does commuting with f(H), H of index m, force commuting with f of the whole group?

    Returns "hypothesis-not-met" unless the character exponents are bounded by
    c, c*m <= ell - 1, H exists and s commutes with f(H); otherwise
    "confirmed" or "violated" according to commutation with the generator image.
    """
    ell, d = rep.ell, rep.level
    s = np.asarray(s, dtype=np.int64) % ell
    if not is_semisimple_matrix(s, ell):
        raise NotSemisimpleError("s is not semisimple")
    order = ell**d - 1
    if m < 1 or order % m:
        raise SchemaError(f"F_{ell}^{d} has no subgroup of index {m}")
    chars = decompose_tame(rep)
    if any(x > c for ch in chars for x in ch.digits):
        return "hypothesis-not-met"
    if c * m > ell - 1:
        return "hypothesis-not-met"
    G = rep.matrix
    Gm = matpow_mod(G, m, ell)
    if np.any((s @ Gm - Gm @ s) % ell):
        return "hypothesis-not-met"
    if np.any((s @ G - G @ s) % ell):
        return "violated"
    return "confirmed"
