"""Prime and extension finite fields with integer-encoded elements.

An element of GF(ell^k) is the integer ``c_0 + c_1*ell + ... + c_{k-1}*ell^(k-1)``
where ``c_0 + c_1 x + ...`` is its residue modulo the defining polynomial.
Prime-field elements are therefore their own canonical representatives, and
GF(ell) sits inside every GF(ell^k) as the integers ``0 .. ell-1``.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

from ..errors import FieldError

# Fields up to this order get exp/log tables; larger ones use polynomial arithmetic.
TABLE_CAP = 1 << 18
DLOG_CAP = 1 << 31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n > 0, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order_mod(a: int, n: int) -> int:
    """Order of a in (Z/n)^*; n=1 gives 1."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    phi = n
    for p in prime_factors(n):
        phi = phi // p * (p - 1)
    order = phi
    for p in prime_factors(phi):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def _poly_mulmod(a, b, modulus, p):
    """Product of coefficient lists a, b (low first) reduced mod a monic modulus."""
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d] % p
        if c:
            for j in range(k):
                prod[d - k + j] -= c * modulus[j]
        prod[d] = 0
    return [x % p for x in prod[:k]]


@dataclass(frozen=True)
class FieldDescriptor:
    """GF(ell^degree) = GF(ell)[x] / (modulus).

    ``modulus`` is stored low-to-high and is monic; for degree one it is the
    polynomial ``x`` so that the residue of an integer is the integer itself.
    """

    ell: int
    degree: int
    modulus: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def order(self) -> int:
        return self.ell ** self.degree

    # -- encoding ---------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.ell)
            out.append(r)
        return out

    def from_coeffs(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)[: self.degree]):
            v = v * self.ell + (c % self.ell)
        return v

    def to_json(self, a: int):
        return a if self.degree == 1 else self.to_coeffs(a)

    def from_json(self, obj) -> int:
        if isinstance(obj, list):
            return self.from_coeffs(obj)
        return int(obj) % self.ell

    def embed(self, x: int) -> int:
        """Image of the integer x under Z -> GF(ell) -> this field."""
        return x % self.ell

    def in_prime_field(self, a: int) -> bool:
        return a < self.ell

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.ell
        if self.degree == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.ell
        if self.degree == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a - b) % self.ell
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Product of a prime-field scalar c with a."""
        p = self.ell
        c %= p
        if self.degree == 1:
            return (c * a) % p
        out, s = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((c * x) % p) * s
            s *= p
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        return self.from_coeffs(
            _poly_mulmod(self.to_coeffs(a), self.to_coeffs(b), self.modulus, self.ell)
        )

    def _tables(self):
        t = self._cache.get("tables")
        if t is None:
            q, p = self.order, self.ell
            g = self.generator
            step = (lambda x: x * g % p) if self.degree == 1 else (lambda x: self._mul_slow(x, g))
            exp = [1] * (q - 1)
            log = [0] * q
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x = step(x)
            t = (exp, log)
            self._cache["tables"] = t
        return t

    def _use_tables(self) -> bool:
        return self.degree > 1 and self.order <= TABLE_CAP

    def mul(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a * b) % self.ell
        if a == 0 or b == 0:
            return 0
        if self._use_tables():
            exp, log = self._tables()
            return exp[(log[a] + log[b]) % (self.order - 1)]
        return self._mul_slow(a, b)

    def pow(self, a: int, e: int) -> int:
        if self.degree == 1:
            if e < 0:
                a, e = self.inv(a), -e
            return pow(a, e, self.ell)
        if a == 0:
            if e <= 0:
                raise FieldError("zero has no inverse")
            return 0
        if self._use_tables():
            exp, log = self._tables()
            return exp[(log[a] * e) % (self.order - 1)]
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no inverse")
        if self.degree == 1:
            return pow(a, -1, self.ell)
        if self._use_tables():
            exp, log = self._tables()
            return exp[(-log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.ell ** times) if a else 0

    def log(self, a: int) -> int:
        """Discrete log base ``self.generator`` (table lookup, else BSGS)."""
        if a == 0:
            raise FieldError("log of zero")
        if self.order <= TABLE_CAP:
            return self._tables()[1][a]
        return discrete_log(a, self.generator, self)

    def exp(self, n: int) -> int:
        return self.pow(self.generator, n)

    @property
    def generator(self) -> int:
        """Least primitive element under the integer encoding."""
        g = self._cache.get("generator")
        if g is None:
            g = _least_primitive(self)
            self._cache["generator"] = g
        return g

    def is_primitive(self, g: int) -> bool:
        if g == 0:
            return False
        q1 = self.order - 1
        if self.degree == 1:
            return all(pow(g, q1 // r, self.ell) != 1 for r in prime_factors(q1))
        return all(self._pow_slow(g, q1 // r) != 1 for r in prime_factors(q1))

    def _pow_slow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        q1 = self.order - 1
        order = q1
        for r in prime_factors(q1):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def root_of_unity(self, n: int) -> int:
        """The primitive n-th root of unity generator**((q-1)/n)."""
        q1 = self.order - 1
        if q1 % n:
            raise FieldError(f"GF({self.ell}^{self.degree}) has no primitive {n}-th root of unity")
        return self.pow(self.generator, q1 // n)

    def elements(self):
        return range(self.order)

    def __str__(self):
        return f"GF({self.ell})" if self.degree == 1 else f"GF({self.ell}^{self.degree})"


def _least_primitive(F: FieldDescriptor) -> int:
    if F.order == 2:
        return 1
    for g in range(2 if F.degree == 1 else F.ell, F.order):
        if F.is_primitive(g):
            return g
    raise FieldError(f"no primitive element found in {F}")  # pragma: no cover


def _is_irreducible(coeffs_low: list[int], p: int) -> bool:
    from .poly import is_irreducible

    return is_irreducible(prime_field(p), coeffs_low)


@functools.lru_cache(maxsize=None)
def prime_field(ell: int) -> FieldDescriptor:
    if not is_prime(ell):
        raise FieldError(f"characteristic {ell} is not prime")
    return FieldDescriptor(ell, 1, (0, 1))


@functools.lru_cache(maxsize=None)
def ext_field(ell: int, k: int = 1) -> FieldDescriptor:
    """GF(ell^k) with the lexicographically least monic irreducible modulus.

    Candidates ``x^k + c_{k-1} x^{k-1} + ... + c_0`` are ordered
    lexicographically on ``(c_{k-1}, ..., c_0)``. Degree one uses the modulus
    ``x`` so prime-field residues are plain integers.
    """
    if not isinstance(ell, int) or not is_prime(ell):
        raise FieldError(f"characteristic {ell!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise FieldError(f"extension degree must be a positive integer, got {k!r}")
    if k == 1:
        return prime_field(ell)
    for high in itertools.product(range(ell), repeat=k):
        coeffs = list(reversed(high)) + [1]
        if coeffs[0] == 0:
            continue
        if _is_irreducible(coeffs, ell):
            return FieldDescriptor(ell, k, tuple(coeffs))
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({ell})")  # pragma: no cover


def discrete_log(a: int, g: int, F: FieldDescriptor, cap: int = DLOG_CAP) -> int:
    """Return n in [0, q-2] with g**n == a, by baby-step giant-step."""
    q = F.order
    if q > cap:
        raise FieldError(f"field of order {q} exceeds discrete-log cap {cap}")
    if a == 0:
        raise FieldError("discrete log of zero is undefined")
    if not F.is_primitive(g):
        raise FieldError(f"{g} does not generate the multiplicative group of {F}")
    n = q - 1
    m = math.isqrt(n - 1) + 1 if n > 1 else 1
    baby = {}
    x = 1
    for j in range(m):
        baby.setdefault(x, j)
        x = F.mul(x, g)
    giant = F.inv(F.pow(g, m))
    y = a
    for i in range(m + 1):
        j = baby.get(y)
        if j is not None:
            return (i * m + j) % n
        y = F.mul(y, giant)
    raise FieldError("discrete log not found")  # pragma: no cover
