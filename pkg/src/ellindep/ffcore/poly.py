"""Dense univariate polynomials over a FieldDescriptor.

A polynomial is a list of field elements, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial. Every function takes the
field as its first argument.
"""

from __future__ import annotations

import math
import random

from .field import FieldDescriptor, prime_factors


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f) -> int:
    return len(f) - 1


def from_ints(F: FieldDescriptor, coeffs):
    """Embed an integer coefficient list (low first) into F[x]."""
    return trim(F.embed(c) for c in coeffs)


def add(F, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(F.add(a, b))
    return trim(out)


def sub(F, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(F.sub(a, b))
    return trim(out)


def mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def scalar_mul(F, c, f):
    return trim(F.mul(c, a) for a in f)


def monic(F, f):
    if not f:
        return []
    lc = F.inv(f[-1])
    return [F.mul(lc, a) for a in f]


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lc = F.inv(g[-1])
    if len(f) <= dg:
        return [], trim(f)
    q = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            c = F.mul(c, inv_lc)
            q[i - dg] = c
            for j, b in enumerate(g):
                if b:
                    f[i - dg + j] = F.sub(f[i - dg + j], F.mul(c, b))
    return trim(q), trim(f[:dg])


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def gcd(F, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def powmod(F, f, e: int, m):
    result = [1]
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return result


def deriv(F, f):
    return trim(F.scale(i, a) for i, a in enumerate(f))[1:] if len(f) > 1 else []


def evaluate(F, f, x):
    acc = 0
    for a in reversed(f):
        acc = F.add(F.mul(acc, x), a)
    return acc


def evaluate_matrix(F, f, M):
    """f(M) for a square matrix M given as lists over F (Horner)."""
    from .flinalg import mat_add_scalar, mat_mul, zeros

    n = len(M)
    acc = zeros(n, n)
    for a in reversed(f):
        acc = mat_add_scalar(F, mat_mul(F, acc, M), a)
    return acc


def _pth_root(F, f):
    """g with g^p = f, for f a polynomial in x^p."""
    p = F.ell
    e = F.order // p  # a^(q/p) is the p-th root of a
    return trim(F.pow(f[i], e) if f[i] else 0 for i in range(0, len(f), p))


def squarefree_decomposition(F, f):
    """List of (g, multiplicity) with f = lc * prod g^m and each g squarefree, monic."""
    f = monic(F, f)
    if len(f) <= 1:
        return []
    out = []
    fp = deriv(F, f)
    if not fp:
        return [(g, m * F.ell) for g, m in squarefree_decomposition(F, _pth_root(F, f))]
    c = gcd(F, f, fp)
    w = divmod_(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        z = divmod_(F, w, y)[0]
        if len(z) > 1:
            out.append((monic(F, z), i))
        i += 1
        w = y
        c = divmod_(F, c, y)[0]
    if len(c) > 1:
        out.extend((g, m * F.ell) for g, m in squarefree_decomposition(F, _pth_root(F, c)))
    return out


def radical(F, f):
    """Product of the distinct monic irreducible factors of f."""
    r = [1]
    for g, _ in squarefree_decomposition(F, f):
        r = mul(F, r, g)
    return r


def is_squarefree(F, f) -> bool:
    f = trim(f)
    if len(f) <= 1:
        return True
    return len(gcd(F, f, deriv(F, f))) == 1 and bool(deriv(F, f))


def distinct_degree(F, f):
    """Distinct-degree factorization of a squarefree monic f: list of (d, product)."""
    f = monic(F, f)
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(F, h, F.order, f)
        g = gcd(F, f, sub(F, h, x))
        if len(g) > 1:
            out.append((d, g))
            f = divmod_(F, f, g)[0]
            h = mod(F, h, f)
    if len(f) > 1:
        out.append((len(f) - 1, f))
    return out


def factor_degrees(F, f) -> list[int]:
    """Degrees of the irreducible factors of f over F, with multiplicity."""
    degs = []
    for g, m in squarefree_decomposition(F, f):
        for d, prod in distinct_degree(F, g):
            degs.extend([d] * (((len(prod) - 1) // d) * m))
    return sorted(degs)


def splitting_degree(F, f) -> int:
    """Smallest k such that f splits into linear factors over the degree-k extension of F."""
    k = 1
    for d in set(factor_degrees(F, f)):
        k = k * d // math.gcd(k, d)
    return k


def is_irreducible(F, f) -> bool:
    """Rabin's irreducibility test over F."""
    f = monic(F, trim(f))
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    q = F.order
    for r in prime_factors(n):
        h = x
        for _ in range(n // r):
            h = powmod(F, h, q, f)
        if len(gcd(F, f, sub(F, h, x))) != 1:
            return False
    h = x
    for _ in range(n):
        h = powmod(F, h, q, f)
    return not sub(F, h, x) or len(mod(F, sub(F, h, x), f)) == 0


def roots(F, f):
    """Distinct roots of f lying in F, ascending (Cantor-Zassenhaus)."""
    f = monic(F, trim(f))
    if len(f) <= 1:
        return []
    out = []
    if f[0] == 0:
        out.append(0)
        while f and f[0] == 0:
            f = f[1:]
    if len(f) <= 1:
        return sorted(out)
    x = [0, 1]
    xq = powmod(F, x, F.order, f)
    g = gcd(F, f, sub(F, xq, x))
    rng = random.Random(0x5eed)
    stack = [g]
    while stack:
        g = stack.pop()
        d = len(g) - 1
        if d <= 0:
            continue
        if d == 1:
            out.append(F.neg(F.mul(g[0], F.inv(g[1]))))
            continue
        if F.ell == 2:  # pragma: no cover - odd characteristic only in practice
            raise NotImplementedError("root splitting needs odd characteristic")
        while True:
            a = rng.randrange(F.order)
            h = powmod(F, [a, 1], (F.order - 1) // 2, g)
            s = gcd(F, g, sub(F, h, [1]))
            if 0 < len(s) - 1 < d:
                stack.append(s)
                stack.append(divmod_(F, g, s)[0])
                break
    return sorted(out)
