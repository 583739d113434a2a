"""Shipped bundle catalog."""

from __future__ import annotations

from ..errors import SchemaError
from ..ffcore import is_prime, prime_field
from .bundle import SystemBundle, int_char_poly, int_matmul

SL2_GENS = ([[1, 1], [0, 1]], [[1, 0], [1, 1]])

FIXTURES = ("sl2-std", "sym2", "sym3", "sl2xsl2", "weil-res-sl2", "torus-adversarial")
ALIASES = {"sl2×sl2": "sl2xsl2", "sl2-x-sl2": "sl2xsl2", "weil-res": "weil-res-sl2", "adversarial": "torus-adversarial"}

DEFAULT_PRIMES = {
    "sl2-std": [7, 11, 13, 17, 19, 23, 29, 31],
    "sym2": [7, 11, 13, 17, 19, 23, 29, 31],
    "sym3": [11, 13, 17, 19, 23, 29, 31],
    "sl2xsl2": [11, 13, 17, 19, 23, 29, 31],
    "weil-res-sl2": [11, 13, 17, 19, 23, 29, 31],
    "torus-adversarial": [7, 11, 13, 17],
}


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _ppow(a, k):
    out = [1]
    for _ in range(k):
        out = _pmul(out, a)
    return out


def sym_power(g, k):
    """Integral matrix of g on homogeneous degree-k polynomials, basis x^(k-i) y^i."""
    (a, b), (c, d) = g
    cols = []
    for j in range(k + 1):
        # image of x^(k-j) y^j, with x -> a x + c y and y -> b x + d y; coefficient list indexed by power of y
        cols.append(_pmul(_ppow([a, c], k - j), _ppow([b, d], j)))
    return [[cols[j][i] for j in range(k + 1)] for i in range(k + 1)]


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    M = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                M[off + i][off + j] = x
        off += len(b)
    return M


def _word_product(gens, word):
    n = len(gens[0])
    x = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in word:
        x = int_matmul(x, gens[i])
    return x


def _words_for(gens, words):
    return [{"word": list(w), "poly": int_char_poly(_word_product(gens, w))} for w in words]


def least_nonresidue(p):
    F = prime_field(p)
    return next(a for a in range(2, p) if F.pow(a, (p - 1) // 2) == p - 1)


def weil_res_generators(p):
    """SL_2(F_{p^2}) on F_{p^2}^2 = F_p^4, with F_{p^2} = F_p(sqrt D) acting by a + b sqrt D -> [[a, D b], [b, a]]."""
    D = least_nonresidue(p)
    one = [[1, 0], [0, 1]]
    zero = [[0, 0], [0, 0]]
    root = [[0, D % p], [1, 0]]

    def upper(t):
        return [r1 + r2 for r1, r2 in zip(one, t)] + [r1 + r2 for r1, r2 in zip(zero, one)]

    def lower(t):
        return [r1 + r2 for r1, r2 in zip(one, zero)] + [r1 + r2 for r1, r2 in zip(t, one)]

    return [upper(one), upper(root), lower(one), lower(root)]


def _check_primes(primes):
    primes = sorted(set(int(p) for p in primes))
    for p in primes:
        if not is_prime(p):
            raise SchemaError(f"{p} is not prime")
    return primes


def gen_fixture(name: str, primes=None) -> SystemBundle:
    """Build a catalog bundle over the given primes (catalog default when omitted)."""
    name = ALIASES.get(name, name)
    if name not in FIXTURES:
        raise SchemaError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    primes = _check_primes(primes if primes is not None else DEFAULT_PRIMES[name])
    sl2_words = [[0], [1], [0, 1], [0, 0, 1], [0, 1, 1, 1]]

    if name in ("sl2-std", "sym2", "sym3"):
        k = {"sl2-std": 1, "sym2": 2, "sym3": 3}[name]
        gens = [sym_power(g, k) for g in SL2_GENS]
        return SystemBundle(k + 1, primes, gens, frobenius_words=_words_for(gens, sl2_words), label=name)

    if name == "sl2xsl2":
        I2 = [[1, 0], [0, 1]]
        gens = [block_diag(g, I2) for g in SL2_GENS] + [block_diag(I2, g) for g in SL2_GENS]
        words = [[0], [2], [0, 2], [0, 1, 3], [1, 2, 3, 3]]
        return SystemBundle(4, primes, gens, frobenius_words=_words_for(gens, words), label=name)

    if name == "weil-res-sl2":
        per = {p: weil_res_generators(p) for p in primes}
        # words in E(1) and F(1) only: their images come from SL_2(Z) acting diagonally on two copies
        words = []
        for w in ([0], [2], [0, 2], [0, 0, 2], [0, 2, 2, 2]):
            small = [SL2_GENS[0] if i == 0 else SL2_GENS[1] for i in w]
            P = int_char_poly(_word_product(small, range(len(small))) if small else [[1, 0], [0, 1]])
            words.append({"word": list(w), "poly": _pmul(P, P)})
        return SystemBundle(4, primes, per_prime_groups=per, frobenius_words=words, label=name)

    # torus-adversarial: SL_2 everywhere except the largest prime, which gets a split torus
    per = {}
    for p in primes[:-1]:
        per[p] = [[list(r) for r in g] for g in SL2_GENS]
    if primes:
        p = primes[-1]
        F = prime_field(p)
        g = F.generator
        per[p] = [[[g, 0], [0, F.inv(g)]]]
    return SystemBundle(2, primes, per_prime_groups=per, label=name)
