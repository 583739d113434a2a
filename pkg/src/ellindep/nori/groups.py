"""Finite matrix groups over GF(p): enumeration and order-p elements."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from ..errors import EnumerationOverflow, FieldError, SchemaError
from ..ffcore import is_prime
from ..ffcore.linalg import det_mod, eye, inv_mod, matpow_mod
from .thresholds import DEFAULT, Thresholds


@dataclass(frozen=True)
class MatrixGroup:
    n: int
    ell: int
    generators: tuple  # tuple of n x n int64 arrays, entries in [0, ell)
    label: str = ""

    def __post_init__(self):
        if not is_prime(self.ell):
            raise FieldError(f"characteristic {self.ell} is not prime")
        gens = []
        for g in self.generators:
            a = np.asarray(g, dtype=np.int64) % self.ell
            if a.shape != (self.n, self.n):
                raise SchemaError(f"generator of shape {a.shape}, expected {(self.n, self.n)}")
            if det_mod(a, self.ell) == 0:
                raise FieldError(f"generator is singular modulo {self.ell}")
            a.setflags(write=False)
            gens.append(a)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_json(cls, obj) -> "MatrixGroup":
        try:
            return cls(int(obj["n"]), int(obj["ell"]), tuple(obj["generators"]), str(obj.get("label", "")))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, FieldError):
                raise
            raise SchemaError(f"bad group description: {exc}") from exc

    def to_json(self):
        return {
            "n": self.n,
            "ell": self.ell,
            "generators": [g.tolist() for g in self.generators],
            "label": self.label,
        }


@dataclass
class UnipotentSet:
    elements: list = field(default_factory=list)
    complete: bool = False


def _dtype(p):
    return np.uint8 if p < 256 else np.uint16 if p < 65536 else np.uint32


def _key(a, dt):
    return a.astype(dt).tobytes()


def enumerate_group(G: MatrixGroup, cap: int = DEFAULT.bfs_cap, start=None):
    """All elements of <generators> as an (m, n, n) array; BFS from ``start`` (default I)."""
    p, n = G.ell, G.n
    dt = _dtype(p)
    seeds = [eye(n)] if start is None else list(start)
    seen = set()
    frontier = []
    for s in seeds:
        k = _key(s, dt)
        if k not in seen:
            seen.add(k)
            frontier.append(s)
    found = list(frontier)
    frontier = np.array(frontier, dtype=np.int64).reshape(-1, n, n)
    gens = [g for g in G.generators]
    while len(frontier):
        nxt = []
        for g in gens:
            prods = (frontier @ g) % p
            flat = prods.astype(dt).reshape(len(prods), -1)
            for i in range(len(flat)):
                k = flat[i].tobytes()
                if k not in seen:
                    seen.add(k)
                    nxt.append(prods[i])
                    if len(seen) > cap:
                        raise EnumerationOverflow(cap)
        found.extend(nxt)
        frontier = np.array(nxt, dtype=np.int64).reshape(-1, n, n)
    return np.array(found, dtype=np.int64).reshape(-1, n, n)


def group_order(G: MatrixGroup, cap: int = DEFAULT.bfs_cap) -> int:
    return len(enumerate_group(G, cap))


def _batch_pow(X, e, p):
    n = X.shape[1]
    result = np.broadcast_to(eye(n), X.shape).copy()
    base = X % p
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def is_unipotent(x, p) -> bool:
    n = x.shape[0]
    return not matpow_mod((x - eye(n)) % p, n, p).any()


def _order_ell_exhaustive(G, cap):
    elems = enumerate_group(G, cap)
    n, p = G.n, G.ell
    powered = _batch_pow(elems, p, p)
    ident = eye(n)
    is_one = np.all(powered == ident, axis=(1, 2))
    not_id = ~np.all(elems == ident, axis=(1, 2))
    return [elems[i] for i in np.nonzero(is_one & not_id)[0]]


def _prime_to_ell_exponent(n, p):
    e = 1
    for i in range(1, n + 1):
        e *= p**i - 1
    return e


class _Scanner:
    """Collects order-p elements without enumerating the group."""

    def __init__(self, G: MatrixGroup, seed: int):
        self.G = G
        self.rng = random.Random(seed)
        self.found = {}
        self.dt = _dtype(G.ell)
        self.e = _prime_to_ell_exponent(G.n, G.ell)

    def offer(self, x):
        p, n = self.G.ell, self.G.n
        y = matpow_mod(x, self.e, p)
        if np.array_equal(y, eye(n)):
            return
        # y has p-power order; step down to an element of order exactly p
        z = matpow_mod(y, p, p)
        while not np.array_equal(z, eye(n)):
            y, z = z, matpow_mod(z, p, p)
        k = _key(y, self.dt)
        if k not in self.found:
            self.found[k] = y

    def random_word(self, length):
        p = self.G.ell
        gens = self.G.generators
        x = eye(self.G.n)
        for _ in range(length):
            x = (x @ gens[self.rng.randrange(len(gens))]) % p
        return x


def _scan(G: MatrixGroup, seed: int, max_rounds: int = 60, patience: int = 4):
    from .lie import lie_closure_dim_tracker

    sc = _Scanner(G, seed)
    p, n = G.ell, G.n
    gens = list(G.generators)
    if not gens:
        return []
    for g in gens:
        sc.offer(g)
    for a in gens:
        for b in gens:
            sc.offer((a @ b) % p)
            for c in gens:
                sc.offer((a @ b @ c) % p)
    tracker = lie_closure_dim_tracker(n, p)
    tracker.add([u for u in sc.found.values()])
    stable = 0
    for _ in range(max_rounds):
        before = tracker.dim
        for _ in range(8):
            sc.offer(sc.random_word(sc.rng.randrange(4, 24)))
        known = list(sc.found.values())
        if known:
            for _ in range(8):
                w = sc.random_word(sc.rng.randrange(1, 12))
                u = known[sc.rng.randrange(len(known))]
                sc.offer((w @ u @ inv_mod(w, p)) % p)
        tracker.add(list(sc.found.values()))
        stable = stable + 1 if tracker.dim == before else 0
        if stable >= patience:
            break
    keys = sorted(sc.found)
    return [sc.found[k] for k in keys]


def order_ell_elements(G: MatrixGroup, mode: str = "auto", thresholds: Thresholds = DEFAULT, seed: int = 0):
    """Order-p elements of G.

    ``exhaustive`` enumerates the group (overflow raises), ``scan`` samples
    words and conjugates, ``auto`` tries enumeration up to ``auto_cap`` and
    falls back to scanning.
    """
    if mode in ("exhaustive", "exact"):
        return UnipotentSet(_order_ell_exhaustive(G, thresholds.bfs_cap), True)
    if mode in ("scan", "generator-scan"):
        return UnipotentSet(_scan(G, seed), False)
    if mode == "auto":
        try:
            return UnipotentSet(_order_ell_exhaustive(G, min(thresholds.auto_cap, thresholds.bfs_cap)), True)
        except EnumerationOverflow:
            return UnipotentSet(_scan(G, seed), False)
    raise SchemaError(f"unknown enumeration mode {mode!r}")


def reduce_words(G: MatrixGroup, words):
    """Images of generator-index words as matrices."""
    p, n = G.ell, G.n
    out = []
    for w in words:
        x = eye(n)
        for i in w:
            if not isinstance(i, int) or not 0 <= i < len(G.generators):
                raise SchemaError(f"word {w} references unknown generator {i}")
            x = (x @ G.generators[i]) % p
        out.append(x)
    return out
