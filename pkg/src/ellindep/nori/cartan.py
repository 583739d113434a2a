"""Split Cartan subalgebra, root system and simple type of a semisimple matrix Lie algebra."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from dataclasses import field as dc_field

import numpy as np

from ..errors import LiftError, NotSemisimpleError, RegularElementError
from ..ffcore import ext_field, prime_field
from ..ffcore import flinalg as fl
from ..ffcore import poly
from ..ffcore.linalg import det_mod, nullspace_mod, rank_mod
from . import catalog
from .lie import LieSubalgebra, bracket
from .thresholds import DEFAULT, Thresholds


@dataclass
class SemisimpleTypeData:
    dim: int
    rank: int
    factors: list  # dicts {"type", "f", "twist"} over GF(ell), sorted
    cartan_matrix: list
    splitting_degree: int
    field: object = None
    coroots: list = dc_field(default_factory=list)  # simple coroots in Cartan coordinates over `field`
    cartan_basis: list = dc_field(default_factory=list)  # the same coroots as N x N matrices over `field`
    cartan_subalgebra: list = dc_field(default_factory=list)  # F_ell-rational basis matrices
    components: list = dc_field(default_factory=list)  # closure-level simple types, canonical order
    num_roots: int = 0
    seed: int = 0

    def summary(self):
        return {
            "dim": self.dim,
            "rank": self.rank,
            "factors": self.factors,
            "components": self.components,
            "cartan_matrix": self.cartan_matrix,
            "splitting_degree": self.splitting_degree,
            "num_roots": self.num_roots,
        }


def structure_matrices(s: LieSubalgebra):
    """ad(b_i) in the basis of s, as a (d, d, d) array mod p."""
    p, d = s.ell, s.dim
    ads = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            ads[i][:, j] = s.coords(bracket(s.basis[i], s.basis[j], p))
    return ads


def killing_form(ads, p):
    d = len(ads)
    K = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            K[i, j] = int(np.trace((ads[i] @ ads[j]) % p)) % p
    return K


def _eval_poly_np(f, M, p):
    n = M.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in reversed(f):
        acc = (acc @ M) % p
        acc[np.diag_indices(n)] = (acc[np.diag_indices(n)] + c) % p
    return acc


def is_semisimple_matrix(M, p) -> bool:
    """True iff the radical of the characteristic polynomial kills M."""
    F = prime_field(p)
    M = np.asarray(M, dtype=np.int64) % p
    chi = fl.char_poly(F, M.tolist())
    return not _eval_poly_np(poly.radical(F, chi), M, p).any()


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _symmetric(x, p):
    return x - p if x > p // 2 else x


def _lift_small(E, x, bound):
    if not E.in_prime_field(x):
        raise LiftError("coroot pairing does not lie in the prime field")
    v = _symmetric(x, E.ell)
    if abs(v) > bound:
        raise LiftError(f"coroot pairing {v} outside [-{bound}, {bound}]")
    return v


def _choose_regular(s, ads, p, rng, draws):
    F = prime_field(p)
    d = s.dim
    best = None
    for k in range(draws):
        c = np.array([rng.randrange(p) for _ in range(d)], dtype=np.int64)
        adh = np.tensordot(c, ads, axes=1) % p
        h = np.tensordot(c, s.basis, axes=1) % p
        chi = fl.char_poly(F, adh.tolist())
        if _eval_poly_np(poly.radical(F, chi), adh, p).any():
            continue
        if not is_semisimple_matrix(h, p):
            continue
        nullity = d - rank_mod(adh, p)
        if any(chi[:nullity]):
            continue
        nz = chi[nullity:]
        sqfree = poly.is_squarefree(F, nz) if len(nz) > 1 else True
        split = poly.splitting_degree(F, nz) if len(nz) > 1 else 1
        chi_v = fl.char_poly(F, h.tolist())
        split = _lcm(split, poly.splitting_degree(F, chi_v))
        key = (nullity, 0 if sqfree else 1, split, k)
        if best is None or key < best[0]:
            best = (key, c, adh, nz)
    if best is None or best[0][1]:
        raise RegularElementError(f"no regular semisimple element in {draws} draws")
    return best


def identify_type(
    s: LieSubalgebra,
    seed: int = 0,
    thresholds: Thresholds = DEFAULT,
    min_degree: int = 1,
    check_ell: bool = True,
) -> SemisimpleTypeData:
    """Cartan subalgebra, roots, Cartan matrix and Frobenius-twisted factors of s."""
    p, N, d = s.ell, s.ambient_dim, s.dim
    if check_ell and p < thresholds.ell_min(N):
        from ..errors import ThresholdError

        raise ThresholdError(f"prime {p} below ell_min({N}) = {thresholds.ell_min(N)}")
    if d == 0:
        E = ext_field(p, min_degree)
        return SemisimpleTypeData(0, 0, [], [], min_degree, E, seed=seed)
    ads = structure_matrices(s)
    if det_mod(killing_form(ads, p), p) == 0:
        raise NotSemisimpleError(f"not semisimple at this prime: Killing form degenerate at p={p}")

    rng = random.Random(seed)
    (_, _, split, _), c, adh, chi_nz = _choose_regular(s, ads, p, rng, thresholds.draws)
    K = _lcm(split, min_degree)
    E = ext_field(p, K)

    Hc = nullspace_mod(adh, p)  # rows: Cartan basis in coordinates of s
    r = len(Hc)
    H_mats = [np.tensordot(row, s.basis, axes=1) % p for row in Hc]
    adH = [(np.tensordot(row, ads, axes=1) % p).tolist() for row in Hc]
    for i in range(r):
        for j in range(r):
            if np.any((np.asarray(adH[i]) @ Hc[j]) % p):
                raise NotSemisimpleError("centralizer of the chosen element is not abelian")

    lambdas = poly.roots(E, chi_nz)
    if len(lambdas) != d - r:
        raise RegularElementError("characteristic polynomial of ad(h) does not split into distinct roots")

    adh_l = adh.tolist()
    vecs, rhos = [], []
    for lam in lambdas:
        M = fl.mat_add_scalar(E, adh_l, E.neg(lam))
        ns = fl.nullspace(E, M)
        if len(ns) != 1:
            raise RegularElementError("root space is not one-dimensional")
        v = ns[0]
        t = next(i for i, x in enumerate(v) if x)
        rho = tuple(E.div(fl.mat_vec(E, adH[k], v)[t], v[t]) for k in range(r))
        vecs.append(v)
        rhos.append(rho)
    index = {rho: i for i, rho in enumerate(rhos)}
    if len(index) != len(rhos) or any(all(x == 0 for x in rho) for rho in rhos):
        raise RegularElementError("root functionals are not distinct and nonzero")
    try:
        neg = [index[tuple(E.neg(x) for x in rho)] for rho in rhos]
    except KeyError:
        raise NotSemisimpleError("root system is not closed under negation") from None

    ads_l = [a.tolist() for a in ads]
    HcT = [[int(Hc[k][j]) for k in range(r)] for j in range(d)]

    def br(x, y):
        return fl.mat_vec(E, fl.lin_comb(E, x, ads_l), y)

    coroots = []
    for i, v in enumerate(vecs):
        T = br(v, vecs[neg[i]])
        x = fl.solve(E, HcT, T)
        if x is None:
            raise NotSemisimpleError("[e_a, e_-a] is not in the Cartan subalgebra")
        aT = 0
        for xk, rk in zip(x, rhos[i]):
            aT = E.add(aT, E.mul(xk, rk))
        if aT == 0:
            raise NotSemisimpleError("degenerate root pairing")
        scale = E.div(2, aT)
        coroots.append([E.mul(scale, xk) for xk in x])

    nroots = len(rhos)

    def pair_raw(b, a):
        acc = 0
        for ck, rk in zip(coroots[a], rhos[b]):
            acc = E.add(acc, E.mul(ck, rk))
        return acc

    pairing = [[_lift_small(E, pair_raw(b, a), 3) for a in range(nroots)] for b in range(nroots)]

    chosen = []
    for a in range(nroots):
        if fl.rank(E, [coroots[c] for c in chosen + [a]]) > len(chosen):
            chosen.append(a)
        if len(chosen) == r:
            break
    if len(chosen) != r:
        raise NotSemisimpleError("coroots do not span the Cartan subalgebra")
    ivec = [tuple(pairing[b][a] for a in chosen) for b in range(nroots)]
    by_vec = {v: b for b, v in enumerate(ivec)}

    def positive(v):
        for x in v:
            if x:
                return x > 0
        return False

    pos = [b for b in range(nroots) if positive(ivec[b])]
    pos_set = {ivec[b] for b in pos}
    sums = set()
    for a in pos:
        for b in pos:
            sums.add(tuple(x + y for x, y in zip(ivec[a], ivec[b])))
    simple = sorted((b for b in pos if ivec[b] not in sums), key=lambda b: ivec[b], reverse=True)
    if len(simple) != r or len(pos_set) * 2 != nroots:
        raise NotSemisimpleError("could not extract a base of the root system")

    A = [[pairing[simple[j]][simple[i]] for j in range(r)] for i in range(r)]

    # connected components of the Dynkin diagram
    comp_of = [-1] * r
    comps = []
    for i in range(r):
        if comp_of[i] >= 0:
            continue
        stack, members = [i], []
        comp_of[i] = len(comps)
        while stack:
            a = stack.pop()
            members.append(a)
            for b in range(r):
                if comp_of[b] < 0 and A[a][b]:
                    comp_of[b] = len(comps)
                    stack.append(b)
        comps.append(sorted(members))
    matched = []
    for members in comps:
        kind, rank, order = catalog.match_component(A, members)
        matched.append((kind, rank, order))

    # Frobenius on roots and on components
    frob = [index[tuple(E.frob(x) for x in rho)] for rho in rhos]
    simple_pos = {b: i for i, b in enumerate(simple)}

    def comp_of_root(b):
        for i, a in enumerate(simple):
            if pairing[b][a]:
                return comp_of[i]
        raise NotSemisimpleError("root orthogonal to every simple root")

    def reflect(g, b):
        k = pairing[g][b]
        target = tuple(x - k * y for x, y in zip(ivec[g], ivec[b]))
        return by_vec[target]

    comp_next = [comp_of_root(frob[simple[m[2][0]]]) for m in matched]
    seen = set()
    factors = []
    for ci in range(len(matched)):
        if ci in seen:
            continue
        orbit = [ci]
        nxt = comp_next[ci]
        while nxt != ci:
            orbit.append(nxt)
            nxt = comp_next[nxt]
        seen.update(orbit)
        f = len(orbit)
        kind, rank, order = matched[ci]
        base = [simple[i] for i in order]
        images = []
        for b in base:
            x = b
            for _ in range(f):
                x = frob[x]
            images.append(x)
        for _ in range(10 * nroots * nroots + 10):
            bad = next((x for x in images if not positive(ivec[x])), None)
            if bad is None:
                break
            images = [reflect(x, bad) for x in images]
        else:  # pragma: no cover
            raise NotSemisimpleError("Weyl normalization did not terminate")
        where = {b: i for i, b in enumerate(base)}
        if any(x not in where for x in images):
            raise NotSemisimpleError("Frobenius does not preserve the simple system")
        sigma = [where[x] for x in images]
        twist, cur = 1, sigma[:]
        while cur != list(range(len(sigma))):
            cur = [sigma[c] for c in cur]
            twist += 1
        factors.append({"type": catalog.type_name(kind, rank), "f": f, "twist": twist})

    del simple_pos
    order_key = sorted(range(len(matched)), key=lambda i: (catalog.TYPE_ORDER.index(matched[i][0]), matched[i][1], i))
    canon_simple = []
    components = []
    for i in order_key:
        kind, rank, order = matched[i]
        components.append(catalog.type_name(kind, rank))
        canon_simple.extend(simple[j] for j in order)
    cartan = [[pairing[b][a] for b in canon_simple] for a in canon_simple]
    factors.sort(key=lambda fd: (catalog.type_sort_key(fd["type"]), fd["f"], fd["twist"]))

    canon_coroots = [coroots[a] for a in canon_simple]
    H_lists = [Hm.tolist() for Hm in H_mats]
    cartan_basis = [fl.lin_comb(E, cr, H_lists) for cr in canon_coroots]
    return SemisimpleTypeData(
        dim=d,
        rank=r,
        factors=factors,
        cartan_matrix=cartan,
        splitting_degree=K,
        field=E,
        coroots=canon_coroots,
        cartan_basis=cartan_basis,
        cartan_subalgebra=H_mats,
        components=components,
        num_roots=nroots,
        seed=seed,
    )
