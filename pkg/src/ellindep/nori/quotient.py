"""Exact index of the order-p generated subgroup inside the envelope's rational points.

The rational points of the envelope are T(F_p) * G+, where T is the maximal
torus with Lie algebra the chosen Cartan subalgebra and G+ is generated by the
order-p elements, so the quotient is T(F_p) / (T(F_p) & G+).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..ffcore import flinalg as fl
from ..ffcore.linalg import eye, rref_mod
from .cartan import identify_type
from .groups import MatrixGroup, _dtype, enumerate_group, order_ell_elements
from .lie import lie_algebra_of
from .thresholds import DEFAULT, Thresholds
from .weights import weights_on_ambient


@dataclass
class QuotientReport:
    ell: int
    n: int
    torus_order: int
    plus_order: int
    intersection: int
    quotient_order: int
    abelian: bool
    bound: int

    @property
    def ok(self) -> bool:
        return self.abelian and self.quotient_order <= self.bound

    def to_json(self):
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def _generated_subgroup(G, elems, cap):
    """Elements of <elems>, adding generators only when they enlarge the group."""
    p, n = G.ell, G.n
    dt = _dtype(p)
    gens = []
    members = {eye(n).astype(dt).tobytes()}
    for u in elems:
        if u.astype(dt).tobytes() in members:
            continue
        gens.append(u)
        sub = MatrixGroup(n, p, tuple(gens))
        members = {x.astype(dt).tobytes() for x in enumerate_group(sub, cap)}
    return members


def _algebra_basis(mats, p, n):
    """F_p-basis of the associative algebra generated by I and ``mats``."""
    span = [eye(n)]
    R, piv = rref_mod(np.array([m.reshape(-1) for m in span]), p)
    queue = [m % p for m in mats]
    while queue:
        x = queue.pop()
        R2, piv2 = rref_mod(np.vstack([R, x.reshape(-1)]), p)
        if len(piv2) == len(piv):
            continue
        R, piv = R2, piv2
        span.append(x)
        queue.extend((x @ y) % p for y in list(span))
    return span


def nori_quotient(G: MatrixGroup, seed: int = 0, thresholds: Thresholds = DEFAULT) -> QuotientReport:
    from ..formchar import annihilator_lattice

    p, n = G.ell, G.n
    U = order_ell_elements(G, "exhaustive", thresholds)
    plus = _generated_subgroup(G, U.elements, thresholds.bfs_cap)
    bound = 2 ** (n - 1)
    s = lie_algebra_of(U.elements, p, n)
    if s.dim == 0:
        return QuotientReport(p, n, 1, len(plus), 1, 1, True, bound)
    t = identify_type(s, seed, thresholds)
    w = weights_on_ambient(s, t, thresholds, cross_check=False)
    E = t.field
    basis = _algebra_basis(t.cartan_subalgebra, p, n)
    for a in basis:
        for b in basis:
            if np.any((a @ b - b @ a) % p):
                return QuotientReport(p, n, 0, len(plus), 0, 0, False, bound)

    # eigenvalue of each algebra basis element on each weight column
    # weight columns are sorted by weight; follow the same order
    spaces_sorted = sorted(w.spaces, key=lambda sp: sp[0])
    cols = []
    for _, vecs in spaces_sorted:
        cols.extend([vecs[0]] * len(vecs))
    mu = []
    for a in basis:
        al = a.tolist()
        row = []
        for v in cols:
            av = fl.mat_vec(E, al, v)
            i = next(k for k, x in enumerate(v) if x)
            row.append(E.div(av[i], v[i]))
        mu.append(row)
    lattice = annihilator_lattice(w.weight_matrix, n)
    q1 = E.order - 1
    dt = _dtype(p)
    T = 0
    inter = 0
    flats = np.array([a.reshape(-1) for a in basis])
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        ev = []
        for j in range(n):
            acc = 0
            for c, m in zip(coeffs, mu):
                if c:
                    acc = E.add(acc, E.mul(c, m[j]))
            if acc == 0:
                break
            ev.append(E.log(acc))
        else:
            if all(sum(m * e for m, e in zip(vec, ev)) % q1 == 0 for vec in lattice):
                T += 1
                mat = (np.array(coeffs, dtype=np.int64) @ flats) % p
                if mat.astype(dt).tobytes() in plus:
                    inter += 1
    return QuotientReport(p, n, T, len(plus), inter, T // inter, True, bound)
