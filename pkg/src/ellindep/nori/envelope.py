"""Combine the semisimple envelope with central semisimple elements."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import CommutationError, LiftError, NotSemisimpleError
from ..ffcore import ext_field, multiplicative_order_mod, prime_factors
from ..ffcore.linalg import eye, matpow_mod
from .cartan import SemisimpleTypeData, identify_type, is_semisimple_matrix
from .lie import LieSubalgebra
from .thresholds import DEFAULT, Thresholds
from .weights import WeightData, columns_from_spaces, joint_decomposition


@dataclass
class Envelope:
    n: int
    ell: int
    weight_matrix: list
    central_orders: list
    field_degree: int
    formal_character: object

    def to_json(self):
        return {
            "n": self.n,
            "ell": self.ell,
            "weight_matrix": self.weight_matrix,
            "central_orders": self.central_orders,
            "field_degree": self.field_degree,
            "formal_character": self.formal_character.to_json(),
        }


def matrix_order(z, p) -> int:
    """Multiplicative order of an invertible semisimple matrix over GF(p)."""
    n = z.shape[0]
    M = 1
    for k in range(1, n + 1):
        M = M * (p**k - 1) // math.gcd(M, p**k - 1)
    if not np.array_equal(matpow_mod(z, M, p), eye(n)):
        raise NotSemisimpleError("element order is divisible by p")
    order = M
    for q in prime_factors(M):
        while order % q == 0 and np.array_equal(matpow_mod(z, order // q, p), eye(n)):
            order //= q
    return order


def _sym(a, n):
    a %= n
    return a - n if a > n // 2 else a


def assemble_envelope(
    s: LieSubalgebra,
    t: SemisimpleTypeData,
    w: WeightData,
    central=(),
    thresholds: Thresholds = DEFAULT,
) -> Envelope:
    """Weight matrix of (torus of s) x (torus generated by ``central``) and its formal character."""
    from ..formchar import annihilator_lattice, canonical_form

    p, n = s.ell, s.ambient_dim
    bound = thresholds.weight_bound(n)
    zs = []
    for z in central:
        z = np.asarray(z, dtype=np.int64) % p
        for b in s.basis:
            if np.any((z @ b - b @ z) % p):
                raise CommutationError("central element does not commute with the Lie algebra")
        if not is_semisimple_matrix(z, p):
            raise NotSemisimpleError("central element is not semisimple")
        order = matrix_order(z, p)
        if order < 2 * bound + 1:
            raise LiftError(f"central element of order {order} is too small to lift (need >= {2 * bound + 1})")
        zs.append((z, order))
    if not zs:
        fc = canonical_form(annihilator_lattice(w.weight_matrix, n), n)
        return Envelope(n, p, w.weight_matrix, [], t.splitting_degree, fc)

    K = t.splitting_degree
    for _, order in zs:
        k = multiplicative_order_mod(p, order)
        K = K * k // math.gcd(K, k)
    t2 = t if K == t.splitting_degree else identify_type(s, t.seed, thresholds, min_degree=K, check_ell=False)
    E = ext_field(p, K)
    ops = []
    cands = [(E.embed(a), a) for a in range(-bound, bound + 1)]
    for C in t2.cartan_basis:
        ops.append((C, cands))
    for z, order in zs:
        zeta = E.root_of_unity(order)
        zc = [(E.pow(zeta, a), _sym(a, order)) for a in range(order)]
        ops.append((z.tolist(), zc))
    spaces = joint_decomposition(E, n, ops)
    W = columns_from_spaces(spaces, len(ops))
    fc = canonical_form(annihilator_lattice(W, n), n)
    return Envelope(n, p, W, [o for _, o in zs], K, fc)
