"""Integer weights of the split Cartan subalgebra on the ambient space."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LiftError
from ..ffcore import flinalg as fl
from .cartan import SemisimpleTypeData, identify_type
from .lie import LieSubalgebra
from .thresholds import DEFAULT, Thresholds


@dataclass
class WeightData:
    weight_matrix: list  # r x N integers
    eigenbasis_field: object
    spaces: list  # (weight tuple, basis vectors over the field)

    @property
    def n(self):
        return sum(len(v) for _, v in self.spaces)

    def to_json(self):
        return {"weight_matrix": self.weight_matrix, "field_degree": self.eigenbasis_field.degree}


def joint_decomposition(E, n, operators):
    """Split E^n into common eigenspaces.

    ``operators`` is a list of (matrix, candidates) where candidates is a list
    of (eigenvalue, label). Returns [(labels, vectors)] or raises LiftError if
    some eigenvalue is not among the candidates.
    """
    spaces = [((), fl.identity(n))]
    for M, cands in operators:
        out = []
        for labels, vecs in spaces:
            R = fl.restrict(E, M, vecs)
            k = len(vecs)
            got = 0
            for ev, lab in cands:
                ker = fl.nullspace(E, fl.mat_add_scalar(E, R, E.neg(ev)), k)
                if not ker:
                    continue
                got += len(ker)
                sub = [fl.mat_vec(E, fl.transpose(vecs), c) for c in ker]
                out.append((labels + (lab,), sub))
            if got != k:
                raise LiftError("eigenvalues fall outside the admissible lifting window")
        spaces = out
    return spaces


def columns_from_spaces(spaces, r):
    cols = []
    for labels, vecs in spaces:
        cols.extend([tuple(labels)] * len(vecs))
    cols.sort()
    return [[c[i] for c in cols] for i in range(r)]


def _weights(t: SemisimpleTypeData, n: int, bound: int):
    E = t.field
    cands = [(E.embed(a), a) for a in range(-bound, bound + 1)]
    spaces = joint_decomposition(E, n, [(C, cands) for C in t.cartan_basis])
    return WeightData(columns_from_spaces(spaces, t.rank), E, spaces)


def weights_on_ambient(
    s: LieSubalgebra,
    t: SemisimpleTypeData,
    thresholds: Thresholds = DEFAULT,
    cross_check: bool = True,
) -> WeightData:
    """Weights of the coroots on V, lifted to integers in [-B, B].

    With ``cross_check`` the computation is repeated from an independent
    Cartan draw and the two formal characters must agree.
    """
    from ..formchar import annihilator_lattice, canonical_form

    n = s.ambient_dim
    bound = thresholds.weight_bound(n)
    if 2 * bound + 1 > s.ell:
        raise LiftError(f"prime {s.ell} too small to lift weights bounded by {bound}")
    w = _weights(t, n, bound)
    if cross_check and t.rank:
        t2 = identify_type(s, t.seed + 1, thresholds, min_degree=t.splitting_degree, check_ell=False)
        w2 = _weights(t2, n, bound)
        a = canonical_form(annihilator_lattice(w.weight_matrix, n), n)
        b = canonical_form(annihilator_lattice(w2.weight_matrix, n), n)
        if a != b:
            raise LiftError("weight lift disagrees between two independent Cartan draws")
    return w
