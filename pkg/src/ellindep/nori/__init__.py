"""Semisimple envelopes of finite matrix groups, realized through Lie algebras."""

from .cartan import SemisimpleTypeData, identify_type, killing_form, structure_matrices
from .envelope import Envelope, assemble_envelope
from .explog import trunc_exp, trunc_log
from .groups import MatrixGroup, UnipotentSet, enumerate_group, group_order, order_ell_elements
from .invariants import InvariantSpace, invariant_subspace, t_map
from .lie import LieSubalgebra, lie_algebra_of, lie_closure
from .quotient import QuotientReport, nori_quotient
from .thresholds import DEFAULT, Thresholds
from .weights import WeightData, weights_on_ambient

__all__ = [
    "DEFAULT",
    "Envelope",
    "InvariantSpace",
    "LieSubalgebra",
    "MatrixGroup",
    "QuotientReport",
    "SemisimpleTypeData",
    "Thresholds",
    "UnipotentSet",
    "WeightData",
    "assemble_envelope",
    "enumerate_group",
    "group_order",
    "identify_type",
    "invariant_subspace",
    "killing_form",
    "lie_algebra_of",
    "lie_closure",
    "nori_quotient",
    "order_ell_elements",
    "structure_matrices",
    "t_map",
    "trunc_exp",
    "trunc_log",
    "weights_on_ambient",
]
