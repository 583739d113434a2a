"""Finite-field arithmetic, polynomials and matrices."""

from .field import (
    DLOG_CAP,
    FieldDescriptor,
    discrete_log,
    ext_field,
    is_prime,
    multiplicative_order_mod,
    prime_factors,
    prime_field,
)
from .matrix import MatrixFF, char_poly

__all__ = [
    "DLOG_CAP",
    "FieldDescriptor",
    "MatrixFF",
    "char_poly",
    "discrete_log",
    "ext_field",
    "is_prime",
    "multiplicative_order_mod",
    "prime_factors",
    "prime_field",
]
