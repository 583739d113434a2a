"""Prime-indexed families of matrix groups and the cross-prime checks."""

from .analysis import analyze_group, analyze_prime, check_independence, dumps
from .bundle import SystemBundle, apply_iota, char_map, int_char_poly, reduce_integral_group, verify_compatibility
from .fixtures import FIXTURES, gen_fixture

__all__ = [
    "FIXTURES",
    "SystemBundle",
    "analyze_group",
    "analyze_prime",
    "apply_iota",
    "char_map",
    "check_independence",
    "dumps",
    "gen_fixture",
    "int_char_poly",
    "reduce_integral_group",
    "verify_compatibility",
]
