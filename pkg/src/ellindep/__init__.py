"""Invariants of mod-ell matrix groups that should not depend on ell."""

__version__ = "0.1.0"
