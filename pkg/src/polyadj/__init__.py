"""Exact adjunction-theoretic invariants of lattice polytopes."""

__version__ = "0.1.0"
