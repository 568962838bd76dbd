"""Exact Lie-theoretic computations for adjoint varieties."""
__version__ = "0.1.0"
