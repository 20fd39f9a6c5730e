"""Exact symbolic verification of orbit computations for G2 acting on SO4-symmetric spaces."""

__version__ = "0.1.0"
