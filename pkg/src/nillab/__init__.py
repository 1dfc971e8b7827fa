"""Exact-arithmetic laboratory for nilpotent matrix Lie algebras."""

from nillab.kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
