"""Exact computation around conjugacy-class products in triangle groups,
free-product word machinery, and unit-residue classification."""

from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
