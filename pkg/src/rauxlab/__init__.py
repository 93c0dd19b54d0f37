"""Numerical laboratory for Riemann's auxiliary function R(s).

Evaluates R(s) by residue-shifted contour quadrature, locates its zeros with
the argument principle, and decomposes the critical-line phase omega(t).
"""

from rauxlab.errors import (
    BoundaryZeroError,
    ContourError,
    DomainError,
    IncompleteStoreError,
    NearZeroOnLineError,
    PoleError,
    PrecisionError,
    StoreFormatError,
)
from rauxlab.specfun import EvalResult

__version__ = "0.1.0"

__all__ = [
    "BoundaryZeroError",
    "ContourError",
    "DomainError",
    "EvalResult",
    "IncompleteStoreError",
    "NearZeroOnLineError",
    "PoleError",
    "PrecisionError",
    "StoreFormatError",
]
