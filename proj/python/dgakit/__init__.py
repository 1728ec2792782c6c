"""Exact computations with free graded-commutative DGAs, homotopies and cochains."""

from ._dgakit import (
    Algebra,
    DomainError,
    canned_model_names,
    distortion_exponent,
    duality,
    iso_constant,
    periods,
    recurrence,
    run,
)

__all__ = [
    "Algebra",
    "DomainError",
    "canned_model_names",
    "distortion_exponent",
    "duality",
    "iso_constant",
    "periods",
    "recurrence",
    "run",
]
