"""Exact computation of half-integral-weight theta lifts of eigenforms,
their coefficient/L-value identities, and p-adic interpolation at finite
precision."""

__version__ = "0.1.0"
