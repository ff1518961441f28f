"""Exact numerical range of 2x2 complex matrices."""

from ._core import (
    CanonicalForm,
    InputError,
    RangeKind,
    RangeShape,
    SampleReport,
    canonicalize,
    convex_hull,
    eigenvalues,
    factor_decomposition,
    hopf_map,
    numerical_range,
    rayleigh,
    sample_range,
    semi_axes,
    support_value,
    verify_inclusion,
)

__all__ = [
    "CanonicalForm",
    "InputError",
    "RangeKind",
    "RangeShape",
    "SampleReport",
    "canonicalize",
    "convex_hull",
    "eigenvalues",
    "factor_decomposition",
    "hopf_map",
    "numerical_range",
    "rayleigh",
    "sample_range",
    "semi_axes",
    "support_value",
    "verify_inclusion",
]
