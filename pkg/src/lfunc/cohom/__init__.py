"""Cohomological side: complexes with endomorphism, fibers, Euler characteristics."""

from .complexes import LinearComplex, PerfectComplexEndo, charfrac
from .fiber import (
    NORMALIZATION,
    EulerCharClass,
    FiberData,
    IntegralFiber,
    burns_value,
    calibrate_normalization,
    calibration_family,
    d_alpha,
    euler_char_class,
    fiber_complex,
    fiber_dimensions_match,
)
from .semisimple import (
    ComplexSemisimplicity,
    SemisimpleDecomposition,
    complex_semisimple_at_zero,
    semisimple_at_zero,
)
from .verify import UNIT_LEVEL_CAVEAT, Verdict, expected_orders, verify_special_value_theorem
from .zero_dim import ZeroDimWeilEtale, weil_etale_zero_dim

__all__ = [
    "LinearComplex",
    "PerfectComplexEndo",
    "charfrac",
    "NORMALIZATION",
    "EulerCharClass",
    "FiberData",
    "IntegralFiber",
    "burns_value",
    "calibrate_normalization",
    "calibration_family",
    "d_alpha",
    "euler_char_class",
    "fiber_complex",
    "fiber_dimensions_match",
    "ComplexSemisimplicity",
    "SemisimpleDecomposition",
    "complex_semisimple_at_zero",
    "semisimple_at_zero",
    "UNIT_LEVEL_CAVEAT",
    "Verdict",
    "expected_orders",
    "verify_special_value_theorem",
    "ZeroDimWeilEtale",
    "weil_etale_zero_dim",
]
