"""Exact arithmetic: polynomials, number fields, matrices, Smith form, series, Pade."""

from .matrix import charpoly, det, det_one_minus, inverse, kernel, rank, rref, solve
from .numberfield import (
    QQ,
    NFElement,
    NumberField,
    cyclotomic_field,
    cyclotomic_polynomial,
    is_algebraic_integer,
    root_of_unity,
)
from .pade import RationalFunction, pade_reconstruct
from .series import TruncatedSeries, series_inverse
from .smith import elementary_divisors, hermite_normal_form, integer_kernel, smith_normal_form
