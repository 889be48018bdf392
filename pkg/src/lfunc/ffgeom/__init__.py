"""Finite fields, varieties over them, point counts and closed points."""

from .cache import PointCountCache
from .field import FiniteField, embedding, frobenius, get_field, smallest_irreducible
from .variety import (
    ClosedPoint,
    Variety,
    affine_space,
    closed_point_counts,
    closed_points_up_to,
    count_points,
    parse_polynomial,
    projective_space,
    rational_points,
    spec_extension,
)
