"""Richards curve, the length-similarity heuristic and its constraint verifier."""

from penrank.feature.constraints import ConstraintCheck, ConstraintReport, verify_feature_constraints
from penrank.feature.length_similarity import (
    LengthSimParams,
    length_similarity,
    length_similarity_array,
    sample_curve,
    write_curve_csv,
)
from penrank.feature.richards import RichardsParams, richards

__all__ = [
    "ConstraintCheck",
    "ConstraintReport",
    "verify_feature_constraints",
    "LengthSimParams",
    "length_similarity",
    "length_similarity_array",
    "sample_curve",
    "write_curve_csv",
    "RichardsParams",
    "richards",
]
