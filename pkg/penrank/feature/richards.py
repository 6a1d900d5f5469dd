"""Richards (generalized logistic) curve.

    g(x) = l + (u - l) / (A + exp(-B (x - M_loc))) ** (1 / nu)

The exponent is clamped to [-EXP_CLAMP, EXP_CLAMP] before exponentiation so
evaluation never overflows; clamping keeps the curve monotone.
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from penrank.errors import CurveDomainError, ParameterError

EXP_CLAMP = 700.0

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class RichardsParams:
    """Parameters of the Richards curve.

    ``lower``/``upper`` are the limits l and u, ``M_loc`` is the location
    shift M (renamed so it cannot be confused with the corpus size), ``nu``
    the asymmetry exponent.
    """
    lower: float = 0.0
    upper: float = 1.0
    A: float = 1.0
    B: float = 1.0
    M_loc: float = 0.0
    nu: float = 1.0

    def __post_init__(self):
        for name in ("lower", "upper", "A", "B", "M_loc", "nu"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"Richards parameter {name} must be finite, got {getattr(self, name)}")
        if self.nu <= 0:
            raise ParameterError(f"Richards parameter nu must be > 0, got {self.nu}")


def richards(x: ArrayLike, p: RichardsParams) -> ArrayLike:
    """Evaluate the Richards curve at ``x`` (scalar or array)."""
    scalar = np.isscalar(x)
    x = np.asarray(x, dtype=np.float64)

    z = np.clip(-p.B * (x - p.M_loc), -EXP_CLAMP, EXP_CLAMP)
    base = p.A + np.exp(z)
    if np.any(base <= 0):
        raise CurveDomainError(f"A + exp(-B(x - M_loc)) must be positive; got {np.min(base)} for {p}")

    value = p.lower + (p.upper - p.lower) / np.power(base, 1.0 / p.nu)
    if not np.all(np.isfinite(value)):
        raise CurveDomainError(f"Richards curve is not finite over the requested domain for {p}")

    return float(value) if scalar else value
