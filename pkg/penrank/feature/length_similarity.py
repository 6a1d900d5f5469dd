"""Length-similarity heuristic h(|d|, |q|).

A piecewise pair of logistic curves with a trough of exactly 1 at x == y:

    x < y:  1 + (b1 - 1) / (1 + exp( B1 (x - c y)))
    x = y:  1
    x > y:  1 + (b2 - 1) / (1 + exp(-B2 (x - (1 + c) y)))

Used in place of BM25's length normalizer, so larger values penalize.
"""

import csv
import logging
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union

import numpy as np

from penrank.errors import ParameterError
from penrank.feature.richards import EXP_CLAMP

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class LengthSimParams:
    """Bounds b1/b2, growth rates B1/B2 and trough curvature c.

    Defaults are the tuned values reported for the penpal data.
    """
    b1: float = 2.9
    b2: float = 3.7
    B1: float = 1.0
    B2: float = 1.0
    c: float = 0.5

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ParameterError(f"length-similarity parameter {name} must be a finite number, got {value!r}")
        if self.b1 <= 1:
            raise ParameterError(f"b1 must be > 1, got {self.b1}")
        if self.b2 <= 1:
            raise ParameterError(f"b2 must be > 1, got {self.b2}")
        if self.B1 <= 0:
            raise ParameterError(f"B1 must be > 0, got {self.B1}")
        if self.B2 <= 0:
            raise ParameterError(f"B2 must be > 0, got {self.B2}")
        if not 0 < self.c < 1:
            raise ParameterError(f"c must lie in (0, 1), got {self.c}")

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def _upper_tail(z: np.ndarray) -> np.ndarray:
    """1 / (1 + exp(z)), pinned to its limits beyond the exponent clamp."""
    with np.errstate(over="ignore"):
        tail = 1.0 / (1.0 + np.exp(np.clip(z, -EXP_CLAMP, EXP_CLAMP)))
    tail = np.where(z > EXP_CLAMP, 0.0, tail)
    return np.where(z < -EXP_CLAMP, 1.0, tail)


def left_branch(x: ArrayLike, y: ArrayLike, p: LengthSimParams) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return 1.0 + (p.b1 - 1.0) * _upper_tail(p.B1 * (x - p.c * np.asarray(y, dtype=np.float64)))


def right_branch(x: ArrayLike, y: ArrayLike, p: LengthSimParams) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return 1.0 + (p.b2 - 1.0) * _upper_tail(-p.B2 * (x - (1.0 + p.c) * np.asarray(y, dtype=np.float64)))


def length_similarity_array(x: ArrayLike, y: ArrayLike, p: LengthSimParams) -> np.ndarray:
    """Vectorized h(x, y); ``x`` and ``y`` broadcast against each other."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return np.where(x < y, left_branch(x, y, p),
                    np.where(x > y, right_branch(x, y, p), 1.0))


def length_similarity(x: float, y: float, p: LengthSimParams) -> float:
    """h(x, y) for one document length ``x`` and query length ``y``."""
    for name, value in (("x", x), ("y", y)):
        if not math.isfinite(value) or value < 0:
            raise ParameterError(f"{name} must be finite and non-negative, got {value}")
    if x == y:
        return 1.0
    return float(length_similarity_array(x, y, p))


def sample_curve(p: LengthSimParams, y: float, x_min: float, x_max: float,
                 n: int) -> List[Tuple[float, float]]:
    """Sample h(x, y) at ``n`` evenly spaced x values in [x_min, x_max]."""
    if n < 2:
        raise ParameterError(f"sample count must be at least 2, got {n}")
    if not (math.isfinite(x_min) and math.isfinite(x_max)) or x_min >= x_max:
        raise ParameterError(f"degenerate sampling range [{x_min}, {x_max}]")
    if not math.isfinite(y) or y < 0:
        raise ParameterError(f"y must be finite and non-negative, got {y}")

    xs = np.linspace(x_min, x_max, n)
    hs = length_similarity_array(xs, y, p)
    return [(float(x), float(h)) for x, h in zip(xs, hs)]


def write_curve_csv(samples: List[Tuple[float, float]], path: Union[str, Path]) -> Path:
    """Write samples as a two-column ``x,h`` CSV for plotting."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["x", "h"])
        writer.writerows((repr(x), repr(h)) for x, h in samples)
    logger.info(f"Wrote {len(samples)} curve samples to {path}")
    return path
