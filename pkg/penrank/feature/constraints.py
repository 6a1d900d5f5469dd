"""Numeric verification of the six shape constraints on h(x, y).

1. flat trough: both branches have zero slope at x = y
2. h decreases on (0, y)
3. h increases on (y, 10 y)
4. h(0, y) equals the left bound b1
5. h(x, y) tends to the right bound b2 for large x
6. h(y, y) is exactly 1

Slopes are central finite differences; each check records what it measured
so a failing report says by how much.
"""

import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from penrank.errors import ParameterError
from penrank.feature.length_similarity import (
    LengthSimParams,
    left_branch,
    length_similarity,
    right_branch,
)

FAR_RIGHT_FACTOR = 1e6


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}\t{self.name}\tmeasured={self.measured!r}\ttol={self.tolerance!r}\t{self.detail}"


@dataclass(frozen=True)
class ConstraintReport:
    params: LengthSimParams
    y: float
    checks: Tuple[ConstraintCheck, ...]

    def __iter__(self) -> Iterator[ConstraintCheck]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, name: str) -> ConstraintCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[ConstraintCheck]:
        return [check for check in self.checks if not check.passed]


def _central_slope(branch, xs: np.ndarray, y: float, p: LengthSimParams, step: float) -> np.ndarray:
    return (branch(xs + step, y, p) - branch(xs - step, y, p)) / (2.0 * step)


def verify_feature_constraints(p: LengthSimParams, y: float, fd_step: float = 1e-3,
                               tol: float = 1e-4, grid_points: int = 1000) -> ConstraintReport:
    """Check all six constraints for query length ``y``."""
    if not isinstance(p, LengthSimParams):
        raise ParameterError(f"expected LengthSimParams, got {type(p).__name__}")
    if not math.isfinite(y) or y <= 0:
        raise ParameterError(f"y must be finite and > 0, got {y}")
    if not fd_step > 0:
        raise ParameterError(f"fd_step must be > 0, got {fd_step}")
    if not tol > 0:
        raise ParameterError(f"tol must be > 0, got {tol}")
    if grid_points < 2:
        raise ParameterError(f"grid_points must be at least 2, got {grid_points}")

    checks = []

    at_trough = np.array([y])
    left_slope = float(_central_slope(left_branch, at_trough, y, p, fd_step)[0])
    right_slope = float(_central_slope(right_branch, at_trough, y, p, fd_step)[0])
    trough_slope = max(abs(left_slope), abs(right_slope))
    checks.append(ConstraintCheck(
        "flat trough", trough_slope <= tol, trough_slope, tol,
        f"left slope {left_slope!r}, right slope {right_slope!r} at x=y",
    ))

    left_grid = np.linspace(0.0, y, grid_points + 2)[1:-1]
    left_slopes = _central_slope(left_branch, left_grid, y, p, fd_step)
    steepest_left = float(np.min(left_slopes))
    flattest_left = float(np.max(left_slopes))
    checks.append(ConstraintCheck(
        "decreasing left", flattest_left <= 0.0 and steepest_left < 0.0, flattest_left, 0.0,
        f"slopes in [{steepest_left!r}, {flattest_left!r}] over {grid_points} points in (0, y)",
    ))

    right_grid = np.linspace(y, 10.0 * y, grid_points + 2)[1:-1]
    right_slopes = _central_slope(right_branch, right_grid, y, p, fd_step)
    flattest_right = float(np.min(right_slopes))
    steepest_right = float(np.max(right_slopes))
    checks.append(ConstraintCheck(
        "increasing right", flattest_right >= 0.0 and steepest_right > 0.0, flattest_right, 0.0,
        f"slopes in [{flattest_right!r}, {steepest_right!r}] over {grid_points} points in (y, 10y)",
    ))

    at_zero = length_similarity(0.0, y, p)
    checks.append(ConstraintCheck(
        "left bound", abs(at_zero - p.b1) <= tol, at_zero, tol, f"h(0, y) vs b1={p.b1}",
    ))

    far_right = length_similarity(FAR_RIGHT_FACTOR * y, y, p)
    checks.append(ConstraintCheck(
        "right bound", abs(far_right - p.b2) <= tol, far_right, tol,
        f"h({FAR_RIGHT_FACTOR:g} y, y) vs b2={p.b2}",
    ))

    at_y = length_similarity(y, y, p)
    checks.append(ConstraintCheck("unit trough", at_y == 1.0, at_y, 0.0, "h(y, y) must equal 1 exactly"))

    return ConstraintReport(params=p, y=y, checks=tuple(checks))
