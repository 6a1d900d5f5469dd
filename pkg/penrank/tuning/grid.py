"""Parameter grids for the tuner.

A grid maps each parameter name of one scorer family to an ordered list of
values. Points are enumerated with ``itertools.product`` in the order the
names and values are listed, which is also the tie-breaking order.
"""

import itertools
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Any, Dict, Iterator, Mapping, Sequence, Tuple, Union

from penrank.errors import InputFileError, MalformedInputError, ParameterError
from penrank.rankers.scorers import SCORERS

logger = logging.getLogger(__name__)


def _steps(start: float, stop: float, step: float) -> Tuple[float, ...]:
    count = int(round((stop - start) / step)) + 1
    return tuple(round(start + i * step, 10) for i in range(count))


# B1 and B2 are fixed at 1 by default; list more values to search them.
DEFAULT_GRIDS: Dict[str, Dict[str, Tuple[float, ...]]] = {
    "bm25": {
        "k": _steps(0.8, 3.6, 0.4),
        "b": _steps(0.0, 1.0, 0.1),
    },
    "bm25-lengthsim": {
        "k": _steps(0.8, 3.6, 0.4),
        "b1": _steps(1.5, 5.0, 0.5),
        "b2": _steps(1.5, 5.0, 0.5),
        "B1": (1.0,),
        "B2": (1.0,),
        "c": _steps(0.1, 0.9, 0.1),
    },
    "pivoted": {"s": _steps(0.0, 1.0, 0.1)},
    "dirichlet": {"mu": (50.0, 100.0, 500.0, 1000.0, 2000.0)},
    "pl2": {"c": (0.5, 1.0, 2.0, 4.0, 8.0)},
    "mptf2ln": {
        "s": _steps(0.0, 1.0, 0.1),
        "delta": (0.0, 0.1, 0.2, 0.5, 1.0),
    },
    "mdtf2ln": {
        "mu": (50.0, 100.0, 500.0, 1000.0, 2000.0),
        "delta": (0.0, 0.1, 0.5, 1.0, 2.0),
    },
}


def format_point(point: Mapping[str, float]) -> str:
    return ", ".join(f"{name}={value:g}" for name, value in point.items())


@dataclass(frozen=True)
class ParamGrid:
    """Ordered per-parameter value lists for one scorer family.

    Every value is checked against its parameter's bounds on construction;
    the error message names the offending point.
    """
    family: str
    values: Mapping[str, Tuple[float, ...]]

    def __post_init__(self):
        if self.family not in SCORERS:
            raise ParameterError(f"Unknown scorer {self.family!r}; choose one of {sorted(SCORERS)}")
        if not self.values:
            raise ParameterError(f"Grid for {self.family} is empty")

        params_type = SCORERS[self.family].params_type
        unknown = [name for name in self.values if name not in params_type.names()]
        if unknown:
            raise ParameterError(f"Unknown parameter(s) {unknown} for {self.family}; "
                                 f"expected a subset of {list(params_type.names())}")

        frozen = {}
        for name, raw in self.values.items():
            if isinstance(raw, (str, bytes)) or not isinstance(raw, Sequence):
                raise ParameterError(f"Grid values for {name} must be a list of numbers, got {raw!r}")
            if not raw:
                raise ParameterError(f"Grid for {self.family} has no values for {name}")
            for value in raw:
                try:
                    params_type.from_mapping({name: value})
                except ParameterError as e:
                    raise ParameterError(f"Invalid grid point {name}={value!r} for {self.family}: {e}") from e
            frozen[name] = tuple(raw)
        object.__setattr__(self, "values", MappingProxyType(frozen))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.values)

    def __len__(self) -> int:
        return math.prod(len(v) for v in self.values.values())

    def points(self) -> Iterator[Dict[str, float]]:
        """Every grid point in lexicographic grid order."""
        for combo in itertools.product(*self.values.values()):
            yield dict(zip(self.names, combo))

    def __iter__(self) -> Iterator[Dict[str, float]]:
        return self.points()

    def to_dict(self) -> Dict[str, Any]:
        return {name: list(values) for name, values in self.values.items()}

    @classmethod
    def default(cls, family: str) -> "ParamGrid":
        if family not in DEFAULT_GRIDS:
            raise ParameterError(f"No default grid for {family!r}; choose one of {sorted(DEFAULT_GRIDS)}")
        return cls(family, DEFAULT_GRIDS[family])


def load_grid(source: Union[str, Path], family: str) -> ParamGrid:
    """Read a JSON object of ``{parameter: [values, ...]}``, given inline or as a file path."""
    if isinstance(source, str) and source.lstrip().startswith("{"):
        origin = "Inline grid"
        try:
            raw = json.loads(source)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"Inline grid is not valid JSON: {e}") from e
    else:
        path = Path(source)
        origin = f"Grid file {path}"
        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = json.load(f)
        except FileNotFoundError:
            raise InputFileError(f"Grid file not found: {path}") from None
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{origin} is not valid JSON: {e}") from e
        except OSError as e:
            raise InputFileError(f"Cannot read grid file {path}: {e}") from e

    if not isinstance(raw, dict):
        raise MalformedInputError(f"{origin} must hold a JSON object, got {type(raw).__name__}")
    grid = ParamGrid(family, raw)
    logger.debug(f"Loaded {len(grid)}-point {family} grid ({origin})")
    return grid
