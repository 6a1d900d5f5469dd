"""Parameter blocks for every ranking function.

Each block validates its bounds on construction and converts to and from a
flat ``{name: value}`` mapping, which is the shape used by ``--params``,
grid files and the YAML configuration.
"""

import math
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, Mapping, Tuple

from penrank.errors import ParameterError
from penrank.feature.length_similarity import LengthSimParams


def _check(name: str, value: Any, low: float, high: float = math.inf,
           low_open: bool = True, high_open: bool = True) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ParameterError(f"{name} must be a finite number, got {value!r}")
    if (value <= low) if low_open else (value < low):
        raise ParameterError(f"{name} must be {'>' if low_open else '>='} {low}, got {value}")
    if (value >= high) if high_open else (value > high):
        raise ParameterError(f"{name} must be {'<' if high_open else '<='} {high}, got {value}")


class FlatParams:
    """Conversion between a parameter dataclass and a flat name -> number mapping."""

    @classmethod
    def names(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "FlatParams":
        unknown = sorted(set(values) - set(cls.names()))
        if unknown:
            raise ParameterError(f"Unknown parameter(s) {unknown} for {cls.__name__}; "
                                 f"expected a subset of {list(cls.names())}")
        return cls(**{name: values[name] for name in cls.names() if name in values})

    def to_mapping(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class Bm25Params(FlatParams):
    """k: tf saturation (> 0); b: length-normalization slope in [0, 1]."""
    k: float = 1.2
    b: float = 0.75

    def __post_init__(self):
        _check("k", self.k, 0.0)
        _check("b", self.b, 0.0, 1.0, low_open=False, high_open=False)


@dataclass(frozen=True)
class Bm25LengthSimParams:
    """BM25 with the length-similarity heuristic as its normalizer."""
    k: float = 2.8
    lengthsim: LengthSimParams = field(default_factory=LengthSimParams)

    def __post_init__(self):
        _check("k", self.k, 0.0)
        if not isinstance(self.lengthsim, LengthSimParams):
            raise ParameterError(f"lengthsim must be LengthSimParams, got {type(self.lengthsim).__name__}")

    @classmethod
    def names(cls) -> Tuple[str, ...]:
        return ("k",) + tuple(f.name for f in fields(LengthSimParams))

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "Bm25LengthSimParams":
        unknown = sorted(set(values) - set(cls.names()))
        if unknown:
            raise ParameterError(f"Unknown parameter(s) {unknown} for {cls.__name__}; "
                                 f"expected a subset of {list(cls.names())}")
        curve = {name: values[name] for name in cls.names()[1:] if name in values}
        if "k" in values:
            return cls(k=values["k"], lengthsim=LengthSimParams(**curve))
        return cls(lengthsim=LengthSimParams(**curve))

    def to_mapping(self) -> Dict[str, float]:
        return {"k": self.k, **self.lengthsim.to_dict()}


@dataclass(frozen=True)
class PivotedParams(FlatParams):
    """s: pivot slope in [0, 1]."""
    s: float = 0.2

    def __post_init__(self):
        _check("s", self.s, 0.0, 1.0, low_open=False, high_open=False)


@dataclass(frozen=True)
class DirichletParams(FlatParams):
    """mu: smoothing mass (> 0)."""
    mu: float = 1000.0

    def __post_init__(self):
        _check("mu", self.mu, 0.0)


@dataclass(frozen=True)
class Pl2Params(FlatParams):
    """c: second-normalization strength (> 0)."""
    c: float = 1.0

    def __post_init__(self):
        _check("c", self.c, 0.0)


@dataclass(frozen=True)
class MPtf2lnParams(FlatParams):
    """s: pivot slope in [0, 1]; delta: lower bound added to every matched term's tf weight (>= 0)."""
    s: float = 0.2
    delta: float = 0.0

    def __post_init__(self):
        _check("s", self.s, 0.0, 1.0, low_open=False, high_open=False)
        _check("delta", self.delta, 0.0, low_open=False)


@dataclass(frozen=True)
class MDtf2lnParams(FlatParams):
    """mu: smoothing mass (> 0); delta: pseudo-count lower bound for matched terms (>= 0)."""
    mu: float = 1000.0
    delta: float = 0.0

    def __post_init__(self):
        _check("mu", self.mu, 0.0)
        _check("delta", self.delta, 0.0, low_open=False)
