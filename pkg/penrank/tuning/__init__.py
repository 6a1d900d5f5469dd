"""Grid-search tuning of scorer parameters."""

from penrank.tuning.grid import DEFAULT_GRIDS, ParamGrid, format_point, load_grid
from penrank.tuning.search import (
    TIE_POLICY,
    ProtocolResult,
    TuneEntry,
    TuneReport,
    format_report,
    grid_search,
    tune_and_test,
    write_report,
)

__all__ = [
    "DEFAULT_GRIDS",
    "ParamGrid",
    "format_point",
    "load_grid",
    "TIE_POLICY",
    "ProtocolResult",
    "TuneEntry",
    "TuneReport",
    "format_report",
    "grid_search",
    "tune_and_test",
    "write_report",
]
