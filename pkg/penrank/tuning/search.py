"""Exhaustive grid search over scorer parameters, scored by MRR."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from penrank.corpus.index import InvertedIndex
from penrank.errors import ParameterError
from penrank.evaluation.runner import Evaluation, PreparedQuery, evaluate, prepare_queries
from penrank.models import Qrels, Query
from penrank.rankers.scorers import Scorer, make_scorer
from penrank.tuning.grid import ParamGrid, format_point

logger = logging.getLogger(__name__)

TIE_POLICY = "earliest-grid-order"


class TuneEntry(NamedTuple):
    point: Dict[str, float]
    mrr: float
    order: int


@dataclass(frozen=True)
class TuneReport:
    """Every grid point with its training MRR, best first.

    Equal MRRs keep grid order, so the best point is the earliest maximizer.
    """
    family: str
    names: Tuple[str, ...]
    entries: Tuple[TuneEntry, ...]
    tie_policy: str = TIE_POLICY

    def __post_init__(self):
        if not self.entries:
            raise ParameterError(f"Tune report for {self.family} has no entries")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def best(self) -> TuneEntry:
        return self.entries[0]

    @property
    def best_point(self) -> Dict[str, float]:
        return dict(self.best.point)

    @property
    def best_mrr(self) -> float:
        return self.best.mrr

    def best_scorer(self) -> Scorer:
        return make_scorer(self.family, self.best.point)


def grid_search(index: InvertedIndex, queries: Optional[Iterable[Query]], qrels: Qrels, family: str,
                grid: ParamGrid, top_k: int = 1000,
                prepared: Optional[Sequence[PreparedQuery]] = None) -> TuneReport:
    """Evaluate MRR at every point of ``grid`` and report them all."""
    if grid.family != family:
        raise ParameterError(f"Grid is for {grid.family!r}, not {family!r}")
    if len(grid) == 0:
        raise ParameterError(f"Grid for {family} is empty")

    if prepared is None:
        prepared = prepare_queries(index, queries or ())

    logger.info(f"Tuning {family} over {len(grid)} grid points and {len(prepared)} queries")
    entries = []
    for order, point in enumerate(grid.points()):
        scorer = make_scorer(family, point)
        result = evaluate(index, None, qrels, scorer, top_k=top_k, prepared=prepared)
        entries.append(TuneEntry(point, result.mrr, order))
        logger.debug(f"[{order + 1}/{len(grid)}] {format_point(point)}: MRR={result.mrr:.6f}")

    entries.sort(key=lambda e: (-e.mrr, e.order))
    report = TuneReport(family, grid.names, tuple(entries))
    logger.info(f"Best {family} point: {format_point(report.best.point)} (MRR={report.best.mrr:.6f})")
    return report


def format_report(report: TuneReport) -> List[str]:
    """Report lines: a header, one line per point (best first), then a ``best`` summary line."""
    lines = ["\t".join(report.names + ("mrr",))]
    for entry in report.entries:
        values = [f"{entry.point[name]:g}" for name in report.names]
        lines.append("\t".join(values + [f"{entry.mrr:.6f}"]))
    best = "\t".join(f"{name}={report.best.point[name]:g}" for name in report.names)
    lines.append(f"best\t{best}\tmrr={report.best.mrr:.6f}\ttie_policy={report.tie_policy}")
    return lines


def write_report(report: TuneReport, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for line in format_report(report):
            f.write(line + "\n")
    logger.info(f"Wrote {len(report)}-point tune report to {path}")
    return path


class ProtocolResult(NamedTuple):
    report: TuneReport
    test: Evaluation


def tune_and_test(index: InvertedIndex, train_queries: Iterable[Query], train_qrels: Qrels,
                  test_queries: Iterable[Query], test_qrels: Qrels, family: str,
                  grid: ParamGrid, top_k: int = 1000) -> ProtocolResult:
    """Tune on the training split, then score the best point once on the test split."""
    report = grid_search(index, train_queries, train_qrels, family, grid, top_k=top_k)
    test = evaluate(index, test_queries, test_qrels, report.best_scorer(), top_k=top_k)
    logger.info(f"{family}: train MRR={report.best_mrr:.4f}, test MRR={test.mrr:.4f}")
    return ProtocolResult(report, test)
