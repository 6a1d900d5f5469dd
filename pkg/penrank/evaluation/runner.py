"""Run execution: rank a query set and score it with MRR."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence

from penrank.corpus.index import InvertedIndex
from penrank.evaluation.metrics import mrr
from penrank.models import Qrels, Query, RunResult
from penrank.rankers.matching import QueryMatches, match_query
from penrank.rankers.ranking import rank
from penrank.rankers.scorers import Scorer

logger = logging.getLogger(__name__)


class Evaluation(NamedTuple):
    run: RunResult
    mrr: float


@dataclass(frozen=True)
class PreparedQuery:
    """A query with self-exclusion applied and its matches precomputed."""
    query: Query
    matches: QueryMatches


def with_self_exclusion(query: Query, index: InvertedIndex) -> Query:
    """A query whose id is also a document id never retrieves that document."""
    if query.exclude_doc is None and query.id in index:
        return query.excluding(query.id)
    return query


def prepare_queries(index: InvertedIndex, queries: Iterable[Query]) -> List[PreparedQuery]:
    prepared = []
    for query in queries:
        query = with_self_exclusion(query, index)
        prepared.append(PreparedQuery(query, match_query(query, index)))
    return prepared


def evaluate(index: InvertedIndex, queries: Optional[Iterable[Query]], qrels: Qrels, scorer: Scorer,
             top_k: int = 1000, prepared: Optional[Sequence[PreparedQuery]] = None) -> Evaluation:
    """Rank every query and compute MRR against ``qrels``.

    Pass ``prepared`` instead of ``queries`` to reuse matches across calls.
    """
    if prepared is None:
        prepared = prepare_queries(index, queries or ())

    for item in prepared:
        qrels.relevant(item.query.id)

    run = RunResult(tuple(rank(item.query, index, scorer, top_k, matches=item.matches) for item in prepared))
    value = mrr(run, qrels)
    logger.info(f"{scorer.describe()}: MRR={value:.4f} over {len(run)} queries")
    return Evaluation(run, value)
