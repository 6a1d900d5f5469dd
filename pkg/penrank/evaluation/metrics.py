"""Mean reciprocal rank."""

import logging
import math

from penrank.models import Qrels, RunResult

logger = logging.getLogger(__name__)


def reciprocal_rank(rank: int) -> float:
    """1 / rank, with the 0 sentinel (not retrieved) contributing 0."""
    return 1.0 / rank if rank > 0 else 0.0


def mrr(run: RunResult, qrels: Qrels) -> float:
    """(1/s) * sum of 1/rank_i over the s queries of ``run``.

    A query whose relevant documents were not retrieved contributes 0. Every
    query in the run must have judgments.
    """
    ranks = run.first_relevant_ranks(qrels)
    if not ranks:
        logger.warning("MRR of an empty run is reported as 0.0")
        return 0.0
    return math.fsum(reciprocal_rank(r) for r in ranks.values()) / len(ranks)
