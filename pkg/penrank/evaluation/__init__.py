"""Relevance judgments, run execution and mean reciprocal rank."""

from penrank.evaluation.io import read_qrels, read_run, write_qrels
from penrank.evaluation.metrics import mrr, reciprocal_rank
from penrank.evaluation.runner import Evaluation, PreparedQuery, evaluate, prepare_queries, with_self_exclusion

__all__ = [
    "read_qrels",
    "read_run",
    "write_qrels",
    "mrr",
    "reciprocal_rank",
    "Evaluation",
    "PreparedQuery",
    "evaluate",
    "prepare_queries",
    "with_self_exclusion",
]
