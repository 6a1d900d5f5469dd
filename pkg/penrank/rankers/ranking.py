"""Top-k ranking and run files."""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Union

import numpy as np

from penrank.corpus.index import InvertedIndex
from penrank.errors import ParameterError
from penrank.models import Query, RunResult, ScoredList
from penrank.rankers.matching import QueryMatches, match_query
from penrank.rankers.scorers import Scorer

logger = logging.getLogger(__name__)


def rank(q: Query, index: InvertedIndex, scorer: Scorer, top_k: int = 1000,
         matches: Optional[QueryMatches] = None) -> ScoredList:
    """Score every document sharing a term with ``q`` and return the best ``top_k``.

    Ordering is by descending score, ties by ascending document id. The
    query's ``exclude_doc`` is never returned. ``matches`` may be passed in
    when the same query is ranked repeatedly.
    """
    if top_k < 1:
        raise ParameterError(f"top_k must be at least 1, got {top_k}")

    m = matches if matches is not None else match_query(q, index)
    scores = scorer.score_candidates(m, index.stats)
    candidates = m.candidates

    if q.exclude_doc is not None and q.exclude_doc in index.doc_rows:
        keep = candidates != index.doc_rows[q.exclude_doc]
        candidates, scores = candidates[keep], scores[keep]

    # candidates are in ascending doc-id order, so a stable sort keeps id order among ties
    order = np.argsort(-scores, kind="stable")[:top_k]
    doc_ids = index.doc_ids
    entries = tuple((doc_ids[candidates[i]], float(scores[i])) for i in order)
    logger.debug(f"Ranked {len(candidates)} candidates for query {q.id}, kept {len(entries)}")
    return ScoredList(query_id=q.id, entries=entries)


def rank_all(queries: Iterable[Query], index: InvertedIndex, scorer: Scorer, top_k: int = 1000) -> RunResult:
    return RunResult(tuple(rank(q, index, scorer, top_k) for q in queries))


def format_run(run: RunResult) -> List[str]:
    """Run lines ``query_id<TAB>doc_id<TAB>rank<TAB>score`` with 1-based ranks."""
    lines = []
    for scored in run:
        for position, (doc_id, score) in enumerate(scored.entries, 1):
            lines.append(f"{scored.query_id}\t{doc_id}\t{position}\t{score:.6f}")
    return lines


def write_run(run: RunResult, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for line in format_run(run):
            f.write(line + "\n")
    logger.info(f"Wrote run with {len(run)} queries to {path}")
    return path
