"""Flattened query/postings matches.

Every scorer works on the same flat view: one entry per (query term,
matching document) pair, with that pair's statistics in parallel arrays.
Building it once per query lets a tuner re-score the same query under many
parameter points.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from penrank.corpus.index import InvertedIndex
from penrank.models import Query


@dataclass(frozen=True)
class QueryMatches:
    """Matches of one query against an index.

    ``candidates`` holds index rows (ascending, so ascending doc id) of the
    documents sharing at least one term with the query. The per-entry arrays
    ``qtf``, ``tf``, ``df`` and ``cf`` hold f(t,q), f(t,d), df(t) and F_t;
    ``entry_candidate`` maps each entry to its position in ``candidates``.
    """
    query: Query
    candidates: np.ndarray
    candidate_lengths: np.ndarray
    entry_candidate: np.ndarray
    qtf: np.ndarray
    tf: np.ndarray
    df: np.ndarray
    cf: np.ndarray

    def __len__(self) -> int:
        return len(self.qtf)

    @cached_property
    def entry_lengths(self) -> np.ndarray:
        """|d| for each entry's document."""
        return self.candidate_lengths[self.entry_candidate]


def match_query(query: Query, index: InvertedIndex, restrict_to: Optional[str] = None) -> QueryMatches:
    """Collect postings entries of ``query``'s terms, optionally for one document only."""
    rows, tfs, qtfs, dfs, cfs = [], [], [], [], []
    arrays = index.term_arrays
    for term in sorted(query.terms):
        term_arrays = arrays.get(term)
        if term_arrays is None:
            continue
        n = len(term_arrays.rows)
        rows.append(term_arrays.rows)
        tfs.append(term_arrays.tfs)
        qtfs.append(np.full(n, float(query.terms[term])))
        dfs.append(np.full(n, float(n)))
        cfs.append(np.full(n, float(index.stats.collection_tf[term])))

    if rows:
        rows_all = np.concatenate(rows)
        tf, qtf, df, cf = (np.concatenate(a) for a in (tfs, qtfs, dfs, cfs))
    else:
        rows_all = np.empty(0, dtype=np.int64)
        tf = qtf = df = cf = np.empty(0, dtype=np.float64)

    if restrict_to is not None:
        keep = rows_all == index.doc_rows[restrict_to]
        rows_all, tf, qtf, df, cf = rows_all[keep], tf[keep], qtf[keep], df[keep], cf[keep]

    candidates, entry_candidate = np.unique(rows_all, return_inverse=True)
    return QueryMatches(
        query=query,
        candidates=candidates,
        candidate_lengths=index.length_array[candidates],
        entry_candidate=entry_candidate.reshape(-1),
        qtf=qtf,
        tf=tf,
        df=df,
        cf=cf,
    )
