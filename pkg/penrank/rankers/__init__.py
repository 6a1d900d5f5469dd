"""Ranking functions behind one scorer contract, plus top-k ranking."""

from penrank.rankers.matching import QueryMatches, match_query
from penrank.rankers.params import (
    Bm25LengthSimParams,
    Bm25Params,
    DirichletParams,
    MDtf2lnParams,
    MPtf2lnParams,
    Pl2Params,
    PivotedParams,
)
from penrank.rankers.ranking import format_run, rank, rank_all, write_run
from penrank.rankers.scorers import (
    SCORERS,
    Bm25FamilyScorer,
    Bm25LengthSimScorer,
    Bm25Scorer,
    DirichletScorer,
    MDtf2lnScorer,
    MPtf2lnScorer,
    Pl2Scorer,
    PivotedScorer,
    Scorer,
    length_similarity_normalizer,
    make_scorer,
    pivoted_normalizer,
    score_bm25,
    score_bm25_lengthsim,
    score_dirichlet,
    score_mdtf2ln,
    score_mptf2ln,
    score_pivoted,
    score_pl2,
)

__all__ = [
    "QueryMatches",
    "match_query",
    "Bm25LengthSimParams",
    "Bm25Params",
    "DirichletParams",
    "MDtf2lnParams",
    "MPtf2lnParams",
    "Pl2Params",
    "PivotedParams",
    "format_run",
    "rank",
    "rank_all",
    "write_run",
    "SCORERS",
    "Bm25FamilyScorer",
    "Bm25LengthSimScorer",
    "Bm25Scorer",
    "DirichletScorer",
    "MDtf2lnScorer",
    "MPtf2lnScorer",
    "Pl2Scorer",
    "PivotedScorer",
    "Scorer",
    "length_similarity_normalizer",
    "make_scorer",
    "pivoted_normalizer",
    "score_bm25",
    "score_bm25_lengthsim",
    "score_dirichlet",
    "score_mdtf2ln",
    "score_mptf2ln",
    "score_pivoted",
    "score_pl2",
]
