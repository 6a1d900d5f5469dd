"""Ranking functions.

All scorers share one contract: ``term_weights`` gives the contribution of
every (query term, document) match entry, ``length_offsets`` adds any
per-document term that does not depend on matching (only the language-model
scorers have one). Summing both yields the document score.

The two BM25 variants are one scorer parameterized by its normalizer:
``1 - b + b |d| / avgdl`` for stock BM25 and h(|d|, |q|) for the
length-similarity variant.
"""

import logging
import math
from abc import ABC, abstractmethod
from typing import Any, Callable, ClassVar, Dict, Mapping, Optional, Type

import numpy as np

from penrank.corpus.index import CorpusStats, InvertedIndex
from penrank.errors import DataError, ParameterError
from penrank.feature.length_similarity import LengthSimParams, length_similarity_array
from penrank.models import Query
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

logger = logging.getLogger(__name__)

LOG2_E = math.log2(math.e)

# Normalizer(|d| per entry, |q|, corpus stats) -> normalizer value per entry
Normalizer = Callable[[np.ndarray, float, CorpusStats], np.ndarray]


def pivoted_normalizer(b: float) -> Normalizer:
    def normalize(lengths: np.ndarray, query_length: float, stats: CorpusStats) -> np.ndarray:
        return 1.0 - b + b * lengths / stats.avgdl
    return normalize


def length_similarity_normalizer(p: LengthSimParams) -> Normalizer:
    def normalize(lengths: np.ndarray, query_length: float, stats: CorpusStats) -> np.ndarray:
        return length_similarity_array(lengths, query_length, p)
    return normalize


def idf(m: QueryMatches, stats: CorpusStats) -> np.ndarray:
    """ln((M + 1) / df(t)) per entry."""
    return np.log((stats.num_docs + 1) / m.df)


class Scorer(ABC):
    """Base class of all ranking functions."""
    name: ClassVar[str] = ""
    params_type: ClassVar[Optional[type]] = None

    @abstractmethod
    def term_weights(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        """Contribution of each match entry."""

    def length_offsets(self, lengths: np.ndarray, query: Query, stats: CorpusStats) -> np.ndarray:
        """Per-document additive term independent of matching."""
        return np.zeros(len(lengths))

    def score_candidates(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        """Scores of every candidate document in ``m``, in candidate order."""
        weights = self.term_weights(m, stats)
        scores = np.bincount(m.entry_candidate, weights=weights, minlength=len(m.candidates))
        return scores + self.length_offsets(m.candidate_lengths, m.query, stats)

    def score(self, query: Query, doc_id: str, index: InvertedIndex) -> float:
        """Score a single document; zero term overlap gives only the length offset."""
        length = index.document_length(doc_id)
        m = match_query(query, index, restrict_to=doc_id)
        total = float(np.sum(self.term_weights(m, index.stats)))
        return total + float(self.length_offsets(np.array([float(length)]), query, index.stats)[0])

    def describe(self) -> str:
        params = getattr(self, "params", None)
        if params is None:
            return self.name
        values = ", ".join(f"{k}={v:g}" for k, v in params.to_mapping().items())
        return f"{self.name}({values})"

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()}>"


class Bm25FamilyScorer(Scorer):
    """BM25 with a pluggable length normalizer N(|d|, |q|)."""
    name = "bm25-generic"

    def __init__(self, k: float, normalizer: Normalizer):
        if not k > 0:
            raise ParameterError(f"k must be > 0, got {k}")
        self.k = k
        self.normalizer = normalizer

    def term_weights(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        norm = self.normalizer(m.entry_lengths, float(m.query.length), stats)
        saturation = (self.k + 1.0) * m.tf / (m.tf + self.k * norm)
        return m.qtf * idf(m, stats) * saturation


class Bm25Scorer(Bm25FamilyScorer):
    name = "bm25"
    params_type = Bm25Params

    def __init__(self, params: Bm25Params = Bm25Params()):
        self.params = params
        super().__init__(params.k, pivoted_normalizer(params.b))


class Bm25LengthSimScorer(Bm25FamilyScorer):
    """BM25 whose normalizer is replaced by h(|d|, |q|)."""
    name = "bm25-lengthsim"
    params_type = Bm25LengthSimParams

    def __init__(self, params: Bm25LengthSimParams = Bm25LengthSimParams()):
        self.params = params
        super().__init__(params.k, length_similarity_normalizer(params.lengthsim))


class PivotedScorer(Scorer):
    """Pivoted length normalization with a double-log tf."""
    name = "pivoted"
    params_type = PivotedParams

    def __init__(self, params: PivotedParams = PivotedParams()):
        self.params = params

    def tf_idf(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        s = self.params.s
        tf_part = 1.0 + np.log(1.0 + np.log(m.tf))
        return tf_part / (1.0 - s + s * m.entry_lengths / stats.avgdl) * idf(m, stats)

    def term_weights(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        return m.qtf * self.tf_idf(m, stats)


class DirichletScorer(Scorer):
    """Query likelihood with Dirichlet-prior smoothing (rank-equivalent form)."""
    name = "dirichlet"
    params_type = DirichletParams

    def __init__(self, params: DirichletParams = DirichletParams()):
        self.params = params

    def term_weights(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        collection_p = m.cf / stats.total_tokens
        return m.qtf * np.log1p(m.tf / (self.params.mu * collection_p))

    def length_offsets(self, lengths: np.ndarray, query: Query, stats: CorpusStats) -> np.ndarray:
        mu = self.params.mu
        return query.length * np.log(mu / (mu + lengths))


class Pl2Scorer(Scorer):
    """Divergence from randomness: Poisson model, Laplace after-effect, second normalization."""
    name = "pl2"
    params_type = Pl2Params

    def __init__(self, params: Pl2Params = Pl2Params()):
        self.params = params

    def term_weights(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        if np.any(m.entry_lengths <= 0):
            raise DataError("PL2 cannot score an empty document")
        tfn = m.tf * np.log2(1.0 + self.params.c * stats.avgdl / m.entry_lengths)
        lam = m.cf / stats.num_docs
        positive = tfn > 0
        safe_tfn = np.where(positive, tfn, 1.0)
        info = (safe_tfn * np.log2(safe_tfn / lam)
                + (lam - safe_tfn) * LOG2_E
                + 0.5 * np.log2(2.0 * math.pi * safe_tfn))
        return np.where(positive, m.qtf * info / (safe_tfn + 1.0), 0.0)

    def score(self, query: Query, doc_id: str, index: InvertedIndex) -> float:
        if index.document_length(doc_id) < 1:
            raise DataError(f"PL2 cannot score empty document {doc_id!r}")
        return super().score(query, doc_id, index)


class MPtf2lnScorer(PivotedScorer):
    """Pivoted normalization with a lower-bounded tf weight: adds ``delta`` per matched term."""
    name = "mptf2ln"
    params_type = MPtf2lnParams

    def __init__(self, params: MPtf2lnParams = MPtf2lnParams()):
        self.params = params

    def tf_idf(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        s, delta = self.params.s, self.params.delta
        tf_part = 1.0 + np.log(1.0 + np.log(m.tf))
        normalized = tf_part / (1.0 - s + s * m.entry_lengths / stats.avgdl)
        return (normalized + delta) * idf(m, stats)


class MDtf2lnScorer(DirichletScorer):
    """Dirichlet prior with a pseudo-count floor ``delta`` for every matched term."""
    name = "mdtf2ln"
    params_type = MDtf2lnParams

    def __init__(self, params: MDtf2lnParams = MDtf2lnParams()):
        self.params = params

    def term_weights(self, m: QueryMatches, stats: CorpusStats) -> np.ndarray:
        smoothed = self.params.mu * (m.cf / stats.total_tokens)
        return m.qtf * (np.log1p(m.tf / smoothed) + np.log1p(self.params.delta / smoothed))


SCORERS: Dict[str, Type[Scorer]] = {
    cls.name: cls
    for cls in (Bm25Scorer, Bm25LengthSimScorer, PivotedScorer, DirichletScorer,
                Pl2Scorer, MPtf2lnScorer, MDtf2lnScorer)
}


def make_scorer(name: str, values: Optional[Mapping[str, Any]] = None) -> Scorer:
    """Build a registered scorer from a flat parameter mapping (missing names use defaults)."""
    try:
        cls = SCORERS[name]
    except KeyError:
        raise ParameterError(f"Unknown scorer {name!r}; choose one of {sorted(SCORERS)}") from None
    params = cls.params_type.from_mapping(dict(values or {}))
    return cls(params)


def score_bm25(q: Query, d: str, index: InvertedIndex, p: Bm25Params = Bm25Params()) -> float:
    return Bm25Scorer(p).score(q, d, index)


def score_bm25_lengthsim(q: Query, d: str, index: InvertedIndex,
                         p: Bm25LengthSimParams = Bm25LengthSimParams()) -> float:
    return Bm25LengthSimScorer(p).score(q, d, index)


def score_pivoted(q: Query, d: str, index: InvertedIndex, s: float = 0.2) -> float:
    return PivotedScorer(PivotedParams(s=s)).score(q, d, index)


def score_dirichlet(q: Query, d: str, index: InvertedIndex, mu: float = 1000.0) -> float:
    return DirichletScorer(DirichletParams(mu=mu)).score(q, d, index)


def score_pl2(q: Query, d: str, index: InvertedIndex, c_pl2: float = 1.0) -> float:
    return Pl2Scorer(Pl2Params(c=c_pl2)).score(q, d, index)


def score_mptf2ln(q: Query, d: str, index: InvertedIndex, params: MPtf2lnParams = MPtf2lnParams()) -> float:
    return MPtf2lnScorer(params).score(q, d, index)


def score_mdtf2ln(q: Query, d: str, index: InvertedIndex, params: MDtf2lnParams = MDtf2lnParams()) -> float:
    return MDtf2lnScorer(params).score(q, d, index)
