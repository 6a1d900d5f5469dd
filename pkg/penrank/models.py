"""Shared data structures for documents, queries and ranked output.

These records flow between the corpus, rankers, evaluation and tuning
packages. They are immutable once built.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from penrank.errors import DataError, QrelsError


@dataclass(frozen=True)
class Document:
    """A preprocessed document: a bag of normalized terms.

    ``length`` is the token count |d| after preprocessing and always equals
    the sum of the term frequencies.
    """
    id: str
    terms: Counter = field(default_factory=Counter)

    def __post_init__(self):
        if not self.id:
            raise DataError("Document id must be a non-empty string")

    @cached_property
    def length(self) -> int:
        return sum(self.terms.values())

    @classmethod
    def from_tokens(cls, doc_id: str, tokens: Iterable[str]) -> "Document":
        return cls(id=doc_id, terms=Counter(tokens))

    def __str__(self) -> str:
        return f"{self.id} ({self.length} tokens, {len(self.terms)} distinct)"


@dataclass(frozen=True)
class Query:
    """A preprocessed query.

    ``length`` is |q|. ``exclude_doc`` names a document that must never be
    returned for this query (a user's own profile in the penpal setting).
    """
    id: str
    terms: Counter = field(default_factory=Counter)
    exclude_doc: Optional[str] = None

    def __post_init__(self):
        if not self.id:
            raise DataError("Query id must be a non-empty string")

    @cached_property
    def length(self) -> int:
        return sum(self.terms.values())

    @classmethod
    def from_tokens(cls, query_id: str, tokens: Iterable[str],
                    exclude_doc: Optional[str] = None) -> "Query":
        return cls(id=query_id, terms=Counter(tokens), exclude_doc=exclude_doc)

    def excluding(self, doc_id: Optional[str]) -> "Query":
        """Return a copy of this query that never returns ``doc_id``."""
        return replace(self, exclude_doc=doc_id)

    def scaled(self, factor: int) -> "Query":
        """Return a copy with every query term frequency multiplied by ``factor``."""
        return replace(self, terms=Counter({t: f * factor for t, f in self.terms.items()}))


@dataclass(frozen=True)
class ScoredList:
    """Ranked output for one query.

    Entries are ``(doc_id, score)`` ordered by descending score, ties broken
    by ascending document id.
    """
    query_id: str
    entries: Tuple[Tuple[str, float], ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[str, float]]:
        return iter(self.entries)

    @property
    def doc_ids(self) -> List[str]:
        return [doc_id for doc_id, _ in self.entries]

    def rank_of(self, doc_ids: Iterable[str]) -> int:
        """Return the 1-based rank of the first listed document in ``doc_ids``, or 0."""
        wanted = set(doc_ids)
        for position, (doc_id, _) in enumerate(self.entries, 1):
            if doc_id in wanted:
                return position
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "query_id": self.query_id,
            "results": [{"doc_id": d, "score": s} for d, s in self.entries],
        }


@dataclass(frozen=True)
class Qrels:
    """Relevance judgments: query id -> non-empty set of relevant doc ids."""
    judgments: Mapping[str, FrozenSet[str]] = field(default_factory=dict)

    def __post_init__(self):
        for query_id, relevant in self.judgments.items():
            if not relevant:
                raise QrelsError(f"Query {query_id!r} has no relevant documents")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, str]]) -> "Qrels":
        collected: Dict[str, set] = {}
        for query_id, doc_id in pairs:
            collected.setdefault(query_id, set()).add(doc_id)
        return cls({q: frozenset(docs) for q, docs in collected.items()})

    def __contains__(self, query_id: str) -> bool:
        return query_id in self.judgments

    def __len__(self) -> int:
        return len(self.judgments)

    def relevant(self, query_id: str) -> FrozenSet[str]:
        try:
            return self.judgments[query_id]
        except KeyError:
            raise QrelsError(f"Query {query_id!r} is missing from the relevance judgments") from None

    @property
    def query_ids(self) -> List[str]:
        return sorted(self.judgments)


@dataclass(frozen=True)
class RunResult:
    """Ranked lists for a set of queries, in query order."""
    results: Tuple[ScoredList, ...] = ()

    def __len__(self) -> int:
        return len(self.results)

    def __iter__(self) -> Iterator[ScoredList]:
        return iter(self.results)

    def covering(self, query_ids: Iterable[str]) -> "RunResult":
        """This run plus an empty ranked list for every id in ``query_ids`` it has no results for.

        Run files carry no line for a query that retrieved nothing, so a run
        read back from disk needs its query set restored before scoring.
        """
        present = {scored.query_id for scored in self.results}
        missing = tuple(ScoredList(q, ()) for q in dict.fromkeys(query_ids) if q not in present)
        return RunResult(self.results + missing) if missing else self

    def first_relevant_ranks(self, qrels: Qrels) -> Dict[str, int]:
        """rank_i per query: 1-based position of the first relevant document, 0 if absent."""
        return {scored.query_id: scored.rank_of(qrels.relevant(scored.query_id))
                for scored in self.results}
