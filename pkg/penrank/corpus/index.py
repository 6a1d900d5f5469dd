"""Inverted index construction.

An index is built once by a single writer and is read-only afterwards, so a
built ``InvertedIndex`` can be shared freely between threads.
"""

import logging
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple

import numpy as np

from penrank.corpus.tokenizer import TokenizerConfig, tokenize
from penrank.errors import DataError, DuplicateDocumentError, UnknownDocumentError
from penrank.models import Document

logger = logging.getLogger(__name__)


class Posting(NamedTuple):
    doc_id: str
    tf: int


@dataclass(frozen=True)
class CorpusStats:
    """Collection-level statistics.

    ``num_docs`` is M, ``collection_tf`` maps a term to its total number of
    occurrences F_t, and ``total_tokens`` is the sum of all document lengths.
    """
    num_docs: int
    avgdl: float
    total_tokens: int
    collection_tf: Mapping[str, int] = field(default_factory=dict)

    def collection_probability(self, term: str) -> float:
        """p(t|C) = F_t / total_tokens."""
        return self.collection_tf.get(term, 0) / self.total_tokens


@dataclass(frozen=True)
class TermArrays:
    """Postings of one term as parallel arrays (document rows, term frequencies)."""
    rows: np.ndarray
    tfs: np.ndarray


@dataclass(frozen=True)
class InvertedIndex:
    """Postings with term frequencies plus per-document lengths.

    Postings lists are sorted by document id. The tokenizer configuration the
    index was built with travels with it so queries are preprocessed the same
    way as the documents.
    """
    postings: Mapping[str, Tuple[Posting, ...]]
    doc_lengths: Mapping[str, int]
    stats: CorpusStats
    tokenizer: TokenizerConfig = TokenizerConfig()

    def __post_init__(self):
        object.__setattr__(self, "postings", MappingProxyType(dict(self.postings)))
        object.__setattr__(self, "doc_lengths", MappingProxyType(dict(self.doc_lengths)))

    def __len__(self) -> int:
        return self.stats.num_docs

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self.doc_lengths

    @cached_property
    def doc_ids(self) -> Tuple[str, ...]:
        """All document ids in ascending order; a document's position is its row."""
        return tuple(sorted(self.doc_lengths))

    @cached_property
    def doc_rows(self) -> Dict[str, int]:
        return {doc_id: row for row, doc_id in enumerate(self.doc_ids)}

    @cached_property
    def length_array(self) -> np.ndarray:
        return np.array([self.doc_lengths[d] for d in self.doc_ids], dtype=np.float64)

    @cached_property
    def term_arrays(self) -> Dict[str, TermArrays]:
        rows = self.doc_rows
        arrays = {}
        for term, plist in self.postings.items():
            arrays[term] = TermArrays(
                rows=np.fromiter((rows[p.doc_id] for p in plist), dtype=np.int64, count=len(plist)),
                tfs=np.fromiter((p.tf for p in plist), dtype=np.float64, count=len(plist)),
            )
        return arrays

    @cached_property
    def _posting_doc_ids(self) -> Dict[str, Tuple[str, ...]]:
        return {term: tuple(p.doc_id for p in plist) for term, plist in self.postings.items()}

    def df(self, term: str) -> int:
        """Document frequency: length of the term's postings list."""
        return len(self.postings.get(term, ()))

    def postings_for(self, term: str) -> Tuple[Posting, ...]:
        return self.postings.get(term, ())

    def document_length(self, doc_id: str) -> int:
        try:
            return self.doc_lengths[doc_id]
        except KeyError:
            raise UnknownDocumentError(doc_id) from None

    def term_frequency(self, term: str, doc_id: str) -> int:
        """f(t,d); 0 when the term does not occur in the document."""
        doc_ids = self._posting_doc_ids.get(term)
        if not doc_ids:
            return 0
        i = bisect_left(doc_ids, doc_id)
        if i < len(doc_ids) and doc_ids[i] == doc_id:
            return self.postings[term][i].tf
        return 0


def index_documents(documents: Iterable[Document],
                    tokenizer: TokenizerConfig = TokenizerConfig()) -> InvertedIndex:
    """Build an index from already tokenized documents."""
    by_id: Dict[str, Document] = {}
    for doc in documents:
        if doc.id in by_id:
            raise DuplicateDocumentError(doc.id)
        by_id[doc.id] = doc

    if not by_id:
        raise DataError("Cannot build an index from zero documents (avgdl is undefined)")

    postings: Dict[str, List[Posting]] = {}
    doc_lengths: Dict[str, int] = {}
    collection_tf: Counter = Counter()

    for doc_id in sorted(by_id):
        doc = by_id[doc_id]
        doc_lengths[doc_id] = doc.length
        for term, tf in doc.terms.items():
            if tf < 1:
                continue
            postings.setdefault(term, []).append(Posting(doc_id, tf))
            collection_tf[term] += tf

    total_tokens = sum(doc_lengths.values())
    stats = CorpusStats(
        num_docs=len(doc_lengths),
        avgdl=total_tokens / len(doc_lengths),
        total_tokens=total_tokens,
        collection_tf=MappingProxyType(dict(sorted(collection_tf.items()))),
    )

    index = InvertedIndex(
        postings={term: tuple(plist) for term, plist in sorted(postings.items())},
        doc_lengths=doc_lengths,
        stats=stats,
        tokenizer=tokenizer,
    )
    logger.info(f"Built index: {stats.num_docs} documents, {len(index.postings)} terms, "
                f"avgdl={stats.avgdl:.2f}")
    return index


def build_index(records: Iterable[Tuple[str, str]],
                config: TokenizerConfig = TokenizerConfig()) -> InvertedIndex:
    """Tokenize ``(id, raw text)`` records and build an index over them."""
    documents = (Document.from_tokens(doc_id, tokenize(text, config)) for doc_id, text in records)
    return index_documents(documents, config)
