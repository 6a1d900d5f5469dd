"""Corpus builders shared by the test modules."""

import numpy as np

from penrank.corpus.tokenizer import TokenizerConfig
from penrank.models import Query

# No stopwords and no stemming, so the hand-computed statistics hold verbatim.
PLAIN = TokenizerConfig(stopwords=frozenset(), stemming=False, lowercase=True)

TWO_DOCS = [("d1", "cat cat dog"), ("d2", "dog bird")]


def make_query(text: str, query_id: str = "q", exclude_doc=None) -> Query:
    return Query.from_tokens(query_id, text.split(), exclude_doc=exclude_doc)


def random_records(rng: np.random.Generator, n_docs: int, vocab_size: int, max_len: int = 30):
    """Random documents over a ``w0..w{vocab_size-1}`` vocabulary, each at least one token long."""
    vocab = [f"w{i}" for i in range(vocab_size)]
    records = []
    for i in range(n_docs):
        length = int(rng.integers(1, max_len + 1))
        words = rng.choice(vocab, size=length)
        records.append((f"doc{i:03d}", " ".join(words)))
    return records


def random_query(rng: np.random.Generator, vocab_size: int, max_len: int = 6, query_id: str = "q") -> Query:
    length = int(rng.integers(1, max_len + 1))
    return Query.from_tokens(query_id, [f"w{i}" for i in rng.integers(0, vocab_size, size=length)])
