"""Text ingestion, tokenization, inverted indexing and index persistence."""

from penrank.corpus.index import CorpusStats, InvertedIndex, Posting, build_index, index_documents
from penrank.corpus.readers import load_queries, make_queries, read_records, write_records
from penrank.corpus.storage import load_index, save_index
from penrank.corpus.tokenizer import DEFAULT_STOPWORDS, TokenizerConfig, load_stopwords, tokenize

__all__ = [
    "CorpusStats",
    "InvertedIndex",
    "Posting",
    "build_index",
    "index_documents",
    "load_queries",
    "make_queries",
    "read_records",
    "write_records",
    "load_index",
    "save_index",
    "DEFAULT_STOPWORDS",
    "TokenizerConfig",
    "load_stopwords",
    "tokenize",
]
