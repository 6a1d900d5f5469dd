"""penrank - length-similarity ranking workbench for penpal matching.

Ranks user profile texts against each other with BM25, BM25 with a
length-similarity normalizer, and five baseline ranking functions, and
evaluates and tunes the rankings by mean reciprocal rank.
"""

__version__ = "1.0.0"

# Key classes and functions for programmatic use
from penrank.cfg.config import PenrankConfig, load_config
from penrank.corpus import InvertedIndex, TokenizerConfig, build_index, load_index, save_index, tokenize
from penrank.evaluation import evaluate, mrr, read_qrels
from penrank.feature import LengthSimParams, length_similarity, verify_feature_constraints
from penrank.models import Document, Qrels, Query, RunResult, ScoredList
from penrank.rankers import SCORERS, make_scorer, rank
from penrank.synth import SynthConfig, generate_corpus
from penrank.tuning import ParamGrid, grid_search

__all__ = [
    "PenrankConfig",
    "load_config",
    "InvertedIndex",
    "TokenizerConfig",
    "build_index",
    "load_index",
    "save_index",
    "tokenize",
    "evaluate",
    "mrr",
    "read_qrels",
    "LengthSimParams",
    "length_similarity",
    "verify_feature_constraints",
    "Document",
    "Qrels",
    "Query",
    "RunResult",
    "ScoredList",
    "SCORERS",
    "make_scorer",
    "rank",
    "SynthConfig",
    "generate_corpus",
    "ParamGrid",
    "grid_search",
]
