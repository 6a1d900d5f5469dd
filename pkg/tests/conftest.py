"""Shared fixtures: the two-document corpus and a seeded random generator."""

import numpy as np
import pytest

from penrank.corpus.index import build_index
from penrank.corpus.tokenizer import TokenizerConfig

from corpora import PLAIN, TWO_DOCS


@pytest.fixture
def plain_tokenizer() -> TokenizerConfig:
    return PLAIN


@pytest.fixture
def two_doc_index():
    return build_index(TWO_DOCS, PLAIN)


@pytest.fixture
def rng():
    return np.random.default_rng(42)
