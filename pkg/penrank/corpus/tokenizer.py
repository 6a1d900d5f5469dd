"""Text normalization: splitting, lowercasing, stopword removal and stemming.

Tokens are maximal runs of letters and digits; everything else separates
them. Stemming uses the Porter algorithm from nltk, which needs no
downloaded data.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Union

from nltk.stem.porter import PorterStemmer

from penrank.errors import InputFileError

_TOKEN_RE = re.compile(r"[^\W_]+", flags=re.UNICODE)

DEFAULT_STOPWORDS: FrozenSet[str] = frozenset("""
a about above after again against all am an and any are as at be because been
before being below between both but by can cannot could did do does doing down
during each few for from further had has have having he her here hers herself
him himself his how i if in into is it its itself just me more most my myself
no nor not now of off on once only or other our ours ourselves out over own
same she should so some such than that the their theirs them themselves then
there these they this those through to too under until up very was we were
what when where which while who whom why will with would you your yours
yourself yourselves
""".split())

_stemmer = PorterStemmer()


@lru_cache(maxsize=65536)
def _stem(token: str) -> str:
    return _stemmer.stem(token, to_lowercase=False)


@dataclass(frozen=True)
class TokenizerConfig:
    """Preprocessing switches. Identical text and config give identical tokens."""
    stopwords: FrozenSet[str] = DEFAULT_STOPWORDS
    stemming: bool = True
    lowercase: bool = True

    def __post_init__(self):
        object.__setattr__(self, "stopwords", frozenset(self.stopwords))

    def to_dict(self) -> Dict[str, object]:
        return {
            "stopwords": sorted(self.stopwords),
            "stemming": self.stemming,
            "lowercase": self.lowercase,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "TokenizerConfig":
        return cls(
            stopwords=frozenset(data.get("stopwords", DEFAULT_STOPWORDS)),
            stemming=bool(data.get("stemming", True)),
            lowercase=bool(data.get("lowercase", True)),
        )


def load_stopwords(path: Union[str, Path]) -> FrozenSet[str]:
    """Read a stopword file: one word per line, ``#`` starts a comment."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise InputFileError(f"Cannot read stopword file {path}: {e}") from e
    words = (line.split("#", 1)[0].strip() for line in lines)
    return frozenset(word for word in words if word)


def tokenize(text: Optional[str], config: TokenizerConfig = TokenizerConfig()) -> List[str]:
    """Split ``text`` into normalized tokens.

    Order of operations: split on non-alphanumerics, lowercase (if enabled),
    drop stopwords, stem (if enabled). Pure-digit tokens are kept.
    """
    if not text:
        return []

    tokens = []
    for token in _TOKEN_RE.findall(text):
        if config.lowercase:
            token = token.lower()
        if token in config.stopwords:
            continue
        if config.stemming:
            token = _stem(token)
        tokens.append(token)
    return tokens

