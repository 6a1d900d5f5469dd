"""Synthetic penpal corpus.

Users come in pairs, and pairs are grouped into topics. Every topic owns a
small pool of interest terms; each pair samples its shared interests from
its topic's pool, so a user's partner overlaps with them only slightly more
than the other members of the same topic do. Background words are
Zipf-distributed. Pair lengths follow a configured mix of short-short,
long-long and mixed pairs, where short and long are relative to the
realized average length, and the two members of a same-kind pair get
nearly the same length.

Words are pseudo-words of the shape consonant-vowel-consonant-vowel-consonant
whose final letters never form an English suffix, so the default tokenizer
keeps every word as one unchanged token and a document's indexed length is
its word count.
"""

import itertools
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from penrank.errors import SynthConfigError
from penrank.models import Qrels

logger = logging.getLogger(__name__)

SHORT_SHORT = "short-short"
LONG_LONG = "long-long"
MIXED = "mixed"
PAIR_KINDS = (SHORT_SHORT, LONG_LONG, MIXED)

_ONSETS = "bdfgkmnptvz"
_VOWELS = "aeiou"
_FINALS = "bgkmnptvz"


@dataclass(frozen=True)
class SynthConfig:
    """Shape of the generated corpus.

    The mix counts apply to the training pairs; ``other_pairs=None`` means
    whatever remains after the short-short and long-long counts. The test
    pairs follow the same proportions.
    """
    users: int = 630
    pairs: int = 315
    train_pairs: int = 252
    test_pairs: int = 63
    target_avgdl: float = 131.0
    short_short_pairs: int = 62
    long_long_pairs: int = 131
    other_pairs: Optional[int] = None
    short_band: Tuple[float, float] = (0.2, 0.7)
    long_floor: float = 1.1
    length_jitter: float = 0.05
    background_vocab_size: int = 20000
    interest_vocab_size: int = 1500
    pairs_per_topic: int = 7
    topic_terms: int = 24
    interest_terms_per_pair: int = 18
    interest_share: float = 0.5
    background_zipf: float = 1.0
    interest_zipf: float = 0.7
    seed: int = 1

    def __post_init__(self):
        object.__setattr__(self, "short_band", tuple(self.short_band))
        if self.pairs < 1:
            raise SynthConfigError(f"pairs must be at least 1, got {self.pairs}")
        if 2 * self.pairs != self.users:
            raise SynthConfigError(f"users ({self.users}) must be twice the pair count ({self.pairs})")
        if self.train_pairs < 0 or self.test_pairs < 0 or self.train_pairs + self.test_pairs != self.pairs:
            raise SynthConfigError(f"train ({self.train_pairs}) and test ({self.test_pairs}) pairs "
                                   f"must be non-negative and sum to {self.pairs}")
        if self.short_short_pairs < 0 or self.long_long_pairs < 0:
            raise SynthConfigError("pair-length mix counts must be non-negative")
        if self.mixed_pairs < 0:
            raise SynthConfigError(f"short-short ({self.short_short_pairs}) and long-long ({self.long_long_pairs}) "
                                   f"pairs exceed the {self.train_pairs} training pairs")
        if self.short_short_pairs + self.long_long_pairs + self.mixed_pairs != self.train_pairs:
            raise SynthConfigError(f"pair-length mix {self.training_mix()} does not sum to "
                                   f"{self.train_pairs} training pairs")
        if self.target_avgdl <= 0:
            raise SynthConfigError(f"target_avgdl must be positive, got {self.target_avgdl}")
        low, high = self.short_band
        if not 0 < low < high < 1 < self.long_floor:
            raise SynthConfigError(f"need 0 < short_band[0] < short_band[1] < 1 < long_floor, "
                                   f"got {self.short_band} and {self.long_floor}")
        if not 0 < self.interest_share < 1:
            raise SynthConfigError(f"interest_share must lie in (0, 1), got {self.interest_share}")
        if self.pairs_per_topic < 1:
            raise SynthConfigError(f"pairs_per_topic must be at least 1, got {self.pairs_per_topic}")
        if self.interest_terms_per_pair < 1 or self.interest_terms_per_pair > self.topic_terms:
            raise SynthConfigError(f"interest_terms_per_pair must lie in [1, topic_terms={self.topic_terms}], "
                                   f"got {self.interest_terms_per_pair}")
        if self.topics * self.topic_terms > self.interest_vocab_size:
            raise SynthConfigError(f"{self.topics} topics of {self.topic_terms} terms exceed the "
                                   f"{self.interest_vocab_size}-word interest vocabulary")
        if self.length_jitter < 0:
            raise SynthConfigError(f"length_jitter must be non-negative, got {self.length_jitter}")
        available = len(_ONSETS) ** 2 * len(_VOWELS) ** 2 * len(_FINALS)
        if self.background_vocab_size + self.interest_vocab_size > available:
            raise SynthConfigError(f"vocabulary sizes exceed the {available} available pseudo-words")

    @property
    def topics(self) -> int:
        return -(-self.pairs // self.pairs_per_topic)

    @property
    def mixed_pairs(self) -> int:
        if self.other_pairs is None:
            return self.train_pairs - self.short_short_pairs - self.long_long_pairs
        return self.other_pairs

    def training_mix(self) -> Dict[str, int]:
        return {SHORT_SHORT: self.short_short_pairs, LONG_LONG: self.long_long_pairs, MIXED: self.mixed_pairs}

    def test_mix(self) -> Dict[str, int]:
        """Training proportions scaled to the test pairs, rounded."""
        if self.train_pairs == 0:
            return {SHORT_SHORT: 0, LONG_LONG: 0, MIXED: self.test_pairs}
        scale = self.test_pairs / self.train_pairs
        short_short = min(round(self.short_short_pairs * scale), self.test_pairs)
        long_long = min(round(self.long_long_pairs * scale), self.test_pairs - short_short)
        return {SHORT_SHORT: short_short, LONG_LONG: long_long, MIXED: self.test_pairs - short_short - long_long}

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["short_band"] = list(self.short_band)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SynthConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = sorted(set(data) - known)
        if unknown:
            raise SynthConfigError(f"Unknown synth setting(s) {unknown}")
        return cls(**data)


@dataclass(frozen=True)
class SynthPair:
    members: Tuple[str, str]
    kind: str
    split: str
    topic: int
    interests: Tuple[str, ...]


@dataclass(frozen=True)
class SynthCorpus:
    """Generated documents with their pairing, judgments and query splits."""
    config: SynthConfig
    documents: Tuple[Tuple[str, str], ...]
    pairs: Tuple[SynthPair, ...]
    qrels: Qrels
    train_ids: Tuple[str, ...]
    test_ids: Tuple[str, ...]
    lengths: Dict[str, int] = field(default_factory=dict)

    @property
    def mean_length(self) -> float:
        return sum(self.lengths.values()) / len(self.lengths)

    @property
    def texts(self) -> Dict[str, str]:
        return dict(self.documents)

    def split_ids(self, split: str) -> Tuple[str, ...]:
        ids = {"train": self.train_ids, "test": self.test_ids}.get(split)
        if ids is None:
            raise SynthConfigError(f"Unknown split {split!r}; expected 'train' or 'test'")
        return ids

    def queries(self, split: str) -> List[Tuple[str, str]]:
        """``(query_id, text)`` records of a split; each query is the user's own profile."""
        texts = self.texts
        return [(user_id, texts[user_id]) for user_id in self.split_ids(split)]

    def split_qrels(self, split: str) -> Qrels:
        ids = set(self.split_ids(split))
        return Qrels({q: docs for q, docs in self.qrels.judgments.items() if q in ids})


def pseudo_words() -> List[str]:
    """Every available pseudo-word, in a fixed order."""
    return ["".join(letters) for letters in itertools.product(_ONSETS, _VOWELS, _ONSETS, _VOWELS, _FINALS)]


def _zipf_weights(size: int, exponent: float) -> np.ndarray:
    weights = np.arange(1, size + 1, dtype=np.float64) ** -exponent
    return weights / weights.sum()


def _pair_kinds(mix: Dict[str, int], rng: np.random.Generator) -> List[str]:
    kinds = [kind for kind in PAIR_KINDS for _ in range(mix[kind])]
    return [kinds[i] for i in rng.permutation(len(kinds))]


class _LengthSampler:
    """Draws short lengths from a band below the target and long lengths from a shifted exponential above it.

    The exponential's mean is solved so the expected corpus mean equals the
    target average length.
    """

    def __init__(self, cfg: SynthConfig, short_docs: int, long_docs: int, rng: np.random.Generator):
        if short_docs == 0 or long_docs == 0:
            raise SynthConfigError("the pair-length mix must produce both short and long documents")
        self.target = cfg.target_avgdl
        self.low = cfg.short_band[0] * self.target
        self.high = cfg.short_band[1] * self.target
        self.floor = cfg.long_floor * self.target
        self.jitter = cfg.length_jitter
        self.rng = rng

        short_mean = (self.low + self.high) / 2
        long_mean = (self.target * (short_docs + long_docs) - short_mean * short_docs) / long_docs
        self.excess = long_mean - self.floor
        if self.excess <= 0:
            raise SynthConfigError(f"a target average of {self.target} cannot be reached with "
                                   f"{short_docs} short and {long_docs} long documents")

    def base(self, long: bool) -> float:
        if long:
            return self.floor + self.rng.exponential(self.excess)
        return self.rng.uniform(self.low, self.high)

    def member(self, base: float, long: bool) -> int:
        value = base * math.exp(self.rng.normal(0.0, self.jitter)) if self.jitter else base
        if long:
            return int(math.ceil(max(value, self.floor)))
        return max(1, int(math.floor(min(max(value, self.low), self.high))))

    def pair(self, kind: str) -> Tuple[int, int]:
        if kind == MIXED:
            short, long = self.member(self.base(False), False), self.member(self.base(True), True)
            return (short, long) if self.rng.random() < 0.5 else (long, short)
        long = kind == LONG_LONG
        base = self.base(long)
        return self.member(base, long), self.member(base, long)


def generate_corpus(cfg: SynthConfig = SynthConfig()) -> SynthCorpus:
    """Generate a corpus, its both-direction judgments and the train/test query split.

    Deterministic given ``cfg.seed``.
    """
    rng = np.random.default_rng(cfg.seed)

    words = pseudo_words()
    order = rng.permutation(len(words))
    interest_vocab = [words[i] for i in order[:cfg.interest_vocab_size]]
    background_vocab = [words[i] for i in order[cfg.interest_vocab_size:
                                                  cfg.interest_vocab_size + cfg.background_vocab_size]]
    topic_pools = [interest_vocab[t * cfg.topic_terms:(t + 1) * cfg.topic_terms] for t in range(cfg.topics)]
    interest_p = _zipf_weights(cfg.topic_terms, cfg.interest_zipf)
    background_p = _zipf_weights(len(background_vocab), cfg.background_zipf)

    train_mix, test_mix = cfg.training_mix(), cfg.test_mix()
    kinds = [(kind, "train") for kind in _pair_kinds(train_mix, rng)]
    kinds += [(kind, "test") for kind in _pair_kinds(test_mix, rng)]
    topic_of = rng.permutation(len(kinds)) % cfg.topics

    short_docs = sum(2 * m[SHORT_SHORT] + m[MIXED] for m in (train_mix, test_mix))
    long_docs = sum(2 * m[LONG_LONG] + m[MIXED] for m in (train_mix, test_mix))
    sampler = _LengthSampler(cfg, short_docs, long_docs, rng)

    width = len(str(cfg.users))
    user_ids = [f"u{n:0{width}d}" for n in range(1, cfg.users + 1)]
    shuffled = [user_ids[i] for i in rng.permutation(cfg.users)]

    documents: Dict[str, str] = {}
    lengths: Dict[str, int] = {}
    pairs: List[SynthPair] = []
    for p, (kind, split) in enumerate(kinds):
        members = (shuffled[2 * p], shuffled[2 * p + 1])
        topic = int(topic_of[p])
        pool = topic_pools[topic]
        picked = rng.choice(len(pool), size=cfg.interest_terms_per_pair, replace=False, p=interest_p)
        interests = tuple(pool[i] for i in picked)
        for user_id, length in zip(members, sampler.pair(kind)):
            documents[user_id] = _compose(length, interests, background_vocab, background_p, cfg, rng)
            lengths[user_id] = length
        pairs.append(SynthPair(members, kind, split, topic, interests))

    corpus = _assemble(cfg, documents, lengths, pairs, user_ids)
    _check_length_mix(corpus)
    logger.info(f"Generated {len(corpus.documents)} synthetic documents in {len(pairs)} pairs "
                f"over {cfg.topics} topics (mean length {corpus.mean_length:.1f}, seed {cfg.seed})")
    return corpus


def _compose(length: int, interests: Sequence[str], background: Sequence[str], background_p: np.ndarray,
             cfg: SynthConfig, rng: np.random.Generator) -> str:
    interest_count = min(length, max(1, int(round(cfg.interest_share * length))))
    tokens = [interests[i] for i in rng.integers(0, len(interests), size=interest_count)]
    tokens += [background[i] for i in rng.choice(len(background), size=length - interest_count, p=background_p)]
    return " ".join(tokens[i] for i in rng.permutation(len(tokens)))


def _assemble(cfg: SynthConfig, documents: Dict[str, str], lengths: Dict[str, int],
              pairs: List[SynthPair], user_ids: List[str]) -> SynthCorpus:
    judgments = []
    for pair in pairs:
        a, b = pair.members
        judgments += [(a, b), (b, a)]
    train_ids = sorted(u for pair in pairs if pair.split == "train" for u in pair.members)
    test_ids = sorted(u for pair in pairs if pair.split == "test" for u in pair.members)
    return SynthCorpus(
        config=cfg,
        documents=tuple((user_id, documents[user_id]) for user_id in user_ids),
        pairs=tuple(pairs),
        qrels=Qrels.from_pairs(judgments),
        train_ids=tuple(train_ids),
        test_ids=tuple(test_ids),
        lengths=lengths,
    )


def pair_length_mix(corpus: SynthCorpus, split: Optional[str] = "train") -> Dict[str, int]:
    """Count pairs by kind against the realized mean length; ``split=None`` counts all pairs."""
    mean = corpus.mean_length
    counts = {kind: 0 for kind in PAIR_KINDS}
    for pair in corpus.pairs:
        if split is not None and pair.split != split:
            continue
        below = [corpus.lengths[u] < mean for u in pair.members]
        if all(below):
            counts[SHORT_SHORT] += 1
        elif not any(below):
            counts[LONG_LONG] += 1
        else:
            counts[MIXED] += 1
    return counts


def _check_length_mix(corpus: SynthCorpus) -> None:
    cfg = corpus.config
    mean = corpus.mean_length
    if abs(mean - cfg.target_avgdl) > 0.1 * cfg.target_avgdl:
        raise SynthConfigError(f"realized mean length {mean:.1f} is not within 10% of {cfg.target_avgdl}")
    for split, expected in (("train", cfg.training_mix()), ("test", cfg.test_mix())):
        realized = pair_length_mix(corpus, split)
        if realized != expected:
            raise SynthConfigError(f"{split} pair-length mix {realized} does not match {expected} "
                                   f"against the realized mean {mean:.1f}")
