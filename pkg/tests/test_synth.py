"""Synthetic penpal corpus generation."""

import itertools

import pytest
import yaml

from penrank.corpus.index import build_index
from penrank.corpus.readers import read_records
from penrank.corpus.tokenizer import TokenizerConfig, tokenize
from penrank.errors import SynthConfigError
from penrank.evaluation import read_qrels
from penrank.synth import (
    LONG_LONG,
    MIXED,
    SHORT_SHORT,
    SynthConfig,
    generate_corpus,
    pair_length_mix,
    pseudo_words,
    write_corpus_bundle,
)


SMALL = dict(users=200, pairs=100, train_pairs=80, test_pairs=20, short_short_pairs=20, long_long_pairs=40)


@pytest.fixture(scope="module")
def corpus():
    return generate_corpus(SynthConfig(seed=1))


class TestSynthConfig:

    def test_default_mix(self):
        cfg = SynthConfig()
        assert cfg.training_mix() == {SHORT_SHORT: 62, LONG_LONG: 131, MIXED: 59}
        assert cfg.test_mix() == {SHORT_SHORT: 16, LONG_LONG: 33, MIXED: 14}

    @pytest.mark.parametrize("kwargs", [
        {"short_short_pairs": 300},
        {"users": 631},
        {"train_pairs": 250},
        {"other_pairs": 10},
        {"target_avgdl": 0.0},
        {"short_band": (0.9, 0.3)},
        {"interest_share": 1.0},
        {"interest_terms_per_pair": 0},
        {"interest_terms_per_pair": 25},
        {"pairs_per_topic": 0},
        {"interest_vocab_size": 500},
        {"background_vocab_size": 30000},
    ])
    def test_infeasible_configs(self, kwargs):
        with pytest.raises(SynthConfigError):
            SynthConfig(**kwargs)

    def test_dict_round_trip(self):
        cfg = SynthConfig(seed=7, target_avgdl=90.0)
        assert SynthConfig.from_dict(cfg.to_dict()) == cfg

    def test_unknown_key(self):
        with pytest.raises(SynthConfigError):
            SynthConfig.from_dict({"sead": 3})

    def test_unreachable_average_fails(self):
        # almost every document long pulls the long mean below the long floor
        cfg = SynthConfig(short_short_pairs=0, long_long_pairs=251)
        with pytest.raises(SynthConfigError):
            generate_corpus(cfg)


class TestGeneratedCorpus:

    def test_counts(self, corpus):
        assert len(corpus.documents) == 630
        assert len(corpus.pairs) == 315
        assert len(corpus.train_ids) == 504
        assert len(corpus.test_ids) == 126
        assert sum(len(docs) for docs in corpus.qrels.judgments.values()) == 630
        assert set(corpus.train_ids).isdisjoint(corpus.test_ids)

    def test_judgments_are_symmetric_partners(self, corpus):
        for pair in corpus.pairs:
            a, b = pair.members
            assert corpus.qrels.relevant(a) == frozenset({b})
            assert corpus.qrels.relevant(b) == frozenset({a})

    def test_pairs_stay_within_one_split(self, corpus):
        train = set(corpus.train_ids)
        for pair in corpus.pairs:
            assert (pair.members[0] in train) == (pair.members[1] in train) == (pair.split == "train")

    def test_mean_length_near_target(self, corpus):
        assert abs(corpus.mean_length - 131.0) <= 13.1

    def test_length_mix_is_exact(self, corpus):
        assert pair_length_mix(corpus, "train") == {SHORT_SHORT: 62, LONG_LONG: 131, MIXED: 59}
        assert pair_length_mix(corpus, "test") == {SHORT_SHORT: 16, LONG_LONG: 33, MIXED: 14}

    def test_indexed_length_is_word_count(self, corpus):
        index = build_index(corpus.documents, TokenizerConfig())
        for user_id, length in corpus.lengths.items():
            assert index.document_length(user_id) == length
        assert index.stats.avgdl == pytest.approx(corpus.mean_length)

    def test_partners_share_more_terms_than_strangers(self, corpus):
        vocab = {user_id: set(text.split()) for user_id, text in corpus.documents}
        partner = {a: b for pair in corpus.pairs for a, b in (pair.members, pair.members[::-1])}

        def jaccard(a, b):
            return len(vocab[a] & vocab[b]) / len(vocab[a] | vocab[b])

        stranger_total, stranger_count = 0.0, 0
        for a, b in itertools.combinations(sorted(vocab), 2):
            if partner[a] != b:
                stranger_total += jaccard(a, b)
                stranger_count += 1
        stranger_mean = stranger_total / stranger_count

        for pair in corpus.pairs:
            assert jaccard(*pair.members) > stranger_mean

    def test_topics_partition_the_pairs(self, corpus):
        assert corpus.config.topics == 45
        pools = {}
        for pair in corpus.pairs:
            pools.setdefault(pair.topic, []).append(set(pair.interests))
        assert sorted(pools) == list(range(45))
        assert all(len(members) == 7 for members in pools.values())

        unions = [set().union(*members) for members in pools.values()]
        assert all(len(words) <= 24 for words in unions)
        for first, second in itertools.combinations(unions, 2):
            assert first.isdisjoint(second)

    def test_same_kind_partners_have_similar_lengths(self, corpus):
        for pair in corpus.pairs:
            if pair.kind == MIXED:
                continue
            short, long = sorted(corpus.lengths[u] for u in pair.members)
            assert long / short < 1.4

    def test_queries_are_own_profiles(self, corpus):
        texts = corpus.texts
        for user_id, text in corpus.queries("test"):
            assert texts[user_id] == text
        with pytest.raises(SynthConfigError):
            corpus.queries("dev")

    def test_split_judgments(self, corpus):
        assert set(corpus.split_qrels("test").query_ids) == set(corpus.test_ids)

    def test_other_seed_differs(self, corpus):
        assert generate_corpus(SynthConfig(seed=2)).documents != corpus.documents

    def test_small_corpus(self):
        cfg = SynthConfig(**SMALL, seed=5)
        small = generate_corpus(cfg)
        assert len(small.documents) == 200
        assert pair_length_mix(small, "train") == cfg.training_mix()


class TestPseudoWords:

    def test_default_tokenizer_keeps_every_word(self):
        words = pseudo_words()
        assert len(words) == len(set(words)) == 11 * 5 * 11 * 5 * 9
        assert tokenize(" ".join(words), TokenizerConfig()) == words


class TestBundle:

    def test_same_seed_gives_identical_files(self, tmp_path):
        cfg = SynthConfig(**SMALL, seed=11)
        first = write_corpus_bundle(generate_corpus(cfg), tmp_path / "a")
        second = write_corpus_bundle(generate_corpus(cfg), tmp_path / "b")
        assert set(first) == {"corpus", "train_queries", "test_queries", "qrels", "manifest"}
        for name, path in first.items():
            assert path.read_bytes() == second[name].read_bytes()

    def test_bundle_contents(self, corpus, tmp_path):
        paths = write_corpus_bundle(corpus, tmp_path)
        assert len(read_records(paths["corpus"])) == 630
        assert len(read_records(paths["train_queries"])) == 504
        assert read_qrels(paths["qrels"]) == corpus.qrels

        manifest = yaml.safe_load(paths["manifest"].read_text(encoding="utf-8"))
        assert manifest["seed"] == 1
        assert manifest["documents"] == 630
        assert manifest["pair_length_mix"]["train"] == {SHORT_SHORT: 62, LONG_LONG: 131, MIXED: 59}
        assert SynthConfig.from_dict(manifest["config"]) == corpus.config
