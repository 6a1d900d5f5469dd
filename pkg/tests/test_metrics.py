"""MRR and the judgment/run file formats."""

import math

import pytest

from penrank.errors import InputFileError, MalformedInputError, QrelsError
from penrank.evaluation import mrr, read_qrels, read_run, reciprocal_rank, write_qrels
from penrank.models import Qrels, RunResult, ScoredList


def brute_force_mrr(run, qrels):
    reciprocals = []
    for scored in run:
        relevant = qrels.relevant(scored.query_id)
        for position in range(len(scored.entries)):
            if scored.entries[position][0] in relevant:
                reciprocals.append(1.0 / (position + 1))
                break
    return math.fsum(reciprocals) / len(run.results)


def scored(query_id, doc_ids):
    return ScoredList(query_id, tuple((d, float(len(doc_ids) - i)) for i, d in enumerate(doc_ids)))


def random_run(rng, n_queries, n_docs=15):
    docs = [f"d{i}" for i in range(n_docs)]
    results, pairs = [], []
    for i in range(n_queries):
        query_id = f"q{i}"
        retrieved = [str(d) for d in rng.permutation(docs)[:int(rng.integers(0, n_docs + 1))]]
        results.append(scored(query_id, retrieved))
        for doc_id in rng.choice(docs, size=int(rng.integers(1, 4)), replace=False):
            pairs.append((query_id, str(doc_id)))
    return RunResult(tuple(results)), Qrels.from_pairs(pairs)


class TestMrr:

    def test_worked_example(self):
        run = RunResult((scored("a", ["r"]), scored("b", ["x", "r"]), scored("c", ["x", "y", "z", "r"])))
        qrels = Qrels.from_pairs([("a", "r"), ("b", "r"), ("c", "r")])
        assert abs(mrr(run, qrels) - 0.5833333333333334) < 1e-10

    def test_never_retrieved_contributes_zero(self):
        run = RunResult((scored("a", ["x", "y"]), scored("b", ["r"])))
        qrels = Qrels.from_pairs([("a", "r"), ("b", "r")])
        assert mrr(run, qrels) == 0.5

    def test_first_of_several_relevant_counts(self):
        run = RunResult((scored("a", ["x", "r2", "r1"]),))
        assert mrr(run, Qrels.from_pairs([("a", "r1"), ("a", "r2")])) == 0.5

    def test_perfect_run(self):
        run = RunResult((scored("a", ["r"]), scored("b", ["s", "t"])))
        assert mrr(run, Qrels.from_pairs([("a", "r"), ("b", "s")])) == 1.0

    def test_empty_run(self):
        assert mrr(RunResult(), Qrels()) == 0.0

    def test_query_without_judgments(self):
        run = RunResult((scored("a", ["r"]),))
        with pytest.raises(QrelsError):
            mrr(run, Qrels.from_pairs([("b", "r")]))

    def test_reciprocal_rank_sentinel(self):
        assert reciprocal_rank(0) == 0.0
        assert reciprocal_rank(4) == 0.25

    def test_matches_brute_force_on_random_runs(self, rng):
        for _ in range(1000):
            run, qrels = random_run(rng, int(rng.integers(1, 8)))
            value = mrr(run, qrels)
            assert value == brute_force_mrr(run, qrels)
            assert 0.0 <= value <= 1.0

    def test_query_order_does_not_matter(self, rng):
        for _ in range(50):
            run, qrels = random_run(rng, 6)
            shuffled = RunResult(tuple(run.results[i] for i in rng.permutation(len(run))))
            assert mrr(shuffled, qrels) == mrr(run, qrels)


class TestQrelsFiles:

    def test_zero_relevance_lines_ignored(self, tmp_path):
        path = tmp_path / "qrels.tsv"
        path.write_text("q1\td1\t1\nq1\td2\t0\nq2\td2\t0\n\nq3\td3\t1\n", encoding="utf-8")
        qrels = read_qrels(path)
        assert qrels.query_ids == ["q1", "q3"]
        assert qrels.relevant("q1") == frozenset({"d1"})
        assert "q2" not in qrels

    @pytest.mark.parametrize("content", ["q1 d1 1\n", "q1\td1\t2\n", "q1\td1\n", "q1\td1\t1\textra\n"])
    def test_malformed_lines(self, tmp_path, content):
        path = tmp_path / "qrels.tsv"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(MalformedInputError):
            read_qrels(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputFileError):
            read_qrels(tmp_path / "absent.tsv")

    def test_write_then_read(self, tmp_path):
        qrels = Qrels.from_pairs([("u2", "u1"), ("u1", "u2"), ("u1", "u3")])
        path = write_qrels(qrels, tmp_path / "qrels.tsv")
        assert path.read_text(encoding="utf-8").splitlines() == ["u1\tu2\t1", "u1\tu3\t1", "u2\tu1\t1"]
        assert read_qrels(path) == qrels

    def test_empty_judgment_set_rejected(self):
        with pytest.raises(QrelsError):
            Qrels({"q": frozenset()})


class TestRunFiles:

    def test_rows_sorted_by_rank(self, tmp_path):
        path = tmp_path / "run.tsv"
        path.write_text("q1\tb\t2\t0.5\nq1\ta\t1\t0.9\nq0\tc\t1\t1.0\n", encoding="utf-8")
        run = read_run(path)
        assert [s.query_id for s in run] == ["q1", "q0"]
        assert run.results[0].entries == (("a", 0.9), ("b", 0.5))

    @pytest.mark.parametrize("content", ["q1\ta\t1\n", "q1\ta\tfirst\t0.5\n", "q1\ta\t1\tnan?\n"])
    def test_malformed_lines(self, tmp_path, content):
        path = tmp_path / "run.tsv"
        path.write_text(content, encoding="utf-8")
        with pytest.raises(MalformedInputError):
            read_run(path)

    def test_queries_without_results_count_as_not_retrieved(self, tmp_path):
        path = tmp_path / "run.tsv"
        path.write_text("q1\td2\t1\t0.44\nq1\td1\t2\t0.37\n", encoding="utf-8")
        qrels = Qrels.from_pairs([("q1", "d2"), ("q2", "d1")])
        run = read_run(path)
        assert mrr(run, qrels) == 1.0

        covered = run.covering(["q1", "q2", "q2"])
        assert [s.query_id for s in covered] == ["q1", "q2"]
        assert covered.results[1].entries == ()
        assert mrr(covered, qrels) == 0.5
        assert mrr(run.covering(qrels.query_ids), qrels) == 0.5

    def test_covering_a_complete_run_changes_nothing(self):
        run = RunResult((scored("q1", ["d1"]),))
        assert run.covering(["q1"]) is run
