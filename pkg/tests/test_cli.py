"""Command-line interface, driven through click's test runner."""

import json

import pytest
from click.testing import CliRunner

from penrank.corpus.readers import write_records
from penrank.main import cli

from corpora import TWO_DOCS


def data_lines(output, fields):
    """Tab-separated result lines, skipping the emoji status lines."""
    return [line.split("\t") for line in output.splitlines() if len(line.split("\t")) == fields]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def workspace(tmp_path, runner):
    corpus = write_records(TWO_DOCS, tmp_path / "corpus.jsonl")
    index = tmp_path / "index.jsonl"
    result = runner.invoke(cli, ["index", "--corpus", str(corpus), "--out", str(index)])
    assert result.exit_code == 0, result.output

    queries = write_records([("q1", "dog")], tmp_path / "queries.jsonl")
    qrels = tmp_path / "qrels.tsv"
    qrels.write_text("q1\td2\t1\n", encoding="utf-8")
    return {"dir": tmp_path, "index": str(index), "queries": str(queries), "qrels": str(qrels)}


class TestHelp:

    def test_group_help_lists_commands_and_exit_codes(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("index", "search", "eval", "tune", "curve", "verify", "synth", "regenerate"):
            assert name in result.output
        assert "Exit codes" in result.output


class TestSearch:

    def test_ranked_lines(self, runner, workspace):
        result = runner.invoke(cli, ["search", "--index", workspace["index"], "--query", "dog",
                                     "--scorer", "bm25"])
        assert result.exit_code == 0, result.output
        lines = data_lines(result.output, 4)
        assert [(line[1], line[2]) for line in lines] == [("d2", "1"), ("d1", "2")]
        assert all(line[0] == "query" for line in lines)

    def test_exclusion_and_top_k(self, runner, workspace):
        result = runner.invoke(cli, ["search", "--index", workspace["index"], "--query", "dog",
                                     "--exclude", "d2", "--query-id", "u7", "--top-k", "5"])
        assert result.exit_code == 0, result.output
        assert [line[:3] for line in data_lines(result.output, 4)] == [["u7", "d1", "1"]]

    def test_unknown_scorer_is_a_usage_error(self, runner, workspace):
        result = runner.invoke(cli, ["search", "--index", workspace["index"], "--query", "dog",
                                     "--scorer", "tfidf"])
        assert result.exit_code == 2

    def test_missing_index(self, runner, tmp_path):
        result = runner.invoke(cli, ["search", "--index", str(tmp_path / "none.jsonl"), "--query", "dog"])
        assert result.exit_code == 3
        assert "❌" in result.output

    def test_bad_params_json(self, runner, workspace):
        result = runner.invoke(cli, ["search", "--index", workspace["index"], "--query", "dog",
                                     "--scorer", "bm25", "--params", "{k: 1"])
        assert result.exit_code == 4

    def test_params_out_of_bounds(self, runner, workspace):
        result = runner.invoke(cli, ["search", "--index", workspace["index"], "--query", "dog",
                                     "--scorer", "bm25", "--params", '{"b": 2}'])
        assert result.exit_code == 5


class TestIndex:

    def test_missing_corpus(self, runner, tmp_path):
        result = runner.invoke(cli, ["index", "--corpus", str(tmp_path / "none.jsonl"),
                                     "--out", str(tmp_path / "i.jsonl")])
        assert result.exit_code == 3

    def test_duplicate_ids(self, runner, tmp_path):
        corpus = write_records([("a", "x"), ("a", "y")], tmp_path / "dup.jsonl")
        result = runner.invoke(cli, ["index", "--corpus", str(corpus), "--out", str(tmp_path / "i.jsonl")])
        assert result.exit_code == 6


class TestEval:

    def test_mrr_line_and_run_file(self, runner, workspace):
        run_path = workspace["dir"] / "run.tsv"
        result = runner.invoke(cli, ["eval", "--index", workspace["index"], "--queries", workspace["queries"],
                                     "--qrels", workspace["qrels"], "--scorer", "bm25", "--out", str(run_path)])
        assert result.exit_code == 0, result.output
        assert ["MRR", "1.000000"] in data_lines(result.output, 2)

        rescored = runner.invoke(cli, ["eval", "--qrels", workspace["qrels"], "--run", str(run_path)])
        assert rescored.exit_code == 0, rescored.output
        assert ["MRR", "1.000000"] in data_lines(rescored.output, 2)

    def test_rescoring_keeps_queries_without_results(self, runner, workspace):
        queries = write_records([("q1", "dog"), ("q2", "fish")], workspace["dir"] / "two.jsonl")
        qrels = workspace["dir"] / "two.tsv"
        qrels.write_text("q1\td2\t1\nq2\td1\t1\n", encoding="utf-8")
        run_path = workspace["dir"] / "run.tsv"

        ranked = runner.invoke(cli, ["eval", "--index", workspace["index"], "--queries", str(queries),
                                     "--qrels", str(qrels), "--scorer", "bm25", "--out", str(run_path)])
        assert ranked.exit_code == 0, ranked.output
        assert ["MRR", "0.500000"] in data_lines(ranked.output, 2)
        assert not any(line.startswith("q2\t") for line in run_path.read_text(encoding="utf-8").splitlines())

        for extra in (["--queries", str(queries)], []):
            rescored = runner.invoke(cli, ["eval", "--qrels", str(qrels), "--run", str(run_path)] + extra)
            assert rescored.exit_code == 0, rescored.output
            assert ["MRR", "0.500000"] in data_lines(rescored.output, 2)

    def test_needs_index_without_run(self, runner, workspace):
        result = runner.invoke(cli, ["eval", "--qrels", workspace["qrels"], "--queries", workspace["queries"]])
        assert result.exit_code == 2

    def test_query_missing_from_qrels(self, runner, workspace):
        other = workspace["dir"] / "other.tsv"
        other.write_text("q9\td1\t1\n", encoding="utf-8")
        result = runner.invoke(cli, ["eval", "--index", workspace["index"], "--queries", workspace["queries"],
                                     "--qrels", str(other)])
        assert result.exit_code == 6


class TestTune:

    def test_report_and_test_split(self, runner, workspace):
        grid = workspace["dir"] / "grid.json"
        grid.write_text(json.dumps({"k": [1.2], "b": [0.0, 1.0]}), encoding="utf-8")
        report = workspace["dir"] / "tune.tsv"
        result = runner.invoke(cli, ["tune", "--index", workspace["index"], "--queries", workspace["queries"],
                                     "--qrels", workspace["qrels"], "--scorer", "bm25", "--grid", str(grid),
                                     "--test-queries", workspace["queries"], "--out", str(report)])
        assert result.exit_code == 0, result.output
        assert "best\tk=1.2\tb=1\tmrr=1.000000\ttie_policy=earliest-grid-order" in result.output
        assert "test\tk=1.2, b=1\tmrr=1.000000" in result.output
        assert report.read_text(encoding="utf-8").splitlines()[0] == "k\tb\tmrr"

    def test_inline_grid(self, runner, workspace):
        result = runner.invoke(cli, ["tune", "--index", workspace["index"], "--queries", workspace["queries"],
                                     "--qrels", workspace["qrels"], "--scorer", "bm25",
                                     "--grid", '{"k": [1.2], "b": [0.0, 1.0]}',
                                     "--out", str(workspace["dir"] / "tune.tsv")])
        assert result.exit_code == 0, result.output
        assert "best\tk=1.2\tb=1\tmrr=1.000000\ttie_policy=earliest-grid-order" in result.output

    def test_malformed_inline_grid(self, runner, workspace):
        result = runner.invoke(cli, ["tune", "--index", workspace["index"], "--queries", workspace["queries"],
                                     "--qrels", workspace["qrels"], "--scorer", "bm25", "--grid", "{k: [1.2]",
                                     "--out", str(workspace["dir"] / "tune.tsv")])
        assert result.exit_code == 4

    def test_invalid_grid_point(self, runner, workspace):
        grid = workspace["dir"] / "grid.json"
        grid.write_text(json.dumps({"c": [0.5, 1.5]}), encoding="utf-8")
        result = runner.invoke(cli, ["tune", "--index", workspace["index"], "--queries", workspace["queries"],
                                     "--qrels", workspace["qrels"], "--scorer", "bm25-lengthsim",
                                     "--grid", str(grid), "--out", str(workspace["dir"] / "t.tsv")])
        assert result.exit_code == 5
        assert "c=1.5" in result.output


class TestCurveAndVerify:

    def test_curve_to_stdout(self, runner):
        result = runner.invoke(cli, ["curve", "--y", "100", "--x-min", "0", "--x-max", "200", "--n", "5"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert "x,h" in lines
        assert "100.0,1.0" in lines

    def test_curve_to_file(self, runner, tmp_path):
        out = tmp_path / "h.csv"
        result = runner.invoke(cli, ["curve", "--params", '{"c": 0.3}', "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert len(out.read_text(encoding="utf-8").splitlines()) == 302

    def test_verify_defaults_pass(self, runner):
        result = runner.invoke(cli, ["verify"])
        assert result.exit_code == 0, result.output
        assert len([line for line in result.output.splitlines() if line.startswith("PASS\t")]) == 6

    def test_verify_failure_exit_code(self, runner):
        result = runner.invoke(cli, ["verify", "--params", '{"B1": 0.001}'])
        assert result.exit_code == 7
        assert any(line.startswith("FAIL\tleft bound") for line in result.output.splitlines())


class TestSynthAndConfig:

    def test_synth_bundle(self, runner, tmp_path):
        config = tmp_path / "penrank.yaml"
        config.write_text("synth:\n  users: 200\n  pairs: 100\n  train_pairs: 80\n  test_pairs: 20\n"
                          "  short_short_pairs: 20\n  long_long_pairs: 40\n", encoding="utf-8")
        out = tmp_path / "synth"
        result = runner.invoke(cli, ["--config", str(config), "synth", "--seed", "3", "--out", str(out)])
        assert result.exit_code == 0, result.output
        for name in ("corpus.jsonl", "train_queries.jsonl", "test_queries.jsonl", "qrels.tsv", "manifest.yaml"):
            assert (out / name).is_file()

    def test_missing_config_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["--config", str(tmp_path / "none.yaml"), "verify"])
        assert result.exit_code == 3

    def test_regenerate_template(self, runner, tmp_path):
        out = tmp_path / "template.yaml"
        result = runner.invoke(cli, ["config", "regenerate", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.read_text(encoding="utf-8").startswith("# penrank Configuration Template")
