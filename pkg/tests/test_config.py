"""YAML configuration and its template."""

import pytest
import yaml

from penrank.cfg import PenrankConfig, TemplateGenerator, default_scorer_params, load_config
from penrank.corpus.tokenizer import TokenizerConfig
from penrank.errors import InputFileError, MalformedInputError, ParameterError, SynthConfigError
from penrank.paths import TEMPLATES_DIR
from penrank.synth import SynthConfig
from penrank.tuning import ParamGrid


def write_config(tmp_path, content):
    path = tmp_path / "penrank.yaml"
    path.write_text(content, encoding="utf-8")
    return path


class TestPenrankConfig:

    def test_empty_file_gives_defaults(self, tmp_path):
        config = PenrankConfig(write_config(tmp_path, ""))
        assert config.tokenizer == TokenizerConfig()
        assert config.top_k == 1000
        assert config.log_level == "WARNING"
        assert config.scorer_params("bm25") == {"k": 1.2, "b": 0.75}
        assert config.scorer_params("bm25-lengthsim") == {"k": 2.8, "b1": 2.9, "b2": 3.7, "B1": 1.0, "B2": 1.0, "c": 0.5}
        assert config.synth == SynthConfig()
        assert config.tuning_grid("pl2") == ParamGrid.default("pl2")

    def test_explicit_missing_file(self, tmp_path):
        with pytest.raises(InputFileError):
            load_config(tmp_path / "absent.yaml")

    @pytest.mark.parametrize("content", ["tokenizer: [unclosed", "- just\n- a list\n"])
    def test_malformed_file(self, tmp_path, content):
        with pytest.raises(MalformedInputError):
            PenrankConfig(write_config(tmp_path, content))

    def test_overrides(self, tmp_path):
        config = PenrankConfig(write_config(tmp_path, """
tokenizer:
  stemming: false
  stopwords: [the, a]
retrieval:
  top_k: 50
scorers:
  bm25: {b: 0.4}
tuning:
  grids:
    dirichlet:
      mu: [10, 20]
synth:
  seed: 9
logging:
  level: debug
"""))
        assert config.tokenizer == TokenizerConfig(stopwords={"the", "a"}, stemming=False)
        assert config.top_k == 50
        assert config.scorer_params("bm25") == {"k": 1.2, "b": 0.4}
        assert config.tuning_grid("dirichlet").to_dict() == {"mu": [10, 20]}
        assert config.synth.seed == 9
        assert config.log_level == "DEBUG"

    def test_stopwords_file_relative_to_config(self, tmp_path):
        (tmp_path / "stop.txt").write_text("alpha\nbeta\n", encoding="utf-8")
        config = PenrankConfig(write_config(tmp_path, "tokenizer:\n  stopwords_file: stop.txt\n"))
        assert config.tokenizer_stopwords == frozenset({"alpha", "beta"})

    @pytest.mark.parametrize("content, read, error", [
        ("retrieval:\n  top_k: 0\n", lambda c: c.top_k, ParameterError),
        ("retrieval:\n  top_k: many\n", lambda c: c.top_k, ParameterError),
        ("logging:\n  level: LOUD\n", lambda c: c.log_level, ParameterError),
        ("synth:\n  colour: red\n", lambda c: c.synth, SynthConfigError),
        ("scorers:\n  bm25: 3\n", lambda c: c.scorer_params("bm25"), MalformedInputError),
        ("tuning:\n  grids:\n    bm25:\n      b: [2.0]\n", lambda c: c.tuning_grid("bm25"), ParameterError),
    ])
    def test_invalid_values(self, tmp_path, content, read, error):
        config = PenrankConfig(write_config(tmp_path, content))
        with pytest.raises(error):
            read(config)

    def test_unknown_scorer(self, tmp_path):
        with pytest.raises(ParameterError):
            PenrankConfig(write_config(tmp_path, "")).scorer_params("tfidf")


class TestTemplate:

    def test_regenerated_template_loads_to_defaults(self, tmp_path, capsys):
        path = TemplateGenerator().regenerate_template(tmp_path / "templates" / "penrank.yaml")
        assert "Template regenerated" in capsys.readouterr().err

        config = PenrankConfig(path)
        assert config.tokenizer == TokenizerConfig()
        assert config.top_k == 1000
        assert config.synth == SynthConfig()
        for name, params in default_scorer_params().items():
            assert config.scorer_params(name) == params
            assert config.tuning_grid(name) == ParamGrid.default(name)

    def test_checked_in_template_is_current(self):
        checked_in = yaml.safe_load((TEMPLATES_DIR / "_template_penrank.yaml").read_text(encoding="utf-8"))
        assert checked_in == yaml.safe_load(TemplateGenerator().generate_template_content())
