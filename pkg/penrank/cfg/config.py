"""Configuration management for penrank."""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from penrank.corpus.tokenizer import DEFAULT_STOPWORDS, TokenizerConfig, load_stopwords
from penrank.errors import InputFileError, MalformedInputError, ParameterError
from penrank.paths import CONFIG_DIR, PROJECT_ROOT
from penrank.rankers.scorers import SCORERS
from penrank.synth.generator import SynthConfig
from penrank.tuning.grid import ParamGrid

logger = logging.getLogger(__name__)

CONFIG_FILENAME = "penrank.yaml"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def default_scorer_params() -> Dict[str, Dict[str, float]]:
    """Built-in parameter defaults per scorer, from each parameter block."""
    return {name: cls.params_type().to_mapping() for name, cls in SCORERS.items()}


class PenrankConfig:
    """Handles loading of penrank configuration.

    Every setting has a built-in default, so a missing default config file is
    not an error.
    """

    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        """Initialize configuration loader.

        Args:
            config_path: Path to penrank.yaml. Defaults to config/penrank.yaml, then ./penrank.yaml
        """
        explicit = config_path is not None
        if config_path is None:
            config_in_config_dir = CONFIG_DIR / CONFIG_FILENAME
            config_in_root = PROJECT_ROOT / CONFIG_FILENAME
            config_path = config_in_config_dir if config_in_config_dir.exists() else config_in_root

        self.config_path = Path(config_path)
        self._config: Dict[str, Any] = {}
        self._load_config(explicit)

    def _load_config(self, explicit: bool) -> None:
        if not self.config_path.exists():
            if explicit:
                raise InputFileError(f"Configuration file not found: {self.config_path}")
            logger.debug(f"No configuration file at {self.config_path}, using built-in defaults")
            return

        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                self._config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise MalformedInputError(f"Invalid YAML in configuration file {self.config_path}: {e}") from e
        except OSError as e:
            raise InputFileError(f"Cannot read configuration file {self.config_path}: {e}") from e

        if not isinstance(self._config, dict):
            raise MalformedInputError(f"Configuration file {self.config_path} must hold a mapping")
        logger.debug(f"Loaded configuration from {self.config_path}")

    def _get_nested(self, keys: str, default: Any = None) -> Any:
        """Get nested configuration value using dot notation."""
        value = self._config
        for key in keys.split("."):
            if not isinstance(value, dict) or key not in value:
                return default
            value = value[key]
        return value

    # Tokenizer
    @property
    def tokenizer_lowercase(self) -> bool:
        return bool(self._get_nested("tokenizer.lowercase", True))

    @property
    def tokenizer_stemming(self) -> bool:
        return bool(self._get_nested("tokenizer.stemming", True))

    @property
    def tokenizer_stopwords(self) -> frozenset:
        """Stopwords from ``tokenizer.stopwords_file``, else ``tokenizer.stopwords``, else the built-in list."""
        stopwords_file = self._get_nested("tokenizer.stopwords_file")
        if stopwords_file:
            path = Path(stopwords_file)
            if not path.is_absolute():
                path = self.config_path.parent / path
            return load_stopwords(path)
        stopwords = self._get_nested("tokenizer.stopwords")
        if stopwords is None:
            return DEFAULT_STOPWORDS
        if not isinstance(stopwords, list):
            raise MalformedInputError("tokenizer.stopwords must be a list of words")
        return frozenset(str(word) for word in stopwords)

    @property
    def tokenizer(self) -> TokenizerConfig:
        return TokenizerConfig(
            stopwords=self.tokenizer_stopwords,
            stemming=self.tokenizer_stemming,
            lowercase=self.tokenizer_lowercase,
        )

    # Retrieval
    @property
    def top_k(self) -> int:
        top_k = self._get_nested("retrieval.top_k", 1000)
        if isinstance(top_k, bool) or not isinstance(top_k, int) or top_k < 1:
            raise ParameterError(f"retrieval.top_k must be a positive integer, got {top_k!r}")
        return top_k

    # Scorers
    def scorer_params(self, name: str) -> Dict[str, float]:
        """Defaults for ``name`` with any ``scorers.<name>`` overrides applied."""
        defaults = default_scorer_params()
        if name not in defaults:
            raise ParameterError(f"Unknown scorer {name!r}; choose one of {sorted(defaults)}")
        overrides = self._get_nested(f"scorers.{name}", {}) or {}
        if not isinstance(overrides, dict):
            raise MalformedInputError(f"scorers.{name} must be a mapping of parameter values")
        return {**defaults[name], **overrides}

    # Tuning
    def tuning_grid(self, name: str) -> ParamGrid:
        values = self._get_nested(f"tuning.grids.{name}")
        if values is None:
            return ParamGrid.default(name)
        if not isinstance(values, dict):
            raise MalformedInputError(f"tuning.grids.{name} must map parameter names to value lists")
        return ParamGrid(name, values)

    # Synthetic corpus
    @property
    def synth(self) -> SynthConfig:
        values = self._get_nested("synth", {}) or {}
        if not isinstance(values, dict):
            raise MalformedInputError("synth must be a mapping of generator settings")
        return SynthConfig.from_dict(values)

    # Logging
    @property
    def log_level(self) -> str:
        level = str(self._get_nested("logging.level", "WARNING")).upper()
        if level not in LOG_LEVELS:
            raise ParameterError(f"logging.level must be one of {list(LOG_LEVELS)}, got {level!r}")
        return level

    @property
    def raw_config(self) -> Dict[str, Any]:
        return self._config


def load_config(config_path: Optional[Union[str, Path]] = None) -> PenrankConfig:
    return PenrankConfig(config_path)


def regenerate_template(output_path: Optional[Union[str, Path]] = None) -> Path:
    """Write the configuration template from the built-in defaults.

    Args:
        output_path: Optional custom output path. Defaults to config/templates/_template_penrank.yaml

    Returns:
        Path to the generated template file
    """
    from penrank.cfg.template_generator import TemplateGenerator
    return TemplateGenerator().regenerate_template(output_path)
