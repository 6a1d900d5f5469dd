"""Template generator for penrank configuration files.

The template is built from the defaults in code (parameter blocks, default
grids and ``SynthConfig``), so regenerating it after a default changes keeps
the two in step.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import click
import yaml

from penrank.cfg.config import default_scorer_params
from penrank.paths import TEMPLATES_DIR
from penrank.synth.generator import SynthConfig
from penrank.tuning.grid import DEFAULT_GRIDS

logger = logging.getLogger(__name__)

TEMPLATE_FILENAME = "_template_penrank.yaml"


class TemplateGenerator:
    """Generates the configuration template from built-in defaults."""

    def extract_defaults(self) -> Dict[str, Any]:
        return {
            "tokenizer": {"lowercase": True, "stemming": True, "stopwords_file": None},
            "retrieval": {"top_k": 1000},
            "scorers": default_scorer_params(),
            "tuning": {"grids": {name: {k: list(v) for k, v in grid.items()} for name, grid in DEFAULT_GRIDS.items()}},
            "synth": SynthConfig().to_dict(),
            "logging": {"level": "WARNING"},
        }

    @staticmethod
    def _section(comment: List[str], data: Dict[str, Any]) -> List[str]:
        lines = [f"# {line}" if line else "#" for line in comment]
        lines.extend(yaml.safe_dump(data, default_flow_style=None, sort_keys=False).splitlines())
        lines.append("")
        return lines

    def generate_template_content(self) -> str:
        defaults = self.extract_defaults()

        template_lines = [
            "# penrank Configuration Template",
            "# Copy this file to config/penrank.yaml and adjust; every key is optional",
            "",
        ]
        template_lines += self._section(
            ["Text preprocessing, applied identically to documents and queries.",
             "stopwords_file: one word per line, replaces the built-in English list.",
             "Alternatively set stopwords: [word, ...] inline."],
            {"tokenizer": defaults["tokenizer"]},
        )
        template_lines += self._section(
            ["Number of documents kept per query"],
            {"retrieval": defaults["retrieval"]},
        )
        template_lines += self._section(
            ["Default parameters per ranking function (overridden by --params)"],
            {"scorers": defaults["scorers"]},
        )
        template_lines += self._section(
            ["Grid-search space per ranking function (overridden by --grid).",
             "Points are tried in listed order; ties keep the earliest point."],
            {"tuning": defaults["tuning"]},
        )
        template_lines += self._section(
            ["Synthetic penpal corpus. other_pairs: null means the remaining training pairs."],
            {"synth": defaults["synth"]},
        )
        template_lines += self._section(
            ["DEBUG, INFO, WARNING, ERROR or CRITICAL (overridden by --log-level)"],
            {"logging": defaults["logging"]},
        )
        return "\n".join(template_lines)

    def regenerate_template(self, output_path: Optional[Union[str, Path]] = None) -> Path:
        output_path = Path(output_path) if output_path is not None else TEMPLATES_DIR / TEMPLATE_FILENAME
        output_path.parent.mkdir(parents=True, exist_ok=True)

        with open(output_path, "w", encoding="utf-8") as f:
            f.write(self.generate_template_content())

        logger.info(f"Template regenerated at {output_path}")
        click.echo(f"✅ Template regenerated successfully: {output_path}", err=True)
        return output_path
