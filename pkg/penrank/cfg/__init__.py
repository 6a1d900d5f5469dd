"""Configuration management for penrank.

This module provides configuration loading and template generation functionality.
"""

from penrank.cfg.config import PenrankConfig, default_scorer_params, load_config, regenerate_template
from penrank.cfg.template_generator import TemplateGenerator

__all__ = [
    "PenrankConfig",
    "default_scorer_params",
    "load_config",
    "regenerate_template",
    "TemplateGenerator",
]
