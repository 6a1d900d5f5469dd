"""Centralized path definitions for accessing project root directories.

All modules that need the config/ or output directories should use these
constants instead of building paths themselves.
"""

from pathlib import Path

# Get the project root directory (parent of the penrank package)
PROJECT_ROOT = Path(__file__).parent.parent

CONFIG_DIR = PROJECT_ROOT / "config"
OUTPUT_DIR = PROJECT_ROOT / "runs"

TEMPLATES_DIR = CONFIG_DIR / "templates"
