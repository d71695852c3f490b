# core/config_loader.py
"""
Configuration Loader

Loads `config.ini` (and environment overrides) into AppState for the Koszul
Toolkit: default field and order, degree bounds, logging, report and
experiment settings.

Features:
- INI parsing without interpolation
- Environment variable overrides (upper-case key names)
- Casting with a warning and fallback to the coded default
- Validation entrypoint used before any computation runs

Project: Koszul Toolkit
License: MIT
"""

import configparser
import logging
import os
from typing import Any, Callable, List, Optional, Tuple

from core.app_state import AppState
from core.constants import (
    DEFAULT_FIELD,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_N,
    DEFAULT_ORDER,
    DEFAULT_WORKERS,
    LOG_FILE_NAME,
)

logger = logging.getLogger(__name__)


def _profile(text: str) -> List[int]:
    values = [int(p) for p in text.split(",") if p.strip()]
    if not values:
        raise ValueError("empty profile")
    return values


def _flag(text: str) -> bool:
    return text.lower() in ('true', '1', 'yes', 'on')


# (AppState attribute, key, section, converter, default); the key doubles as
# the environment variable name.
SETTINGS: List[Tuple[str, str, str, Callable[[str], Any], Any]] = [
    ("field", "FIELD", "GENERAL", str, DEFAULT_FIELD),
    ("order", "ORDER", "GENERAL", str.lower, DEFAULT_ORDER),
    ("workers", "WORKERS", "GENERAL", int, DEFAULT_WORKERS),
    ("max_degree", "MAX_DEGREE", "BOUNDS", int, DEFAULT_MAX_DEGREE),
    ("max_n", "MAX_N", "BOUNDS", int, DEFAULT_MAX_N),
    ("log_level", "LOG_LEVEL", "LOGGING", str.upper, "INFO"),
    ("log_to_file", "LOG_TO_FILE", "LOGGING", _flag, False),
    ("log_file", "LOG_FILE", "LOGGING", str, LOG_FILE_NAME),
    ("output_format", "FORMAT", "REPORT", str.lower, "json"),
    ("strict", "STRICT", "REPORT", _flag, False),
    ("run_oracle", "RUN_ORACLE", "REPORT", _flag, True),
    ("experiment_vertices", "VERTICES", "EXPERIMENT", int, 1),
    ("experiment_arrows", "ARROWS", "EXPERIMENT", int, 2),
    ("experiment_profile", "PROFILE", "EXPERIMENT", _profile, [2, 3]),
    ("experiment_relations_per_degree", "RELATIONS_PER_DEGREE", "EXPERIMENT", int, 2),
    ("experiment_count", "COUNT", "EXPERIMENT", int, 10),
    ("experiment_seed", "SEED", "EXPERIMENT", int, 1),
    ("experiment_perturb", "PERTURB", "EXPERIMENT", _flag, False),
]


def _raw_value(config: configparser.ConfigParser, key: str, section: str) -> Optional[str]:
    """Environment first, then the ini file; inline `;` comments and quotes removed."""
    raw = os.environ.get(key)
    if raw is None and config.has_option(section, key):
        raw = config.get(section, key)
    if raw is None:
        return None
    return raw.split(';')[0].strip().strip("'\"")


def load_configuration(config_path: str, app_state: AppState):
    """
    Populates AppState from `config.ini` and the environment.

    Precedence per setting: environment variable (named like the key, e.g.
    `MAX_DEGREE`), then the ini file, then the coded default. Command-line
    flags are applied afterwards by main.py and win over all three. A value
    that does not convert is logged and replaced by its default.
    """
    config = configparser.ConfigParser(interpolation=None)
    if config_path and os.path.exists(config_path):
        config.read(config_path, encoding='utf-8')
        logger.info(f"Read configuration from {config_path}")
    else:
        logger.debug(f"No config file at {config_path}; using defaults and environment variables.")

    app_state.config = config
    app_state.config_path = config_path

    for attr, key, section, convert, default in SETTINGS:
        raw = _raw_value(config, key, section)
        value = default
        if raw is not None:
            try:
                value = convert(raw)
            except ValueError:
                logger.warning(f"[{section}] {key} = '{raw}' is not valid. Using default: {default}")
        setattr(app_state, attr, value)
    logger.debug("Configuration loading complete.")


def validate_core_config(app_state: AppState):
    """
    Validates the resolved settings before any computation runs.

    Raises:
        ConfigValidationError: listing every problem found.
    """
    from core.config_validator import validate_or_raise
    validate_or_raise(app_state)
