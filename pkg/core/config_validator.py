# core/config_validator.py
"""
Configuration Validator

Validation of the resolved run settings of the Koszul Toolkit. Checks that the
field descriptor and order name resolve to catalogued plugins and that bounds
and worker counts are usable before any computation starts.

Features:
- Field descriptor resolution (including primality of fp:P)
- Order name resolution against the plugin catalog
- Bound, worker and experiment-profile range checks
- A single error listing every problem found

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
from typing import List

from algebra.errors import AlgebraError, PreconditionError
from core.app_state import AppState
from core.plugin_catalog import plugin_ids
from core.plugin_manager import load_field

logger = logging.getLogger(__name__)

KNOWN_FORMATS = ("json", "text")
KNOWN_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ConfigValidationError(PreconditionError):
    """Resolved settings are unusable; carries every error message."""

    def __init__(self, errors: List[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


def validate_settings(app_state: AppState) -> List[str]:
    """Return a list of validation error strings (empty if OK)."""
    errors: List[str] = []
    try:
        field = load_field(app_state.field)
        logger.debug("Validated field '%s' -> %s", app_state.field, field.pretty_name)
    except AlgebraError as e:
        errors.append(f"[GENERAL] FIELD: {e}")

    if app_state.order not in plugin_ids("order"):
        errors.append(f"[GENERAL] ORDER '{app_state.order}' is not one of {plugin_ids('order')}.")
    if app_state.workers < 1:
        errors.append("[GENERAL] WORKERS must be >= 1.")
    if app_state.max_degree < 2:
        errors.append("[BOUNDS] MAX_DEGREE must be >= 2.")
    if app_state.max_n < 0:
        errors.append("[BOUNDS] MAX_N must be >= 0.")
    if app_state.output_format not in KNOWN_FORMATS:
        errors.append(f"[REPORT] FORMAT must be one of {KNOWN_FORMATS}.")
    if app_state.log_level not in KNOWN_LOG_LEVELS:
        errors.append(f"[LOGGING] LOG_LEVEL must be one of {KNOWN_LOG_LEVELS}.")

    profile = app_state.experiment_profile
    if not profile or any(d < 2 for d in profile) or len(set(profile) - {2}) > 1:
        errors.append(f"[EXPERIMENT] PROFILE {profile} must be {{d}} or {{2, d}} with d >= 2.")
    if app_state.experiment_vertices < 1 or app_state.experiment_arrows < 1:
        errors.append("[EXPERIMENT] VERTICES and ARROWS must be >= 1.")
    if app_state.experiment_count < 0 or app_state.experiment_relations_per_degree < 1:
        errors.append("[EXPERIMENT] COUNT must be >= 0 and RELATIONS_PER_DEGREE >= 1.")
    return errors


def validate_or_raise(app_state: AppState) -> None:
    errors = validate_settings(app_state)
    if errors:
        for err in errors:
            logger.critical("Config validation: %s", err)
        raise ConfigValidationError(errors)
    logger.debug("Configuration validated successfully.")
