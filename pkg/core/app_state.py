# core/app_state.py
"""
Application State Container

Centralized state for one Koszul Toolkit run. Holds the parsed configuration
and every resolved setting (bounds, field, order, logging, report and
experiment options) after CLI flags, environment and config.ini have been
merged.

Features:
- Single source of truth for resolved run settings
- Experiment generator parameters
- Version and config path bookkeeping

Project: Koszul Toolkit
License: MIT
"""

import configparser
from typing import List, Optional

from core.constants import (
    DEFAULT_FIELD,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_N,
    DEFAULT_ORDER,
    DEFAULT_WORKERS,
    LOG_FILE_NAME,
)


class AppState:
    """
    Resolved settings for a run.

    `config_loader.load_configuration` fills the fields from config.ini and the
    environment; `main.apply_cli_overrides` then writes explicit CLI flags on
    top, so the precedence is flag > environment > config.ini > default.
    """
    def __init__(self, version: str):
        self.version = version
        self.config: Optional[configparser.ConfigParser] = None
        self.config_path: Optional[str] = None

        # General
        self.field = DEFAULT_FIELD
        self.order = DEFAULT_ORDER
        self.workers = DEFAULT_WORKERS

        # Bounds
        self.max_degree = DEFAULT_MAX_DEGREE
        self.max_n = DEFAULT_MAX_N

        # Logging
        self.log_level = "INFO"
        self.log_to_file = False
        self.log_file = LOG_FILE_NAME

        # Report
        self.output_format = "json"
        self.strict = False
        self.run_oracle = True
        self.check_f: List[str] = []

        # Experiment
        self.experiment_vertices = 1
        self.experiment_arrows = 2
        self.experiment_profile: List[int] = [2, 3]
        self.experiment_relations_per_degree = 2
        self.experiment_count = 10
        self.experiment_seed = 1
        self.experiment_perturb = False
        self.show_progress = False
