# core/constants.py
"""
Core Application Constants

Centralized constants for the Koszul Toolkit to avoid magic strings and
provide a single source of truth for filenames, logger names, thread names,
defaults and exit codes.

Features:
- Application and file name constants (config, log)
- Core logger name definitions
- Thread name prefixes used by the Groebner and experiment worker pools
- Default bounds and CLI exit codes

Project: Koszul Toolkit
License: MIT
"""

# Application Details
APP_NAME = "Koszul Toolkit"
LOG_FILE_NAME = "koszul_toolkit.log"
CONFIG_FILE_NAME = "config.ini"
SCHEMA_VERSION = "1.0"

# Logger Names
CORE_LOGGER_NAME = "KoszulCore"

# Thread Names
EXPERIMENT_THREAD_NAME_PREFIX = "ExperimentWorker"

# Default Bounds
DEFAULT_MAX_DEGREE = 8
DEFAULT_MAX_N = 5
DEFAULT_WORKERS = 1
DEFAULT_FIELD = "rational"
DEFAULT_ORDER = "deglex"

# Log File Rotation
LOG_FILE_MAX_BYTES = 5 * 1024 * 1024
LOG_FILE_BACKUP_COUNT = 3

# Exit Codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_INCONCLUSIVE = 4

# Experiment Generator (64-bit LCG)
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1
