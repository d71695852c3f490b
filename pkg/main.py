# main.py
"""
Main Entry Point (Koszul Toolkit)

Command-line front end for deciding Koszul-type properties of quotients of
path algebras KΓ/I: Groebner bases, associated monomial algebras, chain
tables, AGS and oracle Betti tables, full Koszul reports and seeded
experiment sweeps.

Features:
- Logging setup (stderr console and optional rotating file)
- Configuration load (config.ini, environment, flags) and validation
- Subcommands: gb | mon | ap | resolve | oracle | report | experiment
- Exit-code contract: 0 ok, 2 parse error, 3 precondition, 4 inconclusive with --strict

Project: Koszul Toolkit
License: MIT
"""

import argparse
import logging
from logging.handlers import RotatingFileHandler
import pathlib
import sys
from typing import List, Optional

from algebra.chains import build_chains
from algebra.errors import AlgebraError, InputParseError, PreconditionError
from algebra.groebner import buchberger, tip_ideal
from algebra.koszul import Bounds, classify, degree_function_from_spec
from algebra.presentation import AlgebraPresentation
from algebra.resolution import betti_from_chains, oracle_resolution
from core.app_state import AppState
from core.config_loader import load_configuration, validate_core_config
from core.constants import *
from core.input_loader import load_presentation, presentation_to_dict
from services.experiment_service import ExperimentService, ExperimentSpec
from services.report_service import ReportService

# Application version
__version__ = "1.0.0"

COMMANDS = ("gb", "mon", "ap", "resolve", "oracle", "report", "experiment")
# Commands whose output is derived from the tips of the Groebner basis.
TIP_COMMANDS = ("mon", "ap", "resolve")


def setup_logging(app_state: AppState):
    """
    Sets up logging to stderr and, when enabled, a rotating file.

    stdout is reserved for JSON / CSV / text payloads.

    Args:
        app_state: The run state holding the resolved logging settings.
    """
    log_levels = {
        "DEBUG": logging.DEBUG, "INFO": logging.INFO,
        "WARNING": logging.WARNING, "ERROR": logging.ERROR, "CRITICAL": logging.CRITICAL,
    }
    effective_log_level = log_levels.get(app_state.log_level, logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(effective_log_level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    formatter = logging.Formatter('%(asctime)s %(levelname)-8s [%(threadName)s] %(name)s: %(message)s')

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if app_state.log_to_file:
        log_file_path = pathlib.Path(app_state.log_file)
        file_handler = RotatingFileHandler(
            log_file_path, maxBytes=LOG_FILE_MAX_BYTES, backupCount=LOG_FILE_BACKUP_COUNT, encoding='utf-8'
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)
        logging.debug(f"Logging to file: {log_file_path}")


def _profile_arg(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"profile must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="AlgebraInputFile JSON")
    common.add_argument("--max-degree", type=int, help="internal degree bound D")
    common.add_argument("--max-n", type=int, help="homological degree bound N")
    common.add_argument("--order", help="admissible order (deglex | degrevlex)")
    common.add_argument("--field", help="coefficient field (rational | fp:P)")
    common.add_argument("--out", help="write the payload here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), help="output format")
    common.add_argument("--seed", type=int, help="experiment RNG seed")
    common.add_argument("--strict", action="store_true", default=None, help="exit 4 when a verdict is inconclusive")
    common.add_argument("--check-F", dest="check_f", action="append", default=[],
                        help="degree function to check: delta:D, table:F0,F1,... or linear:A,B (repeatable)")
    common.add_argument("--config", default=CONFIG_FILE_NAME, help="config.ini path")
    common.add_argument("--log-level", help="DEBUG | INFO | WARNING | ERROR")
    common.add_argument("--workers", type=int, help="worker threads")
    common.add_argument("--no-oracle", action="store_true", help="skip the oracle resolution in report")
    common.add_argument("--d", dest="d_override", type=int, help="override the inferred relation degree d")
    common.add_argument("--count", type=int, help="experiment instance count")
    common.add_argument("--profile", type=_profile_arg, help="experiment degree profile, e.g. 2,3 or 3")
    common.add_argument("--perturb", action="store_true", default=None, help="perturb experiment instances")
    common.add_argument("--reports-dir", help="experiment: directory for per-instance JSON reports")
    common.add_argument("--progress", action="store_true", help="experiment: show a progress bar")

    parser = argparse.ArgumentParser(prog="koszul", description=f"{APP_NAME} v{__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "gb": "reduced Groebner basis up to --max-degree",
        "mon": "associated monomial algebra as an input file",
        "ap": "chain table AP(0..N) of the tip set",
        "resolve": "Betti table of the AGS resolution of the tip algebra",
        "oracle": "Betti table of the minimal resolution by linear algebra",
        "report": "full Koszul classification report",
        "experiment": "seeded sweep over random instances (CSV)",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def apply_cli_overrides(args: argparse.Namespace, app_state: AppState) -> None:
    """Flags win over environment and config.ini."""
    overrides = {
        "max_degree": args.max_degree, "max_n": args.max_n, "order": args.order, "field": args.field,
        "output_format": args.format, "strict": args.strict, "workers": args.workers,
        "experiment_seed": args.seed, "experiment_count": args.count, "experiment_perturb": args.perturb,
    }
    for attr, value in overrides.items():
        if value is not None:
            setattr(app_state, attr, value.lower() if attr == "order" else value)
    if args.log_level:
        app_state.log_level = args.log_level.upper()
    if args.no_oracle:
        app_state.run_oracle = False
    if args.profile:
        app_state.experiment_profile = args.profile
    app_state.check_f = list(args.check_f)
    app_state.show_progress = args.progress


def _load(args: argparse.Namespace, app_state: AppState) -> AlgebraPresentation:
    if not args.input:
        raise InputParseError(f"'{args.command}' needs --input")
    return load_presentation(args.input, args.field, args.order, app_state.field, app_state.order)


def _groebner(presentation: AlgebraPresentation, app_state: AppState):
    return buchberger(presentation.relations, presentation.order, app_state.max_degree,
                      app_state.workers, presentation.domain)


def run_command(args: argparse.Namespace, app_state: AppState) -> int:
    logger = logging.getLogger(CORE_LOGGER_NAME)
    reports = ReportService(app_state)

    if args.command == "experiment":
        spec = ExperimentSpec(
            vertices=app_state.experiment_vertices, arrows=app_state.experiment_arrows,
            profile=app_state.experiment_profile, relations_per_degree=app_state.experiment_relations_per_degree,
            count=app_state.experiment_count, seed=app_state.experiment_seed,
            max_degree=app_state.max_degree, max_n=app_state.max_n, perturb=app_state.experiment_perturb,
            field=app_state.field, order=app_state.order, workers=app_state.workers,
        )
        service = ExperimentService(spec, app_state.show_progress)
        results = service.run()
        reports.write(service.to_csv(results), args.out)
        if args.reports_dir:
            service.write_reports(results, args.reports_dir)
        return EXIT_OK

    presentation = _load(args, app_state)
    if args.command == "report":
        cap = app_state.max_n
        functions = [degree_function_from_spec(text, cap) for text in app_state.check_f]
        bounds = Bounds(app_state.max_degree, app_state.max_n, functions, app_state.workers,
                        app_state.run_oracle, args.d_override)
        report = classify(presentation, bounds)
        reports.emit(report, args.out)
        pending = report.inconclusive()
        if pending and app_state.strict:
            logger.warning(f"Inconclusive verdicts under --strict: {', '.join(pending)}")
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    basis = _groebner(presentation, app_state)
    if not basis.complete and args.command in TIP_COMMANDS:
        logger.warning(f"Groebner basis incomplete at degree {app_state.max_degree}; tips are a truncation")
    if args.command == "gb":
        reports.emit(basis, args.out)
    elif args.command == "mon":
        monomial = AlgebraPresentation(presentation.quiver, presentation.field, presentation.order,
                                       tip_ideal(basis).as_elements(presentation.domain),
                                       (presentation.name + " (tip algebra)").strip())
        reports.write(reports.render(presentation_to_dict(monomial)), args.out)
    elif args.command == "ap":
        reports.emit(build_chains(tip_ideal(basis), app_state.max_n), args.out)
    elif args.command == "resolve":
        chains = build_chains(tip_ideal(basis), app_state.max_n)
        reports.emit(betti_from_chains(chains), args.out)
    elif args.command == "oracle":
        reports.emit(oracle_resolution(basis, app_state.max_n, app_state.max_degree), args.out)
    if app_state.strict and not basis.complete:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    app_state = AppState(version=__version__)
    load_configuration(args.config, app_state)
    apply_cli_overrides(args, app_state)
    setup_logging(app_state)
    logger = logging.getLogger(CORE_LOGGER_NAME)
    logger.debug(f"--- {APP_NAME} v{__version__}: {args.command} ---")

    try:
        validate_core_config(app_state)
        return run_command(args, app_state)
    except InputParseError as e:
        logger.critical(f"Input error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (PreconditionError, AlgebraError) as e:
        logger.critical(f"Precondition failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
