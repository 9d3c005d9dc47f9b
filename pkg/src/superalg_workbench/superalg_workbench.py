"""Superalg-Workbench - Verification Runs

Description:
    This file declares the Entry-Point of the workbench. The `run` command reads the run
    configuration, executes the requested verification suites and writes the report; the
    `catalogue` command emits the table of indecomposable u(osp(1|2))-supermodules.

    Exit codes: 0 if every claim passed, 1 if a claim failed or a suite aborted, 2 for usage and
    configuration errors.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import argparse
import logging
import os
import pathlib
import sys
from dataclasses import dataclass
from typing import Optional

from superalg_workbench.core.configuration import (
    SUITE_NAMES,
    ConfigurationHandlerException,
    RunConfig,
    get_configuration,
    validate_run_config,
)
from superalg_workbench.core.report import (
    CatalogueEntry,
    CatalogueReport,
    ReportError,
    RunReport,
    render_catalogue,
    write_report,
)
from superalg_workbench.core.suite_executor import SuiteExecutor, SuiteExecutorError, SuiteFailure
from superalg_workbench.core.utils.yaml_handler import InvalidConfPathError
from superalg_workbench.rep.families import family_catalogue
from superalg_workbench.utils import logging_wrapper
from superalg_workbench.utils.logging_wrapper import format_chapter, format_major

logger = logging.getLogger(__name__)

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CLIArguments:
    """Dataclass for the cli-arguments."""

    command: str
    configuration_path: Optional[pathlib.Path] = None
    p: Optional[int] = None
    suites: Optional[list[str]] = None
    depth: Optional[int] = None
    seed: Optional[int] = None
    output_format: Optional[str] = None
    out: Optional[str] = None
    workers: Optional[int] = None
    n_max: Optional[int] = None


def _suite_list(value: str) -> list[str]:
    return [name.strip() for name in value.split(",") if name.strip()]


def parse_cli_args(argv: Optional[list[str]] = None) -> CLIArguments:
    """Parses the cli-arguments and returns them as a dataclass."""
    parser = argparse.ArgumentParser(
        description="Verification workbench for u(sl2) and u(osp(1|2)) over F_p."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Runs verification suites and writes the report.")
    run.add_argument("--conf", type=str, help="Path to a Yaml run configuration.")
    run.add_argument("--p", type=int, help="Odd prime characteristic. Overrides run.p.")
    run.add_argument(
        "--suites",
        type=_suite_list,
        help=f"Comma separated subset of {','.join(SUITE_NAMES)}. Overrides run.suites.",
    )
    run.add_argument("--depth", type=int, help="Resolution depth D. Overrides run.depth.")
    run.add_argument("--seed", type=int, help="Seed of all random choices. Overrides run.seed.")
    run.add_argument(
        "--format",
        dest="output_format",
        type=str,
        help="'json', 'markdown' or 'csv'. Overrides run.output_format.",
    )
    run.add_argument("--out", type=str, help="Report file. The report goes to stdout without it.")
    run.add_argument("--workers", type=int, help="Size of the worker pool. Overrides run.workers.")
    run.add_argument("--n-max", type=int, help="Largest string and band length in sweeps.")

    catalogue = commands.add_parser(
        "catalogue", help="Emits the indecomposable supermodules with their dimensions."
    )
    catalogue.add_argument("--p", type=int, default=3, help="Odd prime characteristic.")
    catalogue.add_argument("--n-max", type=int, default=1, help="Largest string and band length.")
    catalogue.add_argument(
        "--format", dest="output_format", type=str, default="json", help="json, markdown or csv."
    )
    catalogue.add_argument("--out", type=str, help="Output file, stdout without it.")

    arguments = parser.parse_args(argv)
    configuration_path = getattr(arguments, "conf", None)
    return CLIArguments(
        command=arguments.command,
        configuration_path=pathlib.Path(configuration_path) if configuration_path else None,
        p=arguments.p,
        suites=getattr(arguments, "suites", None),
        depth=getattr(arguments, "depth", None),
        seed=getattr(arguments, "seed", None),
        output_format=arguments.output_format,
        out=arguments.out,
        workers=getattr(arguments, "workers", None),
        n_max=arguments.n_max,
    )


def report_catalogue(p: int, n_max: int) -> CatalogueReport:
    """Table of all indecomposable supermodules up to length n_max, with their Π-shifts.

    Raises:
        ConfigurationHandlerException, if p is not a supported odd prime or n_max is negative.
    """
    validate_run_config(RunConfig(p=p, n_max=n_max, suites=[]))
    entries = [
        CatalogueEntry(
            family=row.family,
            lam=row.lam,
            n=row.n,
            c=row.c,
            dim=row.dim,
            parity_changed=row.parity_changed,
            label=row.label,
        )
        for row in family_catalogue(p, n_max)
    ]
    logger.info("Catalogue over F_%d with n <= %d: %d entries", p, n_max, len(entries))
    return CatalogueReport(p=p, n_max=n_max, entries=entries)


def run_verification(cli_args: CLIArguments) -> RunReport:
    """Reads the configuration, executes the suites and writes the report."""
    logger.info(format_chapter("Read Configuration"))
    run_config, suite_entries = get_configuration(
        cli_args.configuration_path,
        cli_args.p,
        cli_args.suites,
        cli_args.depth,
        cli_args.seed,
        cli_args.output_format,
        cli_args.out,
        cli_args.workers,
        cli_args.n_max,
    )
    logging_wrapper.log_run_information(suite_entries, run_config)

    report = SuiteExecutor(run_config, suite_entries).run()
    write_report(report, run_config.output_format, run_config.out)
    return report


def run_catalogue(cli_args: CLIArguments):
    report = report_catalogue(cli_args.p or 3, 1 if cli_args.n_max is None else cli_args.n_max)
    text = render_catalogue(report, cli_args.output_format or "json")
    if cli_args.out is None:
        print(text, end="")
    else:
        pathlib.Path(cli_args.out).write_text(text, encoding="utf-8")


def run_workbench(argv: Optional[list[str]] = None) -> int:
    """Configures and runs the workbench and returns the exit code."""
    logging_wrapper.configure_logging(os.getenv("SUPERALG_LOG_LEVEL", "INFO"))
    cli_args = parse_cli_args(argv)
    try:
        if cli_args.command == "catalogue":
            run_catalogue(cli_args)
            return EXIT_PASSED
        report = run_verification(cli_args)
    except (ConfigurationHandlerException, InvalidConfPathError, SuiteExecutorError) as error:
        logger.error("Invalid configuration: %s", error)
        return EXIT_USAGE
    except SuiteFailure as error:
        logger.error("%s", error)
        return EXIT_FAILED
    except (ReportError, OSError) as error:
        logger.error("Failed to write the output: %s", error)
        return EXIT_FAILED

    failure = report.first_failure()
    if failure is not None:
        suite, verdict = failure
        logger.error(
            "First failing claim in suite %s: %s [%s] %s; certificate: %s",
            suite,
            verdict.claim,
            verdict.anchor,
            verdict.detail,
            verdict.certificate,
        )
        return EXIT_FAILED
    logger.info(format_major("All claims passed."))
    return EXIT_PASSED


def main():
    sys.exit(run_workbench())


if __name__ == "__main__":
    # If this script is run directly, execute main()
    main()
