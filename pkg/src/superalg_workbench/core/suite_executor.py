"""Suite-Executor

Description:
    Loads the requested verification suites from their entry-points and executes their run
    method with the configured key-word arguments. Suites run on a bounded thread pool,
    generation by generation, so a suite never starts before its dependencies have finished.
    Each suite receives its own random generator seeded from the run seed and the suite name,
    and the resulting reports are merged in suite-name order.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import graphlib
import importlib.metadata
import logging
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict

import numpy as np

from superalg_workbench.core.configuration import RunConfig, SuiteEntry
from superalg_workbench.core.report import RunReport, SuiteReport
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.utils.logging_wrapper import format_minor, format_sub_chapter

logger = logging.getLogger(__name__)

SUITE_ENTRYPOINT_GROUP = "superalg.suites"


class SuiteExecutorError(Exception):
    """For exceptions during actions of the SuiteExecutor."""


class SuiteFailure(Exception):
    """Raised when a suite aborts because of an internal fault instead of returning verdicts."""


def suite_rng(seed: int, name: str) -> np.random.Generator:
    """Random generator of a suite; independent of scheduling and of the other suites."""
    return np.random.default_rng([seed, zlib.crc32(name.encode("utf-8"))])


class SuiteExecutor:
    """Executor for the suite plugins of a verification run."""

    def __init__(self, run_config: RunConfig, suite_entries: list[SuiteEntry]):
        self._run_config = run_config
        self._suite_entries = suite_entries

    def _get_entry_point_dictionary(self, group: str) -> dict[str, importlib.metadata.EntryPoint]:
        """Returns all entrypoints for the given group in a dictionary.

        Args:
            group: group of entry points.
        Returns:
            a dictionary of all installed entry-points.
        """
        all_entry_points = importlib.metadata.entry_points()
        if hasattr(all_entry_points, "select"):
            entry_pts = all_entry_points.select(group=group)
        else:
            entry_pts = all_entry_points.get(group, [])
        return {entry_point.name: entry_point for entry_point in entry_pts}

    def _load_suites(self) -> dict[str, type[SuiteInterface]]:
        """Loads the suite classes of all requested suites.

        Raises:
            SuiteExecutorError, if a requested suite is not installed.
        """
        entry_points = self._get_entry_point_dictionary(SUITE_ENTRYPOINT_GROUP)
        suite_classes = {}
        for suite_entry in self._suite_entries:
            if suite_entry.name not in entry_points:
                error_msg = (
                    f"Unknown suite requested: {suite_entry.name}."
                    f" Available suites: {sorted(entry_points.keys())}"
                )
                logger.error(error_msg)
                raise SuiteExecutorError(error_msg)
            suite_classes[suite_entry.name] = entry_points[suite_entry.name].load()
        return suite_classes

    def _run_suite(self, suite_entry: SuiteEntry, suite_class: type[SuiteInterface]) -> SuiteReport:
        """Instantiates a single suite and executes its run method."""
        logger.info(
            format_minor("Executing suite %s with the argument: %s"),
            suite_entry.name,
            suite_entry.options,
        )
        suite = suite_class(self._run_config, suite_rng(self._run_config.seed, suite_entry.name))
        try:
            if suite_entry.options is not None:
                report = suite.run(**suite_entry.options)
            else:
                report = suite.run()
        except Exception as error:
            logger.error("Suite %s aborted: %s", suite_entry.name, error)
            raise SuiteFailure(f"Suite '{suite_entry.name}' aborted: {error}") from error
        logger.info(report.summary())
        return report

    def run(self) -> RunReport:
        """Executes all requested suites in dependency order and merges their reports.

        Raises:
            SuiteExecutorError, if a suite is unknown.
            SuiteFailure, if a suite aborted.
        """
        logger.info(format_sub_chapter("Execute %d Suites"), len(self._suite_entries))
        suite_classes = self._load_suites()
        entry_lut = {suite_entry.name: suite_entry for suite_entry in self._suite_entries}
        sorter = graphlib.TopologicalSorter(
            {name: entry.dependencies & set(entry_lut) for name, entry in entry_lut.items()}
        )
        sorter.prepare()

        reports: list[SuiteReport] = []
        with ThreadPoolExecutor(max_workers=self._run_config.workers) as pool:
            while sorter.is_active():
                ready = sorted(sorter.get_ready())
                logger.debug("Next generation of suites: %s", ready)
                futures = {
                    name: pool.submit(self._run_suite, entry_lut[name], suite_classes[name])
                    for name in ready
                }
                for name in ready:
                    reports.append(futures[name].result())
                    sorter.done(name)

        return RunReport(config=asdict(self._run_config), suites=reports)
