"""Tests for the SuiteExecutor

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import numpy as np
import pytest

from superalg_workbench.core.configuration import RunConfig, SuiteEntry
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.core.suite_executor import (
    SuiteExecutor,
    SuiteExecutorError,
    SuiteFailure,
    suite_rng,
)
from superalg_workbench.interfaces.suite_interface import SuiteInterface

from ..fixtures.default_config import default_run_config, default_suite_entries

EXECUTION_ORDER: list[str] = []


def make_suite_class(name: str, passed: bool = True, fail_with: Exception = None):
    """Returns a suite class that records its execution and its keyword-arguments."""

    class RecordingSuite(SuiteInterface):
        def __init__(self, run_config: RunConfig, rng: np.random.Generator):
            self._p = run_config.p
            self._draw = int(rng.integers(1 << 30))

        def run(self, **kwargs) -> SuiteReport:
            EXECUTION_ORDER.append(name)
            if fail_with is not None:
                raise fail_with
            report = SuiteReport(suite=name)
            report.add(f"{name} at p={self._p}", f"{name}.claim", passed, str(kwargs))
            report.add_table("draw", ("value",), [(self._draw,)])
            return report

    return RecordingSuite


def mock_entry_points(mocker, suite_classes: dict):
    """Replaces the installed entry-points by entry-points loading the given classes."""
    entry_points = {}
    for name, suite_class in suite_classes.items():
        entry_point = mocker.MagicMock()
        entry_point.name = name
        entry_point.load.return_value = suite_class
        entry_points[name] = entry_point
    return mocker.patch.object(
        SuiteExecutor, "_get_entry_point_dictionary", return_value=entry_points
    )


@pytest.fixture(autouse=True)
def reset_execution_order():
    """Fixture for an empty execution record per test"""
    EXECUTION_ORDER.clear()


def test_suite_executor_non_existing_suite(default_run_config):
    """Validates, that SuiteExecutorError is risen on a non existing suite."""
    executor = SuiteExecutor(default_run_config, [SuiteEntry("non-existing-suite")])
    with pytest.raises(SuiteExecutorError, match="non-existing-suite"):
        executor.run()


def test_suite_executor_installed_suite(default_run_config):
    """Validates, that an installed suite is found via its entry-point and loads its class."""
    executor = SuiteExecutor(default_run_config, [SuiteEntry("pbw")])
    suite_classes = executor._load_suites()
    assert issubclass(suite_classes["pbw"], SuiteInterface)


def test_suite_executor_runs_dependencies_first(
    mocker, default_run_config, default_suite_entries
):
    """Validates, that dependencies run first and the options reach the run method."""
    mock_entry_points(
        mocker, {"pbw": make_suite_class("pbw"), "modules": make_suite_class("modules")}
    )
    report = SuiteExecutor(default_run_config, list(reversed(default_suite_entries))).run()

    assert EXECUTION_ORDER == ["pbw", "modules"]
    assert report.passed
    assert [suite.suite for suite in report.suites] == ["modules", "pbw"]
    assert report.suites[0].verdicts[0].detail == "{'n_max': 0}"
    assert report.suites[1].verdicts[0].detail == "{}"
    assert report.config["seed"] == default_run_config.seed


def test_suite_executor_reports_failing_claims(mocker, default_run_config):
    """Tests, if failing claims end up in the report instead of raising."""
    mock_entry_points(mocker, {"blocks": make_suite_class("blocks", passed=False)})
    report = SuiteExecutor(default_run_config, [SuiteEntry("blocks")]).run()

    suite, verdict = report.first_failure()
    assert suite == "blocks"
    assert verdict.claim == "blocks at p=3"


def test_suite_executor_aborting_suite(mocker, default_run_config, default_suite_entries):
    """Validates, that an internal fault of a suite is wrapped into a SuiteFailure."""
    mock_entry_points(
        mocker,
        {
            "pbw": make_suite_class("pbw", fail_with=ValueError("broken rewrite rule")),
            "modules": make_suite_class("modules"),
        },
    )
    with pytest.raises(SuiteFailure, match="Suite 'pbw' aborted: broken rewrite rule"):
        SuiteExecutor(default_run_config, default_suite_entries).run()
    assert EXECUTION_ORDER == ["pbw"]


@pytest.mark.parametrize("workers", [1, 4])
def test_suite_executor_is_independent_of_workers(mocker, default_run_config, workers):
    """Tests, if the random draws of the suites do not depend on the size of the worker pool."""
    names = ["qci", "cocycles", "pbw"]
    mock_entry_points(mocker, {name: make_suite_class(name) for name in names})
    default_run_config.workers = workers
    report = SuiteExecutor(default_run_config, [SuiteEntry(name) for name in names]).run()

    draws = {suite.suite: suite.tables["draw"].rows[0][0] for suite in report.suites}
    expected = {
        name: int(suite_rng(default_run_config.seed, name).integers(1 << 30)) for name in names
    }
    assert draws == expected


def test_suite_rng():
    """Tests, if the suite generators depend on the seed and the suite name only."""
    first = suite_rng(5, "qci").integers(1000, size=8)
    assert np.array_equal(first, suite_rng(5, "qci").integers(1000, size=8))
    assert not np.array_equal(first, suite_rng(5, "cocycles").integers(1000, size=8))
    assert not np.array_equal(first, suite_rng(6, "qci").integers(1000, size=8))
