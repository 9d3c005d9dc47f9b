"""Pytest Fixtures for the suite tests

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.suite_executor import suite_rng

SUITE_P = 3
SUITE_SEED = 2026


@pytest.fixture
def default_run_config() -> RunConfig:
    """Fixture for the default run configuration of a suite test"""
    return RunConfig(p=SUITE_P, depth=5, seed=SUITE_SEED, n_max=1, workers=1)


def make_suite(suite_class, run_config: RunConfig, name: str):
    """Instantiates a suite the way the SuiteExecutor does."""
    return suite_class(run_config, suite_rng(run_config.seed, name))


def failed_claims(report) -> list[str]:
    return [
        f"{verdict.anchor}: {verdict.detail}" for verdict in report.verdicts if not verdict.passed
    ]
