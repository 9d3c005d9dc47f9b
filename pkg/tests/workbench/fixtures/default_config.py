"""Pytest Fixtures for the default configuration

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.core.configuration import RunConfig, SuiteEntry
from superalg_workbench.core.report import RunReport, SuiteReport

DEFAULT_P = 3
DEFAULT_SEED = 11


@pytest.fixture
def default_run_config() -> RunConfig:
    """Fixture for the default run configuration"""
    return RunConfig(p=DEFAULT_P, suites=["pbw"], depth=4, seed=DEFAULT_SEED, workers=2)


@pytest.fixture
def default_suite_entries() -> list[SuiteEntry]:
    """Fixture for two suites, where the second depends on the first"""
    return [SuiteEntry("pbw"), SuiteEntry("modules", {"pbw"}, {"n_max": 0})]


@pytest.fixture
def default_run_report() -> RunReport:
    """Fixture for a run report with one passing and one failing suite"""
    passing = SuiteReport(suite="pbw")
    passing.add("dim sl2 = 27", "presets.dimension", True, "computed 27")
    passing.add_table("growth_trivial", ("degree", "rank", "total_dim"), [(0, 1, 1), (1, 2, 8)])
    failing = SuiteReport(suite="blocks")
    failing.add("u(osp(1|2)) has 2 blocks", "osp12.blocks.pairing", True)
    failing.add(
        "Ext^1(V^0, V^(p-1)) = 2",
        "osp12.ext1",
        False,
        "computed 1 | expected 2",
        {"dims": (1, 2)},
    )
    return RunReport(config={"p": DEFAULT_P, "seed": DEFAULT_SEED}, suites=[passing, failing])
