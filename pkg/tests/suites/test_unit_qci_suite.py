"""Tests for the QCI-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.core.report import QCI_EXT_COLUMNS
from superalg_workbench.interfaces.suite_interface import SuiteException

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_qci_suite(default_run_config):
    """Validates, that the Koszul complexes are exact and match the closed form and the oracle."""
    default_run_config.depth = 4
    suite = make_suite(load_suite_class("qci"), default_run_config, "qci")
    report = suite.run(configurations=2, oracle_budget=2000)

    assert not failed_claims(report)
    ext = report.tables["ext"]
    assert ext.columns == ["instance", *QCI_EXT_COLUMNS]
    for row in ext.rows:
        _, _, computed, closed_form, oracle = row
        assert computed == closed_form
        assert oracle is None or oracle == computed


@pytest.mark.parametrize("configurations, oracle_budget", [(-1, 10), (1, -5)])
def test_qci_suite_invalid_options(default_run_config, configurations, oracle_budget):
    """Validates, that negative suite options are refused."""
    suite = make_suite(load_suite_class("qci"), default_run_config, "qci")
    with pytest.raises(SuiteException):
        suite.run(configurations=configurations, oracle_budget=oracle_budget)
