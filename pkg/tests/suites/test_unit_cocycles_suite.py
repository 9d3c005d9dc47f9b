"""Tests for the Cocycles-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.interfaces.suite_interface import SuiteException

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_cocycles_suite(default_run_config):
    """Validates, that the cocycles are certified and that the negative controls fail."""
    suite = make_suite(load_suite_class("cocycles"), default_run_config, "cocycles")
    report = suite.run(samples=30)

    assert not failed_claims(report)
    controls = [verdict for verdict in report.verdicts if verdict.anchor == "cocycles.controls"]
    assert len(controls) == 2
    conventions = [
        verdict for verdict in report.verdicts if verdict.anchor == "osp12.cocycles.convention"
    ]
    assert len(conventions) == 1


def test_cocycles_suite_invalid_samples(default_run_config):
    """Validates, that a non-positive sample count is refused before any check runs."""
    suite = make_suite(load_suite_class("cocycles"), default_run_config, "cocycles")
    with pytest.raises(SuiteException):
        suite.run(samples=0)
