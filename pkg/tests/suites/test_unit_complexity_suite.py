"""Tests for the Complexity-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_complexity_suite(default_run_config):
    """Validates, that the complexities are estimated and that the wildness criterion applies."""
    suite = make_suite(load_suite_class("complexity"), default_run_config, "complexity")
    report = suite.run(invariant_degrees=2)

    assert not failed_claims(report)
    assert "growth_trivial_qci_2_2" in report.tables
    assert "growth_projective" in report.tables
    degrees = [row[0] for row in report.tables["invariant_ext"].rows]
    assert degrees == [0, 1, 2]
    projective_growth = report.tables["growth_projective"].rows
    assert all(row[1] == 0 for row in projective_growth[1:])
