"""Tests for the IsoSweep-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_iso_sweep_suite(default_run_config):
    """Validates, that the band modules are classified by s1·s2 and the catalogue is complete."""
    suite = make_suite(load_suite_class("iso-sweep"), default_run_config, "iso-sweep")
    report = suite.run(n_max=1, symmetry_pairs=3, additivity_pairs=2, quotients=2)

    assert not failed_claims(report)
    tubes = report.tables["tubes"].rows
    assert len(tubes) == 16
    assert sum(row[-1] for row in tubes) == 8
