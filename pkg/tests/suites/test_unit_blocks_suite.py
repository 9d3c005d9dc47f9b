"""Tests for the Blocks-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_blocks_suite(default_run_config):
    """Validates, that the blocks pair λ with p-1-λ and the Ext^1 table has the known values."""
    suite = make_suite(load_suite_class("blocks"), default_run_config, "blocks")
    report = suite.run(permutation_check=True)

    assert not failed_claims(report)
    table = {(lam, mu): dim for lam, mu, dim in report.tables["ext1"].rows}
    assert len(table) == 9
    assert table[(0, 2)] == 2
    assert table[(0, 0)] == 0
    assert table[(2, 2)] == 0
