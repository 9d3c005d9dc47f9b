"""Tests for the EndRings-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_endrings_suite(default_run_config):
    """Validates, that the endomorphism rings, bricks and extensions match the expected shapes."""
    suite = make_suite(load_suite_class("endrings"), default_run_config, "endrings")
    report = suite.run(tubes=False)

    assert not failed_claims(report)
    anchors = {verdict.anchor for verdict in report.verdicts}
    assert "osp12.end.local-shape" in anchors
    assert "osp12.bricks" in anchors


def test_endrings_suite_local_shape(default_run_config):
    """Tests, if the local shape of End(P^((p-1)/2)) passes and reports its relation orientation."""
    suite = make_suite(load_suite_class("endrings"), default_run_config, "endrings")
    report = suite.run(tubes=False)

    local = next(v for v in report.verdicts if v.anchor == "osp12.end.local-shape")
    assert local.passed
    assert local.certificate["orientation"] == "alternating"
    assert local.certificate["loewy"] == [4, 3, 1, 0]
