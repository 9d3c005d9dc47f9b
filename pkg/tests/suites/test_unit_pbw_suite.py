"""Tests for the PBW-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from superalg_workbench.interfaces.suite_interface import SuiteInterface

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_pbw_suite_is_installed():
    """Tests, if the pbw suite is registered as entry-point."""
    assert issubclass(load_suite_class("pbw"), SuiteInterface)


def test_pbw_suite(default_run_config):
    """Validates, that all presets pass dimension, straightening and associativity checks."""
    suite = make_suite(load_suite_class("pbw"), default_run_config, "pbw")
    report = suite.run(triples=20, word_length=2, axiom_samples=5)

    assert not failed_claims(report)
    anchors = {verdict.anchor for verdict in report.verdicts}
    assert {"presets.dimension", "pbw.associativity", "restricted.axioms"} <= anchors
    dimension_details = [
        verdict.detail for verdict in report.verdicts if verdict.anchor == "presets.dimension"
    ]
    assert any("108" in detail for detail in dimension_details)


def test_pbw_suite_is_reproducible(default_run_config):
    """Tests, if two runs with the same seed produce identical reports."""
    suite_class = load_suite_class("pbw")
    first = make_suite(suite_class, default_run_config, "pbw").run(triples=5, axiom_samples=2)
    second = make_suite(suite_class, default_run_config, "pbw").run(triples=5, axiom_samples=2)
    assert first == second
