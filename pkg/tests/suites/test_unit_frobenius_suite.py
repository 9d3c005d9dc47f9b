"""Tests for the Frobenius-Suite

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from .fixtures.default_config import default_run_config, failed_claims, make_suite
from .utils.suite_loader import load_suite_class


def test_frobenius_suite(default_run_config):
    """Validates, that the dual pair, the certificates and the reciprocity checks pass."""
    suite = make_suite(load_suite_class("frobenius"), default_run_config, "frobenius")
    report = suite.run(reciprocity_pairs=3, reconstruction_samples=5)

    assert not failed_claims(report)
    certificates = [
        verdict.certificate
        for verdict in report.verdicts
        if verdict.anchor == "osp12.projectives.certificate" and verdict.certificate
    ]
    assert len(certificates) == 1
    assert len(certificates[0]) == 3
