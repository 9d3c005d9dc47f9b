"""Tests for the restricted structure and the associated graded algebras

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import numpy as np
import pytest

from superalg_workbench.algebra.graded import FilteredAlgebraError, associated_graded
from superalg_workbench.algebra.presets import PresetError, build_preset
from superalg_workbench.algebra.restricted import (
    restricted_data,
    sl2_restricted_data,
    verify_restricted_axioms,
)


@pytest.mark.parametrize("name", ["sl2", "osp12"])
@pytest.mark.parametrize("p", [3, 5])
def test_restricted_axioms(name, p):
    """Tests, if the p-maps of sl2 and osp(1|2) satisfy the restricted axioms."""
    report = verify_restricted_axioms(
        restricted_data(name, p), p, np.random.default_rng(p), samples=5
    )
    assert report.passed, report.failures
    assert report.checked["c"] > 0


def test_broken_p_map():
    """Validates, that h^[p] := 0 violates [x^[p], y] = (ad x)^p (y) with the witness (h, e)."""
    broken = sl2_restricted_data(3).with_p_map("h", [0, 0, 0])
    report = verify_restricted_axioms(broken, 3, samples=0)
    assert not report.passed
    assert report.witness == ("h", "e")


def test_unknown_restricted_data():
    """Validates, that restricted data only exists for sl2 and osp12."""
    with pytest.raises(PresetError):
        restricted_data("qci", 3)


def test_associated_graded_osp12():
    """Tests, if E and F anti-commute in the associated graded algebra of u(osp(1|2))."""
    graded = associated_graded(build_preset("osp12", 3), {"E": 1, "F": 1, "h": 0})
    E, F, h = (graded.generator(name) for name in ("E", "F", "h"))
    assert F * E == -(E * F)
    assert h * E == E * h + E
    assert h.power(3) == h


def test_associated_graded_errors():
    """Validates, that missing degrees and non-filtered rules raise FilteredAlgebraError."""
    sl2 = build_preset("sl2", 3)
    with pytest.raises(FilteredAlgebraError, match="No degree"):
        associated_graded(sl2, {"e": 1, "f": 1})
    with pytest.raises(FilteredAlgebraError):
        associated_graded(sl2, {"e": 0, "f": 0, "h": 1})
