"""Tests for the cocycles built by coefficient extraction

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from dataclasses import replace

import numpy as np
import pytest

from superalg_workbench.algebra.presets import build_preset, build_qci, osp12_graded
from superalg_workbench.qci.cocycles import (
    CocycleError,
    coboundary_value,
    cocycle_c,
    cocycle_f,
    cocycle_xi_hat,
    degree_two_comparison,
    kernel_vanishing,
    noncoboundary_tuple,
    verify_cocycle,
)

P = 3


@pytest.fixture(name="graded")
def fixture_graded():
    """Graded instance of u(osp(1|2)) over F_3, a QCI with N = (6, 6)."""
    return osp12_graded(P)


def test_xi_hat_values(graded):
    """Tests, if ξ̂_E pairs E with E^5 and vanishes on F."""
    cocycle = cocycle_xi_hat(graded, "E")
    assert cocycle.arity == 2
    assert cocycle.value([(1, 0), (5, 0)]) == 1
    assert cocycle.value([(0, 1), (0, 1)]) == 0
    assert coboundary_value(cocycle, [(1, 0), (1, 0), (4, 0)]) == 0


def test_xi_hat_is_cocycle(graded):
    """Tests, if ξ̂_E passes the exhaustive check and is not a coboundary."""
    result = verify_cocycle(cocycle_xi_hat(graded, "E"))
    assert result.exhaustive
    assert result.passed
    assert result.witness is None
    assert result.noncoboundary
    assert result.as_certificate()["cocycle_id"] == "ξ̂_E"


def test_noncoboundary_tuple(graded):
    """Tests, if the certificate tuple is (x, x^{N-1}) with vanishing products."""
    arguments, vanishing = noncoboundary_tuple(cocycle_xi_hat(graded, "F"))
    assert arguments == [(0, 1), (0, 5)]
    assert vanishing


def test_corrupted_entry(graded):
    """Validates, that zeroing a single table entry is detected with a witness."""
    corrupted = cocycle_xi_hat(graded, "E").with_entry((2, 0), (4, 0), 0)
    result = verify_cocycle(corrupted)
    assert corrupted.name.endswith("*")
    assert not result.passed
    assert result.witness is not None


def test_zero_cocycle(graded):
    """Validates, that the zero table is closed but fails the non-coboundary certificate."""
    cocycle = cocycle_xi_hat(graded, "E")
    zero = replace(cocycle, table=np.zeros_like(cocycle.table), _support=None)
    result = verify_cocycle(zero)
    assert result.passed
    assert not result.noncoboundary


@pytest.mark.parametrize("generator", ["E", "F"])
def test_degree_two_comparison(graded, generator):
    """Tests, if ξ_i and ξ̂_i agree on the generators of K_2."""
    comparison = degree_two_comparison(graded, generator)
    assert len(comparison.rows) == 3
    assert comparison.matches


def test_kernel_vanishing(graded):
    """Tests, if ξ̂_E vanishes on every monomial that involves F."""
    assert kernel_vanishing(cocycle_xi_hat(graded, "E")) == []


def test_pair_functionals():
    """Tests, if c_e on u(sl2) and c_E on u(osp(1|2)) are non-trivial cocycles."""
    sl2, osp12 = build_preset("sl2", P), build_preset("osp12", P)
    for cocycle in (cocycle_c(sl2, "e"), cocycle_c(osp12, "E")):
        result = verify_cocycle(cocycle)
        assert result.exhaustive
        assert result.passed
        assert result.noncoboundary
        assert cocycle.convention == "lift"


def test_cartan_free_convention():
    """Validates, that dropping the Cartan part breaks the cocycle condition on osp(1|2)."""
    osp12 = build_preset("osp12", P)
    cocycle = cocycle_c(osp12, "E", cartan_free=True)
    assert cocycle.convention == "cartan-free"
    result = verify_cocycle(cocycle, exhaustive_limit=osp12.dim)
    assert not result.passed


def test_f_cocycle():
    """Tests, if f_E has arity 2p, value 1 on its certificate and passes seeded sampling."""
    osp12 = build_preset("osp12", P)
    cocycle = cocycle_f(osp12, "E")
    assert cocycle.arity == 2 * P
    assert cocycle.name == "f_E"
    assert cocycle.value([(1, 0, 0), (5, 0, 0)] * P) == 1
    result = verify_cocycle(cocycle, samples=20, rng=np.random.default_rng(1))
    assert not result.exhaustive
    assert result.checked_tuples == 20
    assert result.passed
    assert result.noncoboundary


def test_wrong_arity(graded):
    """Validates, that evaluating with the wrong number of arguments raises."""
    cocycle = cocycle_xi_hat(graded, "E")
    with pytest.raises(CocycleError):
        cocycle.value([(1, 0)])
    with pytest.raises(CocycleError):
        coboundary_value(cocycle, [(1, 0), (1, 0)])


def test_unsupported_algebras():
    """Validates, that c and f refuse algebras they are not defined on."""
    with pytest.raises(CocycleError):
        cocycle_c(build_qci([(2, [])], P), 0)
    with pytest.raises(CocycleError):
        cocycle_c(build_preset("osp12_smash", P), "E")
    with pytest.raises(CocycleError):
        cocycle_f(build_preset("sl2", P), "e")
