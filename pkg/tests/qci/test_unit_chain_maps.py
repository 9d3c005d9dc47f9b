"""Tests for the chain maps ξ_i, η_i and their relations

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.algebra.presets import build_qci, osp12_graded
from superalg_workbench.qci.chain_maps import (
    ChainMapError,
    chain_map_class,
    class_weight,
    composite_induced,
    eta_coefficient,
    verify_lemma32,
    verify_weight_actions,
)
from superalg_workbench.qci.koszul import build_koszul, qci_data

P = 5


@pytest.fixture(name="instance")
def fixture_instance():
    """QCI with N = (3, 2) and q_12 = 2 over F_5."""
    return build_qci([(3, [2]), (2, [])], P, name="qci_3_2")


def test_class_metadata(instance):
    """Tests, if ξ shifts the degree by two and η by one."""
    xi = chain_map_class("xi", 0, instance, 4)
    eta = chain_map_class("eta", 1, instance, 4, xi.resolution)
    assert (xi.name, xi.shift) == ("ξ1", 2)
    assert (eta.name, eta.shift) == ("η2", 1)
    assert xi.induced(2).shape == (3, 1)
    assert eta.induced(1).shape == (2, 1)


@pytest.mark.parametrize("kind, index, depth", [("xi", 0, 1), ("eta", 2, 4), ("xi", -1, 4)])
def test_chain_map_errors(instance, kind, index, depth):
    """Validates, that a too small depth or an unknown generator is refused."""
    with pytest.raises(ChainMapError):
        chain_map_class(kind, index, instance, depth)


def test_unknown_kind(instance):
    """Validates, that only ξ and η classes exist."""
    with pytest.raises(ValueError):
        chain_map_class("zeta", 0, instance, 4)


def test_eta_coefficient(instance):
    """Tests, if η1 carries the coefficient -2 on Ψ(1, 1) for q = 2."""
    truncations, q_matrix = qci_data(instance)
    assert eta_coefficient((1, 1), 0, truncations, q_matrix, instance.field) == 3


def test_xi_commutation(instance):
    """Tests, if ξ1ξ2 = q^{N1N2}·ξ2ξ1 = 4·ξ2ξ1 on degree 4."""
    resolution = build_koszul(instance, 4)
    xi = [chain_map_class("xi", i, instance, 4, resolution) for i in range(2)]
    left = composite_induced(xi[0], xi[1], 4)
    right = composite_induced(xi[1], xi[0], 4)
    assert not instance.field.is_zero(left)
    assert instance.field.is_zero(left - 4 * right)


@pytest.mark.parametrize(
    "spec, p",
    [
        ([(3, [2]), (2, [])], 5),
        ([(2, [-1]), (2, [])], 3),
        ([(2, [1, 2]), (3, [1]), (2, [])], 3),
    ],
)
def test_relations_hold(spec, p):
    """Tests, if all ξ/η relations hold as identities of induced maps."""
    report = verify_lemma32(build_qci(spec, p), 4)
    assert report.passed
    assert not report.failures()
    assert report.checks


def test_relations_depth(instance):
    """Validates, that the relations need at least degree 4."""
    with pytest.raises(ChainMapError):
        verify_lemma32(instance, 3)


def test_class_weight():
    """Tests, if the weight of Ψ(a)* sums τ(a_i)·w_i."""
    assert class_weight((1, 0), (6, 6), (1, -1)) == 1
    assert class_weight((2, 0), (6, 6), (1, -1)) == 6
    assert class_weight((1, 1), (6, 6), (1, -1)) == 0


def test_weight_actions_graded_osp():
    """Tests, if h and g act on the classes of the graded instance as expected."""
    graded = osp12_graded(3)
    report = verify_weight_actions(graded, 3)
    assert report.commutes_h and report.commutes_g
    assert report.class_actions == report.expected_actions
    assert report.class_actions["ξ1"] == (0, 1)
    assert report.class_actions["η1"] == (2, 2)
    assert report.class_actions["η2"] == (1, 2)
    assert all(report.power_invariant.values())
    assert report.passed
