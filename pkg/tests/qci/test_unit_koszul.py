"""Tests for the Koszul resolution of quantum complete intersections

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.algebra.presets import build_preset, build_qci
from superalg_workbench.qci.koszul import (
    KoszulResolutionError,
    build_koszul,
    closed_form_dim,
    exactness_check,
    ext_dims_qci,
    koszul_generators,
    qci_data,
    sigma,
    tau,
)

P = 3


@pytest.mark.parametrize(
    "exponent, truncation, expected_sigma, expected_tau",
    [(1, 4, 1, 1), (2, 4, 3, 4), (3, 4, 1, 5), (4, 2, 1, 4), (0, 3, 2, 0)],
)
def test_sigma_tau(exponent, truncation, expected_sigma, expected_tau):
    """Tests, if σ alternates between 1 and N - 1 and τ sums it up."""
    assert sigma(exponent, truncation) == expected_sigma
    assert tau(exponent, truncation) == expected_tau


def test_koszul_generators():
    """Tests, if the generators of K_n are the exponent tuples of total degree n."""
    assert koszul_generators(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(koszul_generators(3, 4)) == 15


def test_non_qci_rejected():
    """Validates, that the Koszul machinery refuses algebras that are not QCIs."""
    with pytest.raises(KoszulResolutionError):
        qci_data(build_preset("sl2", P))
    with pytest.raises(KoszulResolutionError):
        build_koszul(build_preset("osp12", P), 2)


def test_depth_too_small():
    """Validates, that depth 0 is refused."""
    with pytest.raises(KoszulResolutionError):
        build_koszul(build_qci([(2, [])], P), 0)


def test_exterior_algebra():
    """Tests, if κ[x]/(x²) has rank one in every degree and an exact resolution."""
    exterior = build_qci([(2, [])], P)
    resolution = build_koszul(exterior, 4)
    assert resolution.ranks == [1] * 5
    exactness = exactness_check(resolution)
    assert exactness.exact
    assert exactness.homology == [0] * 4


def test_two_generators_anticommuting():
    """Tests, if QCI(2,2) with q = -1 has ranks 1, 2, 3, 4 and d∘d = 0."""
    plane = build_qci([(2, [-1]), (2, [])], P)
    resolution = build_koszul(plane, 3)
    assert resolution.ranks == [1, 2, 3, 4]
    assert resolution.differential(0).shape == (1, plane.dim)
    assert resolution.differential(2).shape == (2 * plane.dim, 3 * plane.dim)
    field = plane.field
    for degree in range(1, 4):
        product = field.matmul(resolution.differential(degree - 1), resolution.differential(degree))
        assert field.is_zero(product)
    assert resolution.index((1, 1)) == 1


def test_exactness_with_larger_truncations():
    """Tests, if the resolution stays exact for N = (3, 2) and a nontrivial q."""
    instance = build_qci([(3, [2]), (2, [])], 5)
    exactness = exactness_check(build_koszul(instance, 3))
    assert exactness.exact


@pytest.mark.parametrize("degree, generators, expected", [(0, 2, 1), (3, 2, 4), (4, 3, 15)])
def test_closed_form(degree, generators, expected):
    """Tests, if the binomial closed form gives the expected dimensions."""
    assert closed_form_dim(degree, generators) == expected


def test_ext_dims_qci():
    """Tests, if dim Ext^n of a three-generator QCI follows the closed form."""
    algebra = build_qci([(2, [1, 1]), (2, [1]), (2, [])], P)
    dims = ext_dims_qci(algebra, 4)
    assert dims == [1, 3, 6, 10, 15]
    assert dims == [closed_form_dim(n, 3) for n in range(5)]


def test_ext_dims_reuse_resolution():
    """Tests, if a prebuilt resolution is truncated to the requested degree."""
    algebra = build_qci([(3, [1]), (2, [])], P)
    resolution = build_koszul(algebra, 4)
    assert ext_dims_qci(algebra, 2, resolution) == [1, 2, 3]
