"""Tests for minimal resolutions, Ext dimensions and complexity estimates

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.algebra.presets import build_preset, build_qci
from superalg_workbench.homalg import complexity
from superalg_workbench.homalg.complexity import (
    ComplexityError,
    ComplexityEstimate,
    GrowthStatus,
    WildnessStatus,
    estimate_from_dims,
    finite_differences,
    settled_order,
    wildness_verdict,
)
from superalg_workbench.homalg.resolution import (
    ResolutionError,
    ext_dim,
    ext_dim_super,
    ext_dims,
    lemma27_check,
    minimal_resolution,
)
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import parity_change, trivial_module

P = 3


def test_minimal_resolution():
    """Tests, if the resolution of a simple starts with its projective cover."""
    resolution = minimal_resolution(module_of("V", 0, P), 3)
    assert resolution.depth == 3
    assert resolution.ranks[0] == 1
    assert resolution.total_dims[0] == 4 * P
    assert resolution.minimal
    assert [row[0] for row in resolution.growth_table()] == [0, 1, 2, 3]
    with pytest.raises(ResolutionError):
        resolution.differential(4)


def test_resolution_of_projective():
    """Tests, if a projective module is resolved by itself."""
    resolution = minimal_resolution(module_of("P", 1, P), 3)
    assert resolution.ranks == [1, 0, 0, 0]


@pytest.mark.parametrize("depth", [-1, 13])
def test_resolution_depth(depth):
    """Validates, that depths outside [0, 12] raise ResolutionError."""
    with pytest.raises(ResolutionError):
        minimal_resolution(module_of("V", 0, P), depth)


def test_ext_between_simples():
    """Tests, if Ext^1(V^0, V^(p-1)) = 2 and self-extensions only occur at λ = (p-1)/2."""
    assert ext_dim(module_of("V", 0, P), module_of("V", P - 1, P), 1) == 2
    self_ext = [ext_dim(module_of("V", lam, P), module_of("V", lam, P), 1) for lam in range(P)]
    assert self_ext[0] == self_ext[2] == 0
    assert self_ext[1] > 0
    assert ext_dims(module_of("V", 0, P), module_of("V", 0, P), 1)[0] == 1
    with pytest.raises(ResolutionError):
        ext_dim(module_of("V", 0, P), module_of("V", 0, P), -1)


def test_ext_of_projective():
    """Tests, if projective modules have no higher Ext."""
    projective = module_of("P", 0, P)
    assert ext_dims(projective, module_of("V", 2, P), 2)[1:] == [0, 0]


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_invariant_ext(degree):
    """Tests, if Ext over the smash algebra is the Z2-invariant part of the plain Ext."""
    trivial = trivial_module(build_preset("osp12", P))
    report = lemma27_check(trivial, trivial, degree)
    assert report.lift_ok
    assert report.passed
    assert report.super_dim == ext_dim_super(trivial, trivial, degree)
    assert report.invariant_dim <= report.plain_dim


@pytest.mark.parametrize("lam, mu", [(0, 2), (1, 1), (0, 0), (2, 0)])
def test_super_ext_between_simples(lam, mu):
    """Tests, if the super Ext^1 into V and into ΠV add up to the plain Ext^1."""
    source, target = module_of("V", lam, P), module_of("V", mu, P)
    plain = ext_dim(source, target, 1)
    even = ext_dim_super(source, target, 1)
    assert even + ext_dim_super(source, parity_change(target), 1) == plain
    report = lemma27_check(source, target, 1)
    assert report.passed
    assert report.plain_dim == plain
    assert report.super_dim == even


def test_invariant_ext_needs_plain_modules():
    """Validates, that the invariant check rejects modules over the smash algebra."""
    trivial = trivial_module(build_preset("osp12_smash", P))
    with pytest.raises(ResolutionError):
        lemma27_check(trivial, trivial, 1)


def test_finite_differences():
    """Tests, if the differences shrink to length one and settle at the right order."""
    assert finite_differences([1, 2, 4]) == [[1, 2, 4], [1, 2], [1]]
    assert settled_order([3, 3, 3]) == 0
    assert settled_order([1, 2, 3, 4]) == 1
    assert settled_order([1, 4, 9, 16, 25]) == 2
    assert settled_order([1, 2]) is None


@pytest.mark.parametrize(
    "dims, expected, status",
    [
        ([1, 2, 3, 4, 5], 2, GrowthStatus.OK),
        ([4, 4, 4, 4], 1, GrowthStatus.OK),
        ([12, 0, 0, 0], 1, GrowthStatus.OK),
        ([1, 5, 2, 6, 3, 7, 4, 8, 5, 9], 2, GrowthStatus.PARITY_SPLIT),
        ([1, 5, 2, 6, 3, 7, 4], None, GrowthStatus.INCONCLUSIVE),
        ([1, 2, 4, 8, 16], None, GrowthStatus.INCONCLUSIVE),
    ],
)
def test_estimate_from_dims(dims, expected, status):
    """Tests, if the complexity is read off the settled differences of the dimensions."""
    estimate = estimate_from_dims(dims, [1] * len(dims))
    assert estimate.complexity == expected
    assert estimate.status is status


def test_wildness():
    """Tests, if a QCI with three generators of complexity 3 is wild."""
    cube = build_qci([(2, [1, 1]), (2, [1]), (2, [])], P)
    verdict = wildness_verdict(cube, 6)
    assert verdict.status is WildnessStatus.WILD
    assert verdict.estimate.complexity == 3


def test_wildness_without_settled_growth(mocker):
    """Validates, that an unsettled growth raises ComplexityError."""
    mocker.patch.object(
        complexity,
        "complexity_estimate",
        return_value=ComplexityEstimate(None, GrowthStatus.INCONCLUSIVE, [1, 2, 4], [1, 2, 4]),
    )
    with pytest.raises(ComplexityError):
        wildness_verdict(build_qci([(2, [1]), (2, [])], P), 3)
