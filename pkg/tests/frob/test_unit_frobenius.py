"""Tests for the Frobenius extension u(sl2) ⊂ u(osp(1|2))

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from dataclasses import replace

import numpy as np
import pytest

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.frob.frobenius import (
    FrobeniusError,
    embed_sl2,
    find_dual_pair,
    free_right_basis,
    frobenius_reciprocity_check,
    induce,
    projectivity_certificate,
    scalar_lattice,
    split_summand_check,
    trace_map,
    verify_dual_pair,
)
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import trivial_module

P = 3


def test_scalar_lattice():
    """Tests, if the lattice holds ±1 and ±1/2."""
    assert scalar_lattice(PrimeField(5)) == [1, 4, 3, 2]


def test_embedding():
    """Tests, if e and f land on E² and -F²."""
    osp12 = build_preset("osp12", P)
    assert embed_sl2(osp12, (1, 0, 0)) == osp12.word(["E", "E"])
    assert embed_sl2(osp12, (0, 1, 0)) == osp12.word(["F", "F"]).scale(-1)


def test_free_right_basis():
    """Tests, if EF has the single coordinate 1 on the word EF."""
    basis = free_right_basis(P)
    components = basis.components(basis.algebra.word(["E", "F"]))
    assert [component.is_zero() for component in components] == [True, True, True, False]
    assert components[-1] == basis.base.one()
    assert basis.form(basis.algebra.one()).is_zero()


def test_dual_pair():
    """Tests, if the dual pair sums to 1 and reconstructs random elements."""
    osp12 = build_preset("osp12", P)
    pair = find_dual_pair(osp12)
    assert pair.total() == osp12.one()
    report = verify_dual_pair(osp12, pair, samples=5)
    assert report.sum_is_one
    assert report.reconstruction_failures == 0
    assert report.passed


def test_broken_dual_pair():
    """Validates, that a sign flip in y_3 is detected."""
    osp12 = build_preset("osp12", P)
    pair = find_dual_pair(osp12)
    flipped = replace(pair, ys=pair.ys[:2] + (-pair.ys[2],) + pair.ys[3:])
    report = verify_dual_pair(osp12, flipped, samples=0)
    assert not report.sum_is_one
    assert not report.passed


def test_dual_pair_needs_osp():
    """Validates, that only the osp12 preset has a dual pair over u(sl2)."""
    with pytest.raises(FrobeniusError):
        verify_dual_pair(build_preset("sl2", P), samples=0)


def test_induce_trivial():
    """Tests, if inducing the trivial module gives four vectors of parities 0, 1, 1, 0."""
    induced = induce(trivial_module(build_preset("sl2", P)))
    assert induced.dim == 4
    assert induced.parity == (0, 1, 1, 0)
    assert induced.label.startswith("Ind ")


def test_induce_rejects_osp_module():
    """Validates, that induction starts from u(sl2)-modules."""
    with pytest.raises(FrobeniusError):
        induce(module_of("V", 0, P))


def test_trace_of_identity():
    """Tests, if Tr(id) = id since Σ y_i x_i = 1."""
    simple = module_of("V", 1, P)
    identity = simple.field.identity(simple.dim)
    assert np.array_equal(trace_map(identity, simple, simple), identity)


def test_trace_characteristic_mismatch():
    """Validates, that maps between different characteristics are refused."""
    source, target = module_of("V", 0, 3), module_of("V", 0, 5)
    with pytest.raises(FrobeniusError):
        trace_map(np.ones((1, 1), dtype=np.int64), source, target)


def test_split_summand():
    """Tests, if V^1 splits off Ind Res V^1 of dim 4·3."""
    certificate = split_summand_check(module_of("V", 1, P))
    assert certificate.induced_dim == 12
    assert certificate.composite_is_identity
    assert certificate.as_certificate()["module_id"] == certificate.module_id


@pytest.mark.parametrize("family, projective", [("P", True), ("V", False)])
def test_projectivity_certificate(family, projective):
    """Tests, if projectivity is read off the restriction to u(sl2)."""
    certificate = projectivity_certificate(module_of(family, 0, P))
    assert certificate.projective is projective
    assert certificate.split.composite_is_identity


@pytest.mark.parametrize("base_lam, target", [(1, ("V", 1)), (0, ("P", 0)), (2, ("V", 2))])
def test_frobenius_reciprocity(base_lam, target):
    """Tests, if dim Hom(Ind M, N) = dim Hom(M, Res N)."""
    check = frobenius_reciprocity_check(module_of("V0", base_lam, P), module_of(*target, P))
    assert check.holds
    assert check.induced_dim == 4 * (base_lam + 1)


def test_reciprocity_characteristic_mismatch():
    """Validates, that base and target must share the characteristic."""
    with pytest.raises(FrobeniusError):
        frobenius_reciprocity_check(module_of("V0", 0, 3), module_of("V", 0, 5))
