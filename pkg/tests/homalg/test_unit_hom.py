"""Tests for homomorphism spaces, composition factors and blocks

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from collections import Counter

import numpy as np
import pytest

from superalg_workbench.algebra.presets import build_preset, build_qci
from superalg_workbench.homalg.blocks import blocks
from superalg_workbench.homalg.catalogue import CatalogueError, catalogue_for
from superalg_workbench.homalg.composition import (
    composition_factors,
    factor_labels,
    loewy_layers,
)
from superalg_workbench.homalg.hom import end_basis, even_part, hom_basis, hom_dim, intertwines
from superalg_workbench.rep.families import module_of

P = 3


@pytest.mark.parametrize("lam", range(P))
@pytest.mark.parametrize("mu", range(P))
def test_schur(lam, mu):
    """Tests, if Hom(V^λ, V^μ) is one-dimensional for λ = μ and zero otherwise."""
    assert hom_dim(module_of("V", lam, P), module_of("V", mu, P)) == (1 if lam == mu else 0)


def test_hom_basis_intertwines():
    """Tests, if every basis element of Hom(P^0, W^0) commutes with the action."""
    source, target = module_of("P", 0, P), module_of("W", 0, P)
    hom = hom_basis(source, target)
    assert hom.dim == 1
    assert all(intertwines(source, target, matrix) for matrix in hom)
    assert hom.coordinates(hom.basis[0].copy()) is not None
    assert not intertwines(source, target, np.ones((target.dim, source.dim), dtype=np.int64))


def test_end_dims():
    """Tests, if End(P^λ) has dim 2, except dim 4 at λ = (p-1)/2."""
    assert [end_basis(module_of("P", lam, P)).dim for lam in range(P)] == [2, 4, 2]


def test_even_part():
    """Tests, if the even part keeps only the entries between basis vectors of equal parity."""
    module = module_of("V", 1, P)
    even = even_part(module, module, np.ones((3, 3), dtype=np.int64))
    assert np.array_equal(even, [[1, 0, 1], [0, 1, 0], [1, 0, 1]])


@pytest.mark.parametrize("lam", range(P))
def test_projective_factors(lam):
    """Tests, if P^λ has the factors 2V^λ + 2V^(p-1-λ) in three Loewy layers."""
    other = P - 1 - lam
    catalogue = catalogue_for(build_preset("osp12", P))
    factors = composition_factors(module_of("P", lam, P), catalogue)
    assert factors == Counter({lam: 2}) + Counter({other: 2})
    layers = loewy_layers(module_of("P", lam, P), catalogue)
    assert layers[0] == Counter({lam: 1})
    assert layers[-1] == Counter({lam: 1})
    assert len(layers) == 3
    labels = factor_labels(composition_factors(module_of("W", lam, P), catalogue), catalogue)
    assert sum(labels.values()) == 2


def test_blocks():
    """Tests, if the blocks pair V^λ with V^(p-1-λ) over osp(1|2) and λ with p-2-λ over sl2."""
    osp_blocks = blocks(build_preset("osp12", P))
    assert osp_blocks.as_sets() == {frozenset({"V^0", "V^2"}), frozenset({"V^1"})}
    assert osp_blocks.block_of("V^2") == ("V^0", "V^2")
    assert blocks(build_preset("osp12", P), order=[2, 0, 1]).as_sets() == osp_blocks.as_sets()

    sl2_blocks = blocks(build_preset("sl2", P))
    assert sl2_blocks.as_sets() == {frozenset({"V0^0", "V0^1"}), frozenset({"V0^2"})}


def test_qci_catalogue():
    """Tests, if a QCI is local with the trivial character as only simple."""
    catalogue = catalogue_for(build_qci([(2, [2]), (2, [])], P))
    assert len(catalogue) == 1
    assert catalogue.projectives[0].dim == 4
    with pytest.raises(CatalogueError):
        catalogue.permuted([1, 0])
