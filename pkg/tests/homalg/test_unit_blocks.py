"""Tests for catalogues, composition factors and block partitions over the smash presets

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from collections import Counter

from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.homalg.blocks import blocks, linkage_graph
from superalg_workbench.homalg.catalogue import catalogue_for
from superalg_workbench.homalg.composition import composition_factors, loewy_layers
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import direct_sum

P = 3


def test_smash_catalogue():
    """Tests, if the smash catalogue holds every simple and projective with its Π-shift."""
    catalogue = catalogue_for(build_preset("osp12_smash", P))
    assert catalogue.labels == ("V^0", "ΠV^0", "V^1", "ΠV^1", "V^2", "ΠV^2")
    assert [projective.dim for projective in catalogue.projectives] == [4 * P] * (2 * P)
    assert catalogue.index("ΠV^1") == 3


def test_smash_blocks_cover_plain_blocks():
    """Tests, if forgetting Π maps every smash block onto a block of the plain algebra."""
    smash = blocks(build_preset("osp12_smash", P))
    plain = blocks(build_preset("osp12", P))
    assert sum(len(block) for block in smash.blocks) == 2 * P
    for block in smash.blocks:
        assert tuple(sorted({label.lstrip("Π") for label in block})) in plain.blocks


def test_smash_blocks_are_parity_symmetric():
    """Tests, if the parity shift of a smash block is again a block."""
    partition = blocks(build_preset("osp12_smash", P))
    shifted = {
        frozenset(label[1:] if label.startswith("Π") else f"Π{label}" for label in block)
        for block in partition.blocks
    }
    assert shifted == partition.as_sets()


def test_linkage_graph():
    """Tests, if V^0 and V^2 are linked over osp(1|2) and V^1 has a self-extension loop."""
    graph = linkage_graph(catalogue_for(build_preset("osp12", P)))
    assert graph.has_edge("V^0", "V^2")
    assert not graph.has_edge("V^0", "V^1")
    assert graph.has_edge("V^1", "V^1")


def test_composition_factors_are_additive():
    """Tests, if the composition factors of a direct sum add up."""
    catalogue = catalogue_for(build_preset("osp12", P))
    total = direct_sum(module_of("P", 0, P), module_of("V", 1, P))
    assert composition_factors(total, catalogue) == Counter({0: 2, 2: 2, 1: 1})
    assert loewy_layers(module_of("V", 1, P), catalogue) == [Counter({1: 1})]
