"""Tests for the module constructions

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import numpy as np
import pytest

from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import (
    Module,
    ModuleError,
    change_of_basis,
    check_relations,
    direct_sum,
    dual,
    from_smash_module,
    generated_submodule_basis,
    parity_change,
    quotient,
    regular_module,
    restrict,
    submodule,
    to_smash_module,
    trivial_module,
    twist_by_parity,
    zero_module,
)


@pytest.mark.parametrize("family", ["V", "W", "P"])
def test_constructions_keep_relations(family):
    """Tests, if duals, parity changes, twists and restrictions are modules again."""
    module = module_of(family, 1, 3)
    for construction in (dual, parity_change, twist_by_parity, restrict, to_smash_module):
        built = construction(module)
        assert check_relations(built).passed, construction.__name__
        assert built.dim == module.dim


def test_parity_change():
    """Tests, if Π flips the parities and is an involution on labels."""
    module = module_of("V", 1, 3)
    shifted = parity_change(module)
    assert shifted.label == "Π V^1"
    assert shifted.parity == (1, 0, 1)
    assert parity_change(shifted).label == "V^1"


def test_smash_modules():
    """Tests, if g acts by the parity sign and forgetting g restores the supermodule."""
    module = module_of("V", 1, 3)
    lifted = to_smash_module(module)
    assert lifted.algebra.is_smash
    assert np.array_equal(lifted.matrix("g"), np.diag([1, 2, 1]))
    restored = from_smash_module(lifted)
    assert restored.algebra.same_as(module.algebra)
    with pytest.raises(ModuleError):
        to_smash_module(lifted)
    with pytest.raises(ModuleError):
        from_smash_module(module)


def test_regular_and_trivial_modules():
    """Tests, if the regular and the trivial module satisfy the relations."""
    sl2 = build_preset("sl2", 3)
    assert check_relations(regular_module(sl2)).passed
    assert regular_module(sl2).dim == 27
    trivial = trivial_module(build_preset("osp12_smash", 3))
    assert trivial.label == "κ"
    assert trivial.matrix("g")[0, 0] == 1
    assert check_relations(trivial).passed
    assert zero_module(sl2).dim == 0


def test_broken_action():
    """Validates, that a wrong action is reported with the broken relation."""
    module = module_of("V", 1, 3)
    action = list(module.action)
    action[module.algebra.index_of("h")] = module.field.identity(3)
    check = check_relations(Module(module.algebra, tuple(action), module.parity, "broken"))
    assert not check.passed
    assert check.relation is not None
    assert check.witness is not None


def test_malformed_modules():
    """Validates, that wrong numbers of matrices and missing parities raise ModuleError."""
    sl2 = build_preset("sl2", 3)
    with pytest.raises(ModuleError):
        Module(sl2, (np.zeros((1, 1), dtype=np.int64),))
    unsigned = Module(sl2, tuple(np.zeros((2, 2), dtype=np.int64) for _ in range(3)))
    with pytest.raises(ModuleError):
        unsigned.sign_matrix()


def test_submodules_and_quotients():
    """Tests, if generated submodules and quotients of a direct sum have the summand dims."""
    total = direct_sum(module_of("V", 0, 3), module_of("V", 1, 3))
    assert total.label == "V^0 ⊕ V^1"
    assert total.dim == 4
    generator = np.array([0, 0, 1, 0])
    basis = generated_submodule_basis(total, [generator])
    assert basis.shape == (4, 3)
    sub = submodule(total, basis, "V^1")
    assert check_relations(sub).passed
    top = quotient(total, basis, "V^0")
    assert top.dim == 1
    assert check_relations(top).passed


def test_not_a_submodule():
    """Validates, that a subspace which is not stable raises ModuleError."""
    module = module_of("V", 1, 3)
    with pytest.raises(ModuleError, match="not a submodule"):
        submodule(module, np.array([[0], [0], [1]]))


def test_change_of_basis():
    """Tests, if conjugating by an invertible matrix keeps the relations."""
    module = module_of("W", 0, 3)
    transform = module.field.identity(module.dim)
    transform[0, 2] = 1
    changed = change_of_basis(module, transform)
    assert check_relations(changed).passed
    assert changed.parity == module.parity
