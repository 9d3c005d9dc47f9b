"""Tests for radicals, idempotent lifting, decompositions and shapes of endomorphism rings

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import numpy as np
import pytest

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.homalg.endring import (
    LAMBDA1_LOEWY,
    brick_report,
    cyclic_algebra,
    decompose,
    end_ring,
    fitting_split,
    idempotent_split,
    is_local_end,
    lambda1_shape,
    lift_idempotent,
    loewy_series,
    residue_structure,
    two_loop_shape,
)
from superalg_workbench.homalg.hom import end_basis
from superalg_workbench.homalg.isomorphism import is_isomorphic
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import direct_sum
from superalg_workbench.suites.iso_sweep_suite import same_multiset

P = 3


def left_multiplications(p: int, products: dict) -> np.ndarray:
    """Left regular matrices of the algebra on the basis 1, x, y, z with the given products."""
    matrices = np.zeros((4, 4, 4), dtype=np.int64)
    matrices[0] = np.eye(4, dtype=np.int64)
    for i in range(1, 4):
        matrices[i, i, 0] = 1
    for (i, j), (k, coeff) in products.items():
        matrices[i, k, j] = coeff % p
    return matrices


@pytest.fixture
def symmetric_ring():
    """κ⟨x, y⟩ / (xy, yx, x² - 3y²) over F_5, with z = x²."""
    return left_multiplications(5, {(1, 1): (3, 1), (2, 2): (3, 2)})


@pytest.fixture
def exterior_ring():
    """The exterior algebra on x, y over F_5, with z = xy = -yx."""
    return left_multiplications(5, {(1, 2): (3, 1), (2, 1): (3, -1)})


def test_loewy_series(exterior_ring):
    """Tests, if the radical powers of the exterior algebra have dimensions 3, 1, 0."""
    field = PrimeField(5)
    assert loewy_series(field, exterior_ring[1:]) == [3, 1, 0]
    assert loewy_series(field, np.zeros((0, 4, 4), dtype=np.int64)) == [0]
    assert loewy_series(field, exterior_ring[:1]) is None


def test_two_loop_shape_symmetric(symmetric_ring):
    """Tests, if commuting loops with proportional squares are found as the symmetric shape."""
    field = PrimeField(5)
    shape = two_loop_shape(field, symmetric_ring[1:], LAMBDA1_LOEWY)
    assert shape.matches
    assert shape.orientation == "symmetric"
    x, y = shape.arrows["x"], shape.arrows["y"]
    assert field.is_zero(field.matmul(x, y)) and field.is_zero(field.matmul(y, x))
    assert field.is_zero(field.matmul(x, x) - shape.scalars["s"] * field.matmul(y, y))


def test_two_loop_shape_alternating(exterior_ring):
    """Tests, if anticommuting loops with vanishing squares are found as the alternating shape."""
    field = PrimeField(5)
    shape = two_loop_shape(field, exterior_ring[1:], LAMBDA1_LOEWY)
    assert shape.matches
    assert shape.orientation == "alternating"
    assert shape.scalars == {"t": 4}


def test_two_loop_shape_wrong_loewy(exterior_ring):
    """Validates, that a ring with another Loewy series does not match."""
    shape = two_loop_shape(PrimeField(5), exterior_ring[1:], [4, 2, 0])
    assert not shape.matches
    assert "Loewy" in shape.detail


def test_lambda1_shape():
    """Tests, if End(P^((p-1)/2)) has two anticommuting loops with vanishing squares."""
    shape = lambda1_shape(module_of("P", (P - 1) // 2, P))
    assert shape.matches
    assert shape.loewy == [4, 3, 1, 0]
    assert shape.orientation == "alternating"
    assert shape.scalars == {"t": P - 1}


def _field_nine():
    """F_9 as span{1, C} inside 2x2 matrices over F_3, C² = -1."""
    return np.array([[1, 0], [0, 1]]), np.array([[0, 2], [1, 0]])


def test_residue_structure_field_extension():
    """Tests, if F_9 over F_3 is local with zero radical although no element splits over F_3."""
    field = PrimeField(3)
    structure = residue_structure(field, np.stack(_field_nine()))
    assert structure.radical.shape[0] == 0
    assert structure.nilpotent
    assert structure.factors == 1
    assert lift_idempotent(field, structure) is None


def test_residue_structure_dual_numbers():
    """Tests, if F_9[ε]/(ε²) is local with the ε-multiples as radical."""
    field = PrimeField(3)
    one, c = _field_nine()
    zero = np.zeros((2, 2), dtype=np.int64)
    basis = np.stack(
        [np.block([[one, zero], [zero, one]]), np.block([[c, zero], [zero, c]])]
        + [np.block([[zero, zero], [m, zero]]) for m in (one, c)]
    )
    structure = residue_structure(field, basis)
    assert structure.radical.shape[0] == 2
    assert structure.nilpotent
    assert structure.factors == 1


def test_lift_idempotent():
    """Tests, if F_9 x F_3 yields an idempotent separating the two fields."""
    field = PrimeField(3)
    one, c = _field_nine()
    basis = np.zeros((3, 3, 3), dtype=np.int64)
    basis[0, :2, :2], basis[1, :2, :2], basis[2, 2, 2] = one, c, 1
    structure = residue_structure(field, basis)
    assert structure.factors == 2
    idempotent = lift_idempotent(field, structure)
    assert np.array_equal(field.matmul(idempotent, idempotent), idempotent)
    assert field.rank(idempotent) in (1, 2)


def test_cyclic_algebra():
    """Tests, if the powers of C stop at the first dependent one."""
    assert cyclic_algebra(PrimeField(3), _field_nine()[1]).shape == (2, 2, 2)


def test_fitting_split_non_local():
    """Tests, if End(V ⊕ V) is split into two copies of V and End(P) is not split."""
    simple = module_of("V", 1, P)
    rng = np.random.default_rng(0)
    split = fitting_split(end_basis(direct_sum(simple, simple)), rng)
    assert split is not None
    assert [basis.shape[1] for basis in split] == [3, 3]
    assert fitting_split(end_basis(module_of("P", 0, P)), rng) is None


def test_idempotent_split():
    """Tests, if a lifted idempotent splits V^1 ⊕ V^2 and a local End ring gives None."""
    rng = np.random.default_rng(0)
    module = direct_sum(module_of("V", 1, P), module_of("V", 2, P))
    split = idempotent_split(end_basis(module), rng)
    assert sorted(basis.shape[1] for basis in split) == [3, 5]
    assert idempotent_split(end_basis(module_of("P", 0, P)), rng) is None


@pytest.mark.parametrize("s", [(2, 1), (1, 2)])
def test_band_with_non_split_residue_field(s):
    """Tests, if a band whose go-around scalar s1·s2 is a non-square has a local End over F_9."""
    band = module_of("T", 0, P, 1, s)
    assert is_local_end(end_basis(band))
    pieces = decompose(band)
    assert len(pieces) == 1 and pieces[0] is band
    ring = end_ring(band)
    assert ring.is_local
    assert ring.dim % 2 == 0


@pytest.mark.parametrize(
    "first, second",
    [
        (("P", 0, 0, (1, 1)), ("P", 0, 0, (1, 1))),
        (("P", 1, 0, (1, 1)), ("W", 0, 0, (1, 1))),
    ],
)
def test_decompose_sum_of_indecomposables(first, second):
    """Tests, if a sum of two non-simple indecomposables splits back into its summands."""
    modules = [module_of(family, lam, P, n, s) for family, lam, n, s in (first, second)]
    total = direct_sum(*modules)
    pieces = decompose(total)
    assert sorted(piece.dim for piece in pieces) == sorted(module.dim for module in modules)
    for module in modules:
        assert any(is_isomorphic(piece, module).is_yes for piece in pieces)
    assert same_multiset(pieces, modules)
    ring = end_ring(total)
    assert not ring.is_local
    assert len(ring.summands) == 2
    assert ring.loewy[-1] == 0


@pytest.mark.parametrize(
    "first, second",
    [
        (("Tt", 0, 2, (2, 1)), ("T", 1, 2, (2, 1))),
        (("Wn", 0, 2, (1, 1)), ("Wtn", 0, 2, (1, 1))),
        (("T", 0, 1, (2, 1)), ("T", 0, 1, (1, 2))),
    ],
)
def test_decompose_is_additive(first, second):
    """Tests, if decompose(M ⊕ N) agrees with decompose(M) and decompose(N) up to isomorphism."""
    modules = [module_of(family, lam, P, n, s) for family, lam, n, s in (first, second)]
    pieces = decompose(direct_sum(*modules))
    expected = decompose(modules[0]) + decompose(modules[1])
    assert sum(piece.dim for piece in pieces) == sum(module.dim for module in modules)
    assert all(is_local_end(end_basis(piece)) for piece in pieces)
    assert same_multiset(pieces, expected)


@pytest.mark.parametrize("lam, end_dim, radical_dim, is_brick", [(0, 1, 0, True), (1, 2, 1, False)])
def test_brick_report(lam, end_dim, radical_dim, is_brick):
    """Tests, if W^λ is a brick except at λ = (p-1)/2, where End is κ[x]/(x²)."""
    report = brick_report(module_of("W", lam, P))
    assert (report.end_dim, report.radical_dim, report.is_brick) == (end_dim, radical_dim, is_brick)
    assert report.label == module_of("W", lam, P).label


@pytest.mark.parametrize("lam", range(P))
def test_simples_are_bricks(lam):
    """Tests, if End(V^λ) is the ground field."""
    report = brick_report(module_of("V", lam, P))
    assert report.is_brick
    assert report.radical_dim == 0
