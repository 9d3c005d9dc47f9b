"""Tests for the module families

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pytest

from superalg_workbench.rep.families import (
    FamilyParameterError,
    FamilyParams,
    eigenvalues_of_h,
    family_catalogue,
    make_module,
    module_of,
    sl2_projectives,
)
from superalg_workbench.rep.module import check_relations


def expected_dim(family: str, lam: int, p: int, n: int) -> int:
    return {
        "V0": lam + 1,
        "P0": 2 * p,
        "V": 2 * lam + 1,
        "W": 2 * p,
        "Wt": 2 * p,
        "P": 4 * p,
        "Vn": (n + 1) * (2 * lam + 1) + n * (2 * p - 2 * lam - 1),
        "Vtn": (n + 1) * (2 * lam + 1) + n * (2 * p - 2 * lam - 1),
        "Wn": 2 * p * n,
        "Wtn": 2 * p * n,
        "T": 4 * p * n,
        "Tt": 4 * p * n,
    }[family]


@pytest.mark.parametrize(
    "family, n",
    [
        ("V0", 0),
        ("V", 0),
        ("W", 0),
        ("Wt", 0),
        ("P", 0),
        ("Vn", 1),
        ("Vn", 2),
        ("Vtn", 1),
        ("Wn", 2),
        ("Wtn", 2),
        ("T", 1),
        ("Tt", 2),
    ],
)
@pytest.mark.parametrize("p", [3, 5])
def test_family_members_are_modules(family, n, p):
    """Tests, if every family member satisfies the relations with the expected dimension."""
    for lam in range(p):
        module = module_of(family, lam, p, n, (2, 1))
        check = check_relations(module)
        assert check.passed, f"{module.label}: {check.relation}"
        assert module.dim == expected_dim(family, lam, p, n)


@pytest.mark.parametrize("p", [3, 5])
def test_sl2_projectives(p):
    """Tests, if the projective u(sl2)-modules satisfy the relations and have dim 2p."""
    projectives = sl2_projectives(p)
    assert [module.dim for module in projectives] == [2 * p] * (p - 1) + [p]
    assert all(check_relations(module).passed for module in projectives)


def test_labels_and_weights():
    """Tests, if labels follow the family notation and h acts by the weights λ - i."""
    assert module_of("Vn", 1, 3, 2).label == "V^1(2)"
    assert module_of("T", 0, 3, 1, (2, 1)).label == "T^0(2,1,1)"
    assert eigenvalues_of_h(module_of("V", 1, 3)) == [1, 0, 2]
    assert module_of("V", 1, 3).parity == (0, 1, 0)


@pytest.mark.parametrize(
    "params",
    [
        FamilyParams("X", 0),
        FamilyParams("V", 3),
        FamilyParams("P0", 2),
        FamilyParams("Vn", 0, -1),
        FamilyParams("Wn", 0, 0),
        FamilyParams("T", 0, 1, (0, 1)),
    ],
)
def test_invalid_parameters(params):
    """Validates, that parameters outside the range of a family raise FamilyParameterError."""
    with pytest.raises(FamilyParameterError):
        make_module(params, 3)


def test_family_catalogue():
    """Tests, if the catalogue lists every class once together with its parity change."""
    rows = family_catalogue(3, 1)
    assert len(rows) == 3 * 8 * 2
    assert sum(row.parity_changed for row in rows) == len(rows) // 2
    bands = [row for row in rows if row.family == "T" and not row.parity_changed]
    assert sorted({row.c for row in bands}) == [1, 2]
    assert {row.dim for row in bands} == {12}
    shifted = [row.label for row in rows if row.parity_changed and row.family == "V"]
    assert shifted == ["Π V^0", "Π V^1", "Π V^2"]
