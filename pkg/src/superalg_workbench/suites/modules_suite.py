"""Modules Suite.

Description:
    Suite that builds every module family of the catalogue and checks the relations, the
    dimension table, the semisimple h-action, the parity involution, the Schur property of the
    simples, the smash-module g-action, a corrupted action and the restriction identities of the
    projectives to u(sl2).

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import logging
from dataclasses import replace

import numpy as np

from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.homalg.hom import hom_dim
from superalg_workbench.homalg.isomorphism import is_isomorphic
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.rep.families import (
    FamilyParams,
    make_module,
    module_of,
    osp_simples,
)
from superalg_workbench.rep.module import (
    Module,
    check_relations,
    direct_sum,
    parity_change,
    regular_module,
    restrict,
    to_smash_module,
)

logger = logging.getLogger(__name__)

SUITE_NAME = "modules"


def expected_dim(params: FamilyParams, p: int) -> int:
    """Dimensions of the family members read off their bases."""
    lam, n = params.lam, params.n
    if params.family == "V":
        return 2 * lam + 1
    if params.family in ("W", "Wt"):
        return 2 * p
    if params.family == "P":
        return 4 * p
    if params.family in ("Vn", "Vtn"):
        return (n + 1) * (2 * lam + 1) + n * (2 * p - 2 * lam - 1)
    if params.family in ("Wn", "Wtn"):
        return 2 * p * n
    if params.family in ("T", "Tt"):
        return 4 * p * n
    if params.family == "V0":
        return lam + 1
    return 2 * p


def family_members(p: int, n_max: int) -> list[FamilyParams]:
    members = []
    for lam in range(p):
        members += [FamilyParams(family, lam) for family in ("V", "W", "Wt", "P", "V0")]
        if lam <= p - 2:
            members.append(FamilyParams("P0", lam))
        for n in range(1, n_max + 1):
            members += [FamilyParams(family, lam, n) for family in ("Vn", "Vtn", "Wn", "Wtn")]
            for s1 in range(1, p):
                members += [FamilyParams(family, lam, n, (s1, 1)) for family in ("T", "Tt")]
    return members


def _parity_consistent(module: Module) -> bool:
    signs = module.sign_matrix()
    field_ = module.field
    for gen, matrix in zip(module.algebra.gens, module.action):
        twisted = field_.chain([signs, matrix, signs])
        expected = -matrix if gen.parity else matrix
        if not field_.is_zero(twisted - expected):
            return False
    return True


class ModulesSuite(SuiteInterface):
    """Suite for the module families and the structural module operations."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the ModulesSuite"""
        self._p = run_config.p
        self._n_max = run_config.n_max

    def run(self, n_max=None) -> SuiteReport:
        """Checks all family members up to length n_max.

        Args:
            n_max: overrides the string and band length of the run configuration.
        """
        p = self._p
        n_max = self._n_max if n_max is None else int(n_max)
        report = SuiteReport(suite=SUITE_NAME)

        relation_failures, dim_failures, parity_failures, semisimple_failures = [], [], [], []
        members = family_members(p, n_max)
        for params in members:
            module = make_module(params, p)
            check = check_relations(module)
            if not check.passed:
                relation_failures.append(f"{module.label}: {check.relation}")
            if module.dim != expected_dim(params, p):
                dim_failures.append(f"{module.label}: {module.dim}")
            if not _parity_consistent(module):
                parity_failures.append(module.label)
            h_matrix = module.matrix("h")
            if np.count_nonzero(h_matrix - np.diag(np.diag(h_matrix))):
                semisimple_failures.append(module.label)
        count = len(members)
        report.add(
            f"all {count} family members satisfy the defining relations",
            "families.relations",
            not relation_failures,
            "; ".join(relation_failures[:3]),
        )
        report.add(
            "dimension table 2λ+1, 2p, 4p, 4pn",
            "families.dimensions",
            not dim_failures,
            "; ".join(dim_failures[:3]),
        )
        report.add(
            "even generators preserve and odd generators swap the parity blocks",
            "families.parity",
            not parity_failures,
            ", ".join(parity_failures[:3]),
        )
        report.add(
            "h acts diagonally on every family basis",
            "families.h-semisimple",
            not semisimple_failures,
            ", ".join(semisimple_failures[:3]),
        )

        self._simples(report)
        self._operations(report)
        self._restriction_identities(report)
        return report

    def _simples(self, report: SuiteReport):
        p = self._p
        simples = osp_simples(p)
        table = [[hom_dim(source, target) for target in simples] for source in simples]
        schur = all(
            table[i][j] == (1 if i == j else 0) for i in range(p) for j in range(p)
        )
        report.add(
            f"exactly {p} pairwise non-isomorphic simples V^λ with Hom(V^λ, V^μ) = δ κ",
            "osp12.simples",
            schur and len(simples) == p,
            f"hom table {table}",
        )
        weights = [int(value) for value in np.diag(module_of("V", p - 1, p).matrix("h"))]
        expected = [(p - 1 - i) % p for i in range(2 * p - 1)]
        report.add(
            "h v_i = (λ - i) v_i on V^{p-1}",
            "osp12.simples",
            weights == expected,
            f"eigenvalues {weights}",
        )

    def _operations(self, report: SuiteReport):
        p = self._p
        v1 = module_of("V", 1, p)
        broken = replace(v1, action=(np.zeros_like(v1.action[0]),) + tuple(v1.action[1:]))
        check = check_relations(broken)
        report.add(
            "V^1 with E acting by 0 violates EF + FE = h",
            "families.relations",
            not check.passed,
            f"violated {check.relation}",
        )
        smash_v1 = to_smash_module(v1)
        g_diagonal = [int(value) for value in np.diag(smash_v1.matrix("g"))]
        report.add(
            "g acts on V^1 by diag(1, -1, 1)",
            "smash.modules",
            g_diagonal == [1, p - 1, 1] and check_relations(smash_v1).passed,
            f"g diagonal {g_diagonal}",
        )
        twice = parity_change(parity_change(v1))
        report.add("Π∘Π is the identity", "parity-change", twice.parity == v1.parity)
        plain = is_isomorphic(v1, parity_change(v1))
        smash_iso = is_isomorphic(to_smash_module(v1), to_smash_module(parity_change(v1)))
        report.add(
            "ΠV^1 and V^1 are isomorphic as modules but not as supermodules",
            "parity-change",
            plain.is_yes and smash_iso.is_no,
            f"plain {plain.status.value}, super {smash_iso.status.value}",
        )
        regular = regular_module(build_preset("osp12", p))
        report.add(
            f"the regular module of u(osp(1|2)) has dim {4 * p**3}",
            "regular-module",
            regular.dim == 4 * p**3 and check_relations(regular).passed,
        )
        w = module_of("W", 0, p)
        natural = restrict(direct_sum(v1, w))
        summed = direct_sum(restrict(v1), restrict(w))
        report.add(
            "restriction commutes with direct sums",
            "restriction.naturality",
            all(np.array_equal(a, b) for a, b in zip(natural.action, summed.action)),
        )

    def _restriction_identities(self, report: SuiteReport):
        p = self._p
        steinberg = module_of("V0", p - 1, p)
        for lam in range(p):
            top = p - 1 - lam
            projective = module_of("P", top, p)
            if top in (0, p - 1):
                base = module_of("P0", min(top, p - 2), p)
                expected = direct_sum(base, steinberg, steinberg)
                label = f"{base.label} ⊕ 2{steinberg.label}"
            else:
                first, second = module_of("P0", top, p), module_of("P0", top - 1, p)
                expected = direct_sum(first, second)
                label = f"{first.label} ⊕ {second.label}"
            result = is_isomorphic(restrict(projective), expected)
            report.add(
                f"res {projective.label} ≅ {label}",
                "osp12.restriction",
                result.is_yes,
                result.status.value if not result.obstruction else result.obstruction,
            )
