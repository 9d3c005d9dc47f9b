"""Isomorphism Sweep Suite.

Description:
    Suite that sweeps the isomorphism test over the band modules T^λ(s, n), whose class only
    depends on the product s1·s2, checks reflexivity and symmetry of the test on the family
    catalogue, the additivity of the decomposition on seeded pairs and that random quotients of
    sums of projectives only decompose into catalogue members.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import itertools
import logging
from collections import defaultdict
from typing import Optional

import numpy as np

from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.homalg.endring import decompose
from superalg_workbench.homalg.isomorphism import is_isomorphic
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.rep.families import make_module, module_of
from superalg_workbench.rep.module import (
    Module,
    direct_sum,
    generated_submodule_basis,
    quotient,
)
from superalg_workbench.suites.modules_suite import family_members

logger = logging.getLogger(__name__)

SUITE_NAME = "iso-sweep"
SL2_FAMILIES = ("V0", "P0")
TUBE_COLUMNS = ("s1", "s2", "t1", "t2", "status", "expected")


def osp_members(p: int, n_max: int) -> list[Module]:
    return [
        make_module(params, p)
        for params in family_members(p, n_max)
        if params.family not in SL2_FAMILIES
    ]


def find_member(module: Module, members: list[Module]) -> Optional[Module]:
    return next(
        (
            member
            for member in members
            if member.dim == module.dim and is_isomorphic(module, member).is_yes
        ),
        None,
    )


def same_multiset(left: list[Module], right: list[Module]) -> bool:
    """Multisets of modules agree up to isomorphism."""
    remaining = list(right)
    for module in left:
        match = next(
            (
                index
                for index, other in enumerate(remaining)
                if other.dim == module.dim and is_isomorphic(module, other).is_yes
            ),
            None,
        )
        if match is None:
            return False
        remaining.pop(match)
    return not remaining


class IsoSweepSuite(SuiteInterface):
    """Suite for the isomorphism test and the completeness of the catalogue."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the IsoSweepSuite"""
        self._p = run_config.p
        self._rng = rng

    def run(
        self,
        lam: int = 0,
        n_max: int = 2,
        symmetry_pairs: int = 30,
        additivity_pairs: int = 10,
        quotients: int = 20,
    ) -> SuiteReport:
        """Runs the sweeps.

        Args:
            lam: weight of the band modules in the T-sweep.
            n_max: largest length of the family members used in the catalogue checks.
            symmetry_pairs: seeded pairs of equal dimension for the symmetry check.
            additivity_pairs: seeded pairs for decompose(M ⊕ N) = decompose(M) ⊎ decompose(N).
            quotients: seeded random quotients of sums of projectives.
        """
        report = SuiteReport(suite=SUITE_NAME)
        self._tube_sweep(report, lam % self._p)
        members = osp_members(self._p, n_max)
        self._reflexive_symmetric(report, members, symmetry_pairs)
        self._additivity(report, members, additivity_pairs)
        self._completeness(report, members, quotients)
        return report

    def _tube_sweep(self, report: SuiteReport, lam: int):
        p = self._p
        units = range(1, p)
        parameters = list(itertools.product(units, units))
        bands = {s: module_of("T", lam, p, 1, s) for s in parameters}
        rows = []
        mismatches = []
        for s, t in itertools.product(parameters, parameters):
            result = is_isomorphic(bands[s], bands[t])
            expected = (s[0] * s[1] - t[0] * t[1]) % p == 0
            rows.append((s[0], s[1], t[0], t[1], result.status.value, expected))
            if result.is_yes != expected or not (result.is_yes or result.is_no):
                mismatches.append(f"{s}/{t}: {result.status.value}")
        report.add_table("tubes", TUBE_COLUMNS, rows)
        report.add(
            f"T^{lam}(s, 1) ≅ T^{lam}(t, 1) iff s1·s2 = t1·t2, over all {len(rows)} pairs",
            "osp12.tubes.isomorphism",
            not mismatches,
            "; ".join(mismatches[:3]) or f"{len(rows)} pairs",
        )

    def _reflexive_symmetric(self, report: SuiteReport, members: list[Module], pairs: int):
        failures = [member.label for member in members if not is_isomorphic(member, member).is_yes]
        report.add(
            f"M ≅ M for all {len(members)} family members",
            "isomorphism.reflexive",
            not failures,
            ", ".join(failures[:3]),
        )
        by_dim = defaultdict(list)
        for member in members:
            by_dim[member.dim].append(member)
        candidates = [group for group in by_dim.values() if len(group) > 1]
        asymmetric = []
        for _ in range(pairs if candidates else 0):
            group = candidates[int(self._rng.integers(len(candidates)))]
            first, second = (group[int(i)] for i in self._rng.choice(len(group), 2, replace=False))
            forward, backward = is_isomorphic(first, second), is_isomorphic(second, first)
            if forward.status is not backward.status:
                asymmetric.append(f"{first.label}/{second.label}")
        report.add(
            "M ≅ N iff N ≅ M on seeded pairs of equal dimension",
            "isomorphism.symmetric",
            not asymmetric,
            ", ".join(asymmetric[:3]) or f"{pairs} pairs",
        )

    def _additivity(self, report: SuiteReport, members: list[Module], pairs: int):
        failures = []
        for _ in range(pairs):
            first, second = (members[int(i)] for i in self._rng.choice(len(members), 2))
            pieces = decompose(direct_sum(first, second))
            expected = decompose(first) + decompose(second)
            if not same_multiset(pieces, expected):
                failures.append(f"{first.label} ⊕ {second.label}")
        report.add(
            "decompose(M ⊕ N) = decompose(M) ⊎ decompose(N)",
            "decompose.additivity",
            not failures,
            ", ".join(failures[:3]) or f"{pairs} seeded pairs",
        )

    def _random_quotient(self) -> Module:
        p = self._p
        count = int(self._rng.integers(1, 3))
        projectives = [module_of("P", int(lam), p) for lam in self._rng.integers(0, p, size=count)]
        total = direct_sum(*projectives)
        even = np.array([bit == 0 for bit in total.parity])
        seed = total.field.random_matrix(self._rng, total.dim, 1)[:, 0] * even
        # E·w lies in the radical, so the quotient is nonzero
        vector = total.field.matmul(total.matrix("E"), seed)
        basis = generated_submodule_basis(total, [vector])
        return quotient(total, basis, f"{total.label}/⟨v⟩")

    def _completeness(self, report: SuiteReport, members: list[Module], quotients: int):
        unmatched = []
        pieces_seen = 0
        for _ in range(quotients):
            module = self._random_quotient()
            if module.dim == 0:
                continue
            for piece in decompose(module, rng=self._rng):
                pieces_seen += 1
                if find_member(piece, members) is None:
                    unmatched.append(f"{module.label}: summand of dim {piece.dim}")
        report.add(
            "summands of random quotients of ⊕P^λ are catalogue members",
            "catalogue.completeness",
            not unmatched,
            "; ".join(unmatched[:3]) or f"{pieces_seen} summands matched",
        )
