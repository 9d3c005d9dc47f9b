"""QCI Suite.

Description:
    Suite for the cohomology of quantum complete intersections. For seeded configurations of
    truncations and q-parameters it builds the Koszul resolution, checks exactness, compares
    dim Ext^n with the binomial closed form and with the bar-complex oracle, and checks the
    relations between the classes ξ_i and η_i as identities of chain-map composites. On the
    graded instance of u(osp(1|2)) it checks the h- and g-actions on the classes.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from superalg_workbench.algebra.pbw import PBWAlgebra
from superalg_workbench.algebra.presets import build_qci, osp12_graded
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import QCI_EXT_COLUMNS, SuiteReport
from superalg_workbench.interfaces.suite_interface import SuiteException, SuiteInterface
from superalg_workbench.qci.bar import DEFAULT_BUDGET, bar_ext_dims
from superalg_workbench.qci.chain_maps import (
    ChainMapError,
    chain_map_class,
    composite_induced,
    eta_coefficient,
    verify_lemma32,
    verify_weight_actions,
)
from superalg_workbench.qci.koszul import (
    KoszulResolutionError,
    build_koszul,
    closed_form_dim,
    exactness_check,
    ext_dims_qci,
    qci_data,
)

logger = logging.getLogger(__name__)

SUITE_NAME = "qci"
MAX_QCI_DEPTH = 6
MIN_RELATION_DEPTH = 4


@dataclass(frozen=True)
class QCIConfiguration:
    """Truncations N_i and the q_ij (i < j) of one seeded instance."""

    truncations: tuple[int, ...]
    q_rows: tuple[tuple[int, ...], ...]

    @property
    def spec(self) -> list[tuple[int, list[int]]]:
        return [(n, list(row)) for n, row in zip(self.truncations, self.q_rows)]

    @property
    def name(self) -> str:
        q_values = [value for row in self.q_rows for value in row]
        return "qci_" + "_".join(map(str, self.truncations)) + "_q" + "_".join(map(str, q_values))


def seeded_configurations(
    rng: np.random.Generator, p: int, count: int, max_generators: int = 3
) -> list[QCIConfiguration]:
    """Random instances with 1..max_generators generators, N_i ∈ {2,3,4} and ∏N_i <= 64."""
    configurations = []
    while len(configurations) < count:
        size = int(rng.integers(1, max_generators + 1))
        truncations = tuple(int(value) for value in rng.integers(2, 5, size=size))
        if math.prod(truncations) > 64:
            continue
        q_rows = tuple(
            tuple(int(value) for value in rng.integers(1, p, size=size - 1 - i))
            for i in range(size)
        )
        configurations.append(QCIConfiguration(truncations, q_rows))
    return configurations


class QCISuite(SuiteInterface):
    """Suite for Koszul resolutions, Ext dimensions and cup-product relations of QCIs."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the QCISuite"""
        self._p = run_config.p
        self._depth = run_config.depth
        self._rng = rng

    def run(self, configurations: int = 10, oracle_budget: int = DEFAULT_BUDGET) -> SuiteReport:
        """Checks the seeded instances, the fixed examples and the weight actions.

        Args:
            configurations: number of seeded (N_i, q) instances.
            oracle_budget: largest number of bar chains the oracle may enumerate per degree.

        Raises:
            SuiteException, if the number of configurations or the budget is negative.
        """
        if configurations < 0 or oracle_budget < 0:
            raise SuiteException(
                f"configurations and oracle_budget must be non-negative, got "
                f"{configurations} and {oracle_budget}"
            )
        report = SuiteReport(suite=SUITE_NAME)
        depth = min(self._depth, MAX_QCI_DEPTH)
        rows = []
        for configuration in seeded_configurations(self._rng, self._p, configurations):
            algebra = build_qci(configuration.spec, self._p, name=configuration.name)
            rows += self._instance(report, algebra, depth, oracle_budget)
        report.add_table("ext", ("instance",) + QCI_EXT_COLUMNS, rows)
        self._examples(report)
        self._weight_actions(report, depth)
        return report

    def _instance(
        self, report: SuiteReport, algebra: PBWAlgebra, depth: int, budget: int
    ) -> list[tuple]:
        relation_depth = max(depth, MIN_RELATION_DEPTH)
        try:
            resolution = build_koszul(algebra, relation_depth)
        except KoszulResolutionError as error:
            report.add(
                f"d∘d = 0 on K_• of {algebra.name}", "qci.koszul.differential", False, str(error)
            )
            return []
        report.add(
            f"d∘d = 0 on K_• of {algebra.name} up to degree {relation_depth}",
            "qci.koszul.differential",
            True,
            f"ranks {resolution.ranks}",
        )
        exactness = exactness_check(resolution)
        report.add(
            f"K_• of {algebra.name} is exact",
            "qci.koszul.exactness",
            exactness.exact,
            f"homology {exactness.homology}",
        )

        computed = ext_dims_qci(algebra, depth, resolution)
        closed_form = [closed_form_dim(n, algebra.rank) for n in range(depth + 1)]
        oracle = bar_ext_dims(algebra, depth, budget)
        compared = [n for n, value in enumerate(oracle) if value is not None]
        report.add(
            f"dim Ext^n of {algebra.name} is C(n+N-1, N-1) for n <= {depth}",
            "qci.ext.closed-form",
            computed == closed_form,
            f"computed {computed}",
        )
        report.add(
            f"the bar oracle agrees with the Koszul count of {algebra.name}",
            "qci.ext.bar-oracle",
            all(oracle[n] == computed[n] for n in compared),
            f"compared degrees {compared}",
            {"oracle": oracle},
        )

        try:
            relations = verify_lemma32(algebra, relation_depth)
        except ChainMapError as error:
            report.add(
                f"ξ and η relations hold for {algebra.name}", "qci.relations", False, str(error)
            )
        else:
            failures = [f"{check.relation}@{check.degree}" for check in relations.failures()]
            report.add(
                f"ξ and η relations hold for {algebra.name}",
                "qci.relations",
                relations.passed,
                "; ".join(failures[:3]) or f"{len(relations.checks)} identities",
            )
        return [
            (algebra.name, n, computed[n], closed_form[n], oracle[n]) for n in range(depth + 1)
        ]

    def _examples(self, report: SuiteReport):
        p = self._p
        exterior = build_qci([(2, [])], p, name="exterior")
        report.add(
            "K_• of κ[x]/(x²) has ranks (1,1,1,1,1)",
            "qci.koszul.ranks",
            build_koszul(exterior, 4).ranks == [1] * 5,
        )
        plane = build_qci([(2, [-1]), (2, [])], p, name="qci_2_2")
        report.add(
            "K_• of QCI(2,2), q = -1 has ranks (1,2,3,4)",
            "qci.koszul.ranks",
            build_koszul(plane, 3).ranks == [1, 2, 3, 4],
        )
        report.add(
            "dim Ext^4 = 15 for three generators",
            "qci.ext.closed-form",
            ext_dims_qci(build_qci([(2, [1, 1]), (2, [1]), (2, [])], p), 4)[4] == 15,
        )
        if p != 5:
            return
        instance = build_qci([(3, [2]), (2, [])], p, name="qci_3_2")
        truncations, q_matrix = qci_data(instance)
        coefficient = eta_coefficient((1, 1), 0, truncations, q_matrix, instance.field)
        report.add(
            "η1 has coefficient -2 on Ψ(1,1) for q = 2",
            "qci.chain-maps.eta",
            coefficient == instance.field.scalar(-2),
            f"coefficient {coefficient}",
        )
        resolution = build_koszul(instance, MIN_RELATION_DEPTH)
        xi = [chain_map_class("xi", i, instance, MIN_RELATION_DEPTH, resolution) for i in range(2)]
        left = composite_induced(xi[0], xi[1], MIN_RELATION_DEPTH)
        right = composite_induced(xi[1], xi[0], MIN_RELATION_DEPTH)
        report.add(
            "ξ1ξ2 = 4·ξ2ξ1 for N = (3,2), q = 2",
            "qci.relations",
            instance.field.is_zero(left - 4 * right) and not instance.field.is_zero(left),
        )

    def _weight_actions(self, report: SuiteReport, depth: int):
        graded = osp12_graded(self._p)
        actions = verify_weight_actions(graded, depth)
        report.add(
            "the h- and g-actions commute with d on the graded instance of u(osp(1|2))",
            "osp12.graded.actions",
            actions.commutes_h and actions.commutes_g,
        )
        report.add(
            "h·ξ_i = -N_iα_i ξ_i, h·η_i = -α_i η_i and g·η_i = -η_i for odd generators",
            "osp12.graded.class-actions",
            actions.class_actions == actions.expected_actions,
            f"computed {actions.class_actions}",
            {"expected": actions.expected_actions},
        )
        report.add(
            "ξ_i^p is fixed by h and g",
            "osp12.graded.invariants",
            all(actions.power_invariant.values()),
            f"invariant dims {actions.invariant_dims}",
        )
