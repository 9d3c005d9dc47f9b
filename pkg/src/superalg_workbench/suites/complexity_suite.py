"""Complexity Suite.

Description:
    Suite that resolves the trivial module over the smash products and over small quantum
    complete intersections, estimates the complexity from the growth of the minimal resolutions,
    applies the wildness criterion and compares Ext over the smash product with the
    Z2-invariants of the plain Ext.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import logging

import numpy as np

from superalg_workbench.algebra.pbw import PBWAlgebra
from superalg_workbench.algebra.presets import build_preset, build_qci
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import GROWTH_COLUMNS, SuiteReport
from superalg_workbench.homalg.complexity import (
    ComplexityError,
    WildnessStatus,
    estimate_from_dims,
    wildness_verdict,
)
from superalg_workbench.homalg.resolution import lemma27_check, minimal_resolution
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import Module, trivial_module

logger = logging.getLogger(__name__)

SUITE_NAME = "complexity"
MIN_GROWTH_DEPTH = 5
QCI_DEPTH = 6
MAX_INVARIANT_DEGREE = 4


class ComplexitySuite(SuiteInterface):
    """Suite for growth rates of minimal resolutions."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the ComplexitySuite"""
        self._p = run_config.p
        self._depth = run_config.depth

    def run(self, invariant_degrees: int = MAX_INVARIANT_DEGREE) -> SuiteReport:
        """Estimates complexities and checks the invariant Ext dimensions.

        Args:
            invariant_degrees: highest degree n of the Ext^n comparison, capped by depth - 1.
        """
        p = self._p
        report = SuiteReport(suite=SUITE_NAME)
        depth = max(self._depth, MIN_GROWTH_DEPTH)
        for name in ("sl2_smash", "osp12_smash"):
            algebra = build_preset(name, p)
            self._growth(report, trivial_module(algebra), f"trivial_{name}", depth, 2)

        qci_depth = max(min(self._depth, QCI_DEPTH), MIN_GROWTH_DEPTH)
        plane = build_qci([(2, [p - 1]), (2, [])], p, name="qci_2_2")
        self._growth(report, trivial_module(plane), "trivial_qci_2_2", qci_depth, 2)
        self._growth(report, module_of("P", 0, p), "projective", MIN_GROWTH_DEPTH, 1)

        cube = build_qci([(2, [1, 1]), (2, [1]), (2, [])], p, name="qci_2_2_2")
        self._wildness(report, cube, qci_depth, WildnessStatus.WILD)
        self._wildness(report, plane, qci_depth, WildnessStatus.NOT_DECIDED)

        self._invariants(report, min(invariant_degrees, self._depth - 1))
        return report

    def _growth(self, report: SuiteReport, module: Module, table: str, depth: int, expected: int):
        resolution = minimal_resolution(module, depth)
        estimate = estimate_from_dims(resolution.total_dims, resolution.ranks)
        report.add_table(f"growth_{table}", GROWTH_COLUMNS, resolution.growth_table())
        report.add(
            f"complexity of {module.label} over {module.algebra.name} is {expected}",
            "complexity.estimate",
            estimate.complexity == expected,
            f"{estimate.status.value}: dims {estimate.total_dims}",
        )

    def _wildness(
        self, report: SuiteReport, algebra: PBWAlgebra, depth: int, expected: WildnessStatus
    ):
        try:
            verdict = wildness_verdict(algebra, depth)
        except ComplexityError as error:
            report.add(
                f"{algebra.name} is {expected.value}", "complexity.wildness", False, str(error)
            )
            return
        report.add(
            f"{algebra.name} is {expected.value}",
            "complexity.wildness",
            verdict.status is expected,
            f"complexity {verdict.estimate.complexity}",
        )

    def _invariants(self, report: SuiteReport, max_degree: int):
        osp12 = build_preset("osp12", self._p)
        trivial = trivial_module(osp12)
        rows = []
        for degree in range(max_degree + 1):
            checked = lemma27_check(trivial, trivial, degree)
            rows.append(
                (
                    degree,
                    checked.plain_dim,
                    checked.invariant_dim,
                    checked.super_dim,
                    checked.passed,
                )
            )
        report.add_table("invariant_ext", ("n", "plain", "invariant", "super", "passed"), rows)
        failed = [row[0] for row in rows if not row[-1]]
        report.add(
            f"Ext^n over u(osp(1|2))#κZ2 is the Z2-invariant part of the plain Ext"
            f" for n <= {max_degree}",
            "smash.ext-invariants",
            not failed,
            f"failing degrees {failed}" if failed else "",
        )
