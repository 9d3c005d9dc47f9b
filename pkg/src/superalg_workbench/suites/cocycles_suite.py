"""Cocycles Suite.

Description:
    Suite for the cocycles built by coefficient extraction: ξ̂ on the graded instance of
    u(osp(1|2)) (exhaustive check on pairs), the pair functionals on u(sl2) and u(osp(1|2)),
    and the arity-2p cocycle f on u(osp(1|2)) (seeded sampling). Every cocycle carries the exact
    non-coboundary certificate; a zero table, a corrupted entry and the Cartan-free convention
    serve as negative controls.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import logging
from dataclasses import replace

import numpy as np

from superalg_workbench.algebra.presets import build_preset, osp12_graded
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.interfaces.suite_interface import SuiteException, SuiteInterface
from superalg_workbench.qci.cocycles import (
    DEFAULT_SAMPLES,
    Cocycle,
    CocycleReport,
    cocycle_c,
    cocycle_f,
    cocycle_xi_hat,
    degree_two_comparison,
    kernel_vanishing,
    verify_cocycle,
)

logger = logging.getLogger(__name__)

SUITE_NAME = "cocycles"


def _detail(result: CocycleReport) -> str:
    mode = "exhaustive" if result.exhaustive else "sampled"
    if result.witness is not None:
        return f"∂ ≠ 0 at {result.witness} ({mode})"
    return f"∂ = 0 on {result.checked_tuples} tuples ({mode})"


class CocyclesSuite(SuiteInterface):
    """Suite for the ξ̂, c and f cocycles."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the CocyclesSuite"""
        self._p = run_config.p
        self._rng = rng

    def run(self, samples: int = DEFAULT_SAMPLES) -> SuiteReport:
        """Verifies the cocycles and the negative controls.

        Args:
            samples: number of seeded tuples for the sampled check of f.

        Raises:
            SuiteException, if samples is not positive.
        """
        if samples < 1:
            raise SuiteException(f"samples must be positive, got {samples}")
        report = SuiteReport(suite=SUITE_NAME)
        self._xi_hat(report)
        self._pair_functionals(report)
        self._f(report, samples)
        return report

    def _certify(self, report: SuiteReport, cocycle: Cocycle, anchor: str, **kwargs):
        result = verify_cocycle(cocycle, rng=self._rng, **kwargs)
        report.add(
            f"∂{cocycle.name} = 0 on {cocycle.algebra.name}",
            anchor,
            result.passed,
            _detail(result),
            {"witness": result.witness} if result.witness else None,
        )
        report.add(
            f"{cocycle.name} is not a coboundary",
            anchor,
            result.noncoboundary,
            f"value 1 on {result.nonzero_witness}" if result.noncoboundary else "",
            result.as_certificate(),
        )
        return result

    def _xi_hat(self, report: SuiteReport):
        p = self._p
        graded = osp12_graded(p)
        top = 2 * p
        for generator in ("E", "F"):
            cocycle = cocycle_xi_hat(graded, generator)
            self._certify(report, cocycle, "qci.cocycles.xi-hat")
            comparison = degree_two_comparison(graded, generator)
            report.add(
                f"ξ{graded.index_of(generator) + 1} and {cocycle.name} agree on K_2",
                "qci.cocycles.degree-two",
                comparison.matches,
                f"{len(comparison.rows)} generators of K_2",
                {"rows": comparison.rows},
            )
            offending = kernel_vanishing(cocycle)
            report.add(
                f"{cocycle.name} vanishes on monomials of the other generator",
                "qci.cocycles.kernel",
                not offending,
                f"{len(offending)} offending monomials",
            )

        xi_e = cocycle_xi_hat(graded, "E")
        report.add(
            f"ξ̂_E(E, E^{top - 1}) = 1 and ξ̂_E(F, F) = 0",
            "qci.cocycles.xi-hat",
            xi_e.value([(1, 0), (top - 1, 0)]) == 1 and xi_e.value([(0, 1), (0, 1)]) == 0,
        )

        zero = replace(xi_e, name="zero", table=np.zeros_like(xi_e.table), _support=None)
        result = verify_cocycle(zero, rng=self._rng)
        report.add(
            "the zero cocycle passes ∂ = 0 and fails the non-coboundary certificate",
            "cocycles.controls",
            result.passed and not result.noncoboundary,
        )
        corrupted = xi_e.with_entry((2, 0), (top - 2, 0), 0)
        result = verify_cocycle(corrupted, rng=self._rng)
        report.add(
            f"{corrupted.name} with ξ̂_E(E², E^{top - 2}) := 0 has ∂ ≠ 0",
            "cocycles.controls",
            not result.passed and result.witness is not None,
            f"witness {result.witness}",
        )

    def _pair_functionals(self, report: SuiteReport):
        p = self._p
        sl2 = build_preset("sl2", p)
        osp12 = build_preset("osp12", p)
        self._certify(report, cocycle_c(sl2, "e"), "sl2.cocycles.pair")
        self._certify(report, cocycle_c(osp12, "E"), "osp12.cocycles.pair")
        cartan_free = cocycle_c(osp12, "E", cartan_free=True)
        result = verify_cocycle(cartan_free, rng=self._rng, exhaustive_limit=osp12.dim)
        report.add(
            "c_E with the Cartan-free convention is not a cocycle on u(osp(1|2))",
            "osp12.cocycles.convention",
            not result.passed,
            _detail(result),
        )

    def _f(self, report: SuiteReport, samples: int):
        p = self._p
        osp12 = build_preset("osp12", p)
        cocycle = cocycle_f(osp12, "E")
        result = self._certify(report, cocycle, "osp12.cocycles.f", samples=samples)
        top = (2 * p - 1, 0, 0)
        report.add(
            f"f_E(E, E^{2 * p - 1}, ..., E, E^{2 * p - 1}) = 1",
            "osp12.cocycles.f",
            cocycle.value([(1, 0, 0), top] * p) == 1,
            f"checked {result.checked_tuples} sampled tuples",
        )
