"""Endomorphism Rings Suite.

Description:
    Suite that checks the endomorphism rings of the projectives (the local shape for the middle
    weight and the two-vertex shape for the paired weights), the bricks among the simples and
    Verma modules, composition factors, and non-split extension certificates for the Verma
    modules, the projectives and the homogeneous tubes of band modules.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import logging
from typing import Optional

import numpy as np

from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.homalg.catalogue import catalogue_for
from superalg_workbench.homalg.composition import composition_factors, factor_labels
from superalg_workbench.homalg.endring import (
    brick_report,
    decompose,
    end_ring,
    lambda1_shape,
    lambda2_shape,
)
from superalg_workbench.homalg.extensions import ExtensionStatus, nonsplit_extension_check
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.rep.families import module_of
from superalg_workbench.rep.module import Module, direct_sum

logger = logging.getLogger(__name__)

SUITE_NAME = "endrings"


class EndRingsSuite(SuiteInterface):
    """Suite for endomorphism rings and extensions of the u(osp(1|2)) families."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the EndRingsSuite"""
        self._p = run_config.p

    def run(self, tubes: bool = True) -> SuiteReport:
        """Checks the End rings and the extensions.

        Args:
            tubes: certify 0 → T(1) → T(2) → T(1) → 0 for the band modules of every weight.
        """
        report = SuiteReport(suite=SUITE_NAME)
        self._projectives(report)
        self._bricks(report)
        self._factors(report)
        self._extensions(report)
        if tubes:
            self._tubes(report)
        return report

    def _projectives(self, report: SuiteReport):
        p = self._p
        middle = (p - 1) // 2
        shape = lambda1_shape(module_of("P", middle, p))
        report.add(
            f"End(P^{middle}) is local of dim 4 with two loops x, y and rad³ = 0",
            "osp12.end.local-shape",
            shape.matches,
            shape.detail,
            {"loewy": shape.loewy, "scalars": shape.scalars, "orientation": shape.orientation},
        )
        for lam in range(middle):
            first, second = module_of("P", lam, p), module_of("P", p - 1 - lam, p)
            shape = lambda2_shape(first, second)
            report.add(
                f"End({first.label} ⊕ {second.label}) has dim 8 and the two-vertex shape",
                "osp12.end.two-vertex-shape",
                shape.matches and shape.loewy[0] == 8,
                shape.detail or f"Loewy {shape.loewy}",
                {"loewy": shape.loewy, "scalars": shape.scalars},
            )
        for lam in range(p):
            ring = end_ring(module_of("P", lam, p))
            report.add(
                f"P^{lam} is indecomposable",
                "osp12.projectives",
                ring.is_local,
                f"dim End = {ring.dim}",
            )
        pieces = decompose(direct_sum(module_of("V", 1, p), module_of("V", 2 % p, p)))
        report.add(
            "decompose(V^1 ⊕ V^2) returns two simple summands",
            "decompose.direct-sum",
            sorted(piece.dim for piece in pieces) == sorted([3, 2 * (2 % p) + 1]),
            f"summand dims {[piece.dim for piece in pieces]}",
        )

    def _bricks(self, report: SuiteReport):
        p = self._p
        middle = (p - 1) // 2
        simples = [brick_report(module_of("V", lam, p)) for lam in range(p)]
        report.add(
            "End(V^λ) ≅ κ for every simple",
            "osp12.bricks",
            all(brick.is_brick for brick in simples),
            ", ".join(f"{brick.label}: {brick.end_dim}" for brick in simples),
        )
        for family in ("W", "Wt"):
            bricks = [brick_report(module_of(family, lam, p)) for lam in range(p)]
            expected = [2 if lam == middle else 1 for lam in range(p)]
            report.add(
                f"End({family}^λ) ≅ κ except κ[x]/(x²) at λ = (p-1)/2",
                "osp12.verma.bricks",
                [brick.end_dim for brick in bricks] == expected
                and bricks[middle].radical_dim == 1,
                ", ".join(f"{brick.label}: {brick.end_dim}" for brick in bricks),
            )

    def _factors(self, report: SuiteReport):
        p = self._p
        catalogue = catalogue_for(build_preset("osp12", p))
        for lam in range(p):
            other = p - 1 - lam
            expected: dict[str, int] = {}
            for index in (lam, lam, other, other):
                expected[f"V^{index}"] = expected.get(f"V^{index}", 0) + 1
            factors = factor_labels(
                composition_factors(module_of("P", lam, p), catalogue), catalogue
            )
            report.add(
                f"P^{lam} has composition factors 2V^{lam} + 2V^{other}",
                "osp12.projectives.factors",
                factors == expected,
                f"computed {factors}",
            )
            verma = factor_labels(
                composition_factors(module_of("W", lam, p), catalogue), catalogue
            )
            expected_verma: dict[str, int] = {}
            for index in (lam, other):
                expected_verma[f"V^{index}"] = expected_verma.get(f"V^{index}", 0) + 1
            report.add(
                f"W^{lam} has composition factors V^{lam} + V^{other}",
                "osp12.verma.factors",
                verma == expected_verma,
                f"computed {verma}",
            )

    def _certify(
        self,
        report: SuiteReport,
        sub: Module,
        top: Module,
        middle: Module,
        anchor: str,
        expected: ExtensionStatus = ExtensionStatus.NONSPLIT,
        claim: Optional[str] = None,
    ):
        certificate = nonsplit_extension_check(sub, top, middle)
        claim = claim or f"0 → {sub.label} → {middle.label} → {top.label} → 0 does not split"
        data = None
        if certificate.embedding is not None:
            data = {"status": certificate.status, "embedding": certificate.embedding}
            if certificate.certificate is not None:
                data["no_retraction"] = certificate.certificate
        report.add(
            claim,
            anchor,
            certificate.status is expected,
            certificate.status.value + (f": {certificate.detail}" if certificate.detail else ""),
            data,
        )

    def _extensions(self, report: SuiteReport):
        p = self._p
        catalogue = catalogue_for(build_preset("osp12", p))
        for lam in range(p):
            other = p - 1 - lam
            self._certify(
                report,
                module_of("V", other, p),
                module_of("V", lam, p),
                module_of("W", lam, p),
                "osp12.verma.extensions",
            )
            twin = module_of("Wt", lam, p)
            head = catalogue.heads(twin)
            top = head[0] if len(head) == 1 else lam
            sub = lam + other - top
            self._certify(
                report,
                module_of("V", sub, p),
                module_of("V", top, p),
                twin,
                "osp12.verma.extensions",
            )
            self._certify(
                report,
                module_of("W", lam, p),
                module_of("W", other, p),
                module_of("P", other, p),
                "osp12.projectives.extensions",
            )
        simple = module_of("V", 0, p)
        self._certify(
            report,
            simple,
            simple,
            direct_sum(simple, simple),
            "extensions.split",
            ExtensionStatus.SPLIT,
            "0 → V^0 → V^0 ⊕ V^0 → V^0 → 0 splits",
        )

    def _tubes(self, report: SuiteReport):
        p = self._p
        for lam in range(p):
            band = module_of("T", lam, p, 1, (1, 1))
            self._certify(
                report, band, band, module_of("T", lam, p, 2, (1, 1)), "osp12.tubes.extensions"
            )
