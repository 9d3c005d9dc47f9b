"""Frobenius Suite.

Description:
    Suite for the extension u(sl2) ⊂ u(osp(1|2)): the dual projective pair with Σ y_i x_i = 1,
    the trace map, the split-summand certificates of the projectives, the induction functor and
    Frobenius reciprocity on seeded pairs of modules.

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
from superalg_workbench.frob.frobenius import (
    find_dual_pair,
    frobenius_reciprocity_check,
    induce,
    projectivity_certificate,
    trace_map,
    verify_dual_pair,
)
from superalg_workbench.homalg.endring import decompose
from superalg_workbench.homalg.isomorphism import is_isomorphic
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.rep.families import (
    module_of,
    osp_projectives,
    osp_simples,
    sl2_projectives,
    sl2_simples,
)
from superalg_workbench.rep.module import trivial_module

logger = logging.getLogger(__name__)

SUITE_NAME = "frobenius"


class FrobeniusSuite(SuiteInterface):
    """Suite for the Frobenius extension u(sl2) ⊂ u(osp(1|2))."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the FrobeniusSuite"""
        self._p = run_config.p
        self._rng = rng

    def run(self, reciprocity_pairs: int = 10, reconstruction_samples: int = 50) -> SuiteReport:
        """Checks the dual pair, the certificates and the induction functor.

        Args:
            reciprocity_pairs: number of seeded (sl2-module, osp-module) pairs.
            reconstruction_samples: random elements for the reconstruction identity.
        """
        report = SuiteReport(suite=SUITE_NAME)
        self._dual_pair(report, reconstruction_samples)
        self._projectivity(report)
        self._induction(report)
        self._reciprocity(report, reciprocity_pairs)
        return report

    def _dual_pair(self, report: SuiteReport, samples: int):
        p = self._p
        osp12 = build_preset("osp12", p)
        checked = verify_dual_pair(osp12, samples=samples, rng=self._rng)
        report.add(
            "Σ y_i x_i = 1 for the dual projective pair of u(osp(1|2)) over u(sl2)",
            "frobenius.dual-pair",
            checked.passed,
            f"scalars {checked.scalars}, reconstruction failures "
            f"{checked.reconstruction_failures}/{checked.reconstruction_checked}",
            {"scalars": checked.scalars},
        )
        pair = find_dual_pair(osp12)
        flipped = replace(pair, ys=pair.ys[:2] + (-pair.ys[2],) + pair.ys[3:])
        broken = verify_dual_pair(osp12, flipped, samples=0)
        report.add(
            "flipping the sign of y_3 breaks Σ y_i x_i = 1",
            "frobenius.dual-pair",
            not broken.sum_is_one,
            f"residual {broken.residual}",
        )
        simple = module_of("V", 1, p)
        identity = simple.field.identity(simple.dim)
        traced = trace_map(identity, simple, simple, pair)
        report.add(
            "Tr(id) = id on V^1",
            "frobenius.trace",
            bool(np.array_equal(traced, identity)),
        )

    def _projectivity(self, report: SuiteReport):
        p = self._p
        failures = []
        certificates = {}
        for lam in range(p):
            certificate = projectivity_certificate(module_of("P", lam, p))
            certificates[certificate.split.module_id] = certificate.split.as_certificate()
            if not certificate.projective:
                failures.append(f"P^{lam}: {certificate.restriction_summands}")
        report.add(
            "every P^λ is a summand of Ind Res P^λ with projective restriction",
            "osp12.projectives.certificate",
            not failures,
            "; ".join(failures),
            certificates,
        )
        simples = [projectivity_certificate(module_of("V", lam, p)) for lam in range(p)]
        report.add(
            "no simple V^λ is projective although each splits off Ind Res V^λ",
            "osp12.projectives.certificate",
            all(cert.split.composite_is_identity and not cert.projective for cert in simples),
            ", ".join(
                f"{cert.split.module_id}: {cert.restriction_summands}" for cert in simples
            ),
        )

    def _induction(self, report: SuiteReport):
        p = self._p
        induced = induce(trivial_module(build_preset("sl2", p)))
        report.add(
            "Ind of the trivial u(sl2)-module has dim 4", "frobenius.induce", induced.dim == 4
        )
        steinberg = module_of("V0", p - 1, p)
        summands = decompose(induce(steinberg))
        labels = []
        for summand in summands:
            match = next(
                (
                    projective.label
                    for projective in osp_projectives(p)
                    if projective.dim == summand.dim and is_isomorphic(summand, projective).is_yes
                ),
                None,
            )
            labels.append(match or f"non-projective({summand.dim})")
        report.add(
            f"Ind {steinberg.label} decomposes into projectives P^λ",
            "frobenius.induce",
            all(not label.startswith("non-projective") for label in labels),
            f"summands {labels}",
        )

    def _reciprocity(self, report: SuiteReport, pairs: int):
        p = self._p
        bases = sl2_simples(p) + sl2_projectives(p)
        targets = osp_simples(p) + osp_projectives(p)
        failures = []
        for _ in range(pairs):
            base = bases[int(self._rng.integers(len(bases)))]
            target = targets[int(self._rng.integers(len(targets)))]
            check = frobenius_reciprocity_check(base, target)
            if not check.holds:
                failures.append(
                    f"{base.label}/{target.label}: {check.induced_side} != {check.restricted_side}"
                )
        report.add(
            "dim Hom(Ind M, N) = dim Hom(M, Res N)",
            "frobenius.reciprocity",
            not failures,
            "; ".join(failures[:3]) or f"{pairs} seeded pairs",
        )
