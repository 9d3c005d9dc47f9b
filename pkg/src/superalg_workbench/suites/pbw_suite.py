"""PBW Suite.

Description:
    Suite that checks the PBW presentations of the presets: dimensions of u(sl2), u(osp(1|2))
    and their smash products, straightening examples and idempotence, associativity on seeded
    triples, truncation identities, the super-commutation with the group-like g, the even/odd
    basis view, the associated graded algebra and the axioms of the restricted Lie data.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import itertools
import logging

import numpy as np

from superalg_workbench.algebra.graded import associated_graded
from superalg_workbench.algebra.pbw import Monomial, PBWAlgebra
from superalg_workbench.algebra.presets import build_preset, even_odd_basis_view
from superalg_workbench.algebra.restricted import (
    osp12_restricted_data,
    sl2_restricted_data,
    verify_restricted_axioms,
)
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.interfaces.suite_interface import SuiteInterface

logger = logging.getLogger(__name__)

SUITE_NAME = "pbw"


def _monomial_word(algebra: PBWAlgebra, monomial: Monomial) -> list[str]:
    return [name for name, exp in zip(algebra.names, monomial) for _ in range(exp)]


class PBWSuite(SuiteInterface):
    """Suite for the PBW engine and the preset algebras."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the PBWSuite"""
        self._p = run_config.p
        self._rng = rng

    def run(self, triples: int = 500, word_length: int = 3, axiom_samples: int = 20) -> SuiteReport:
        """Checks the presets.

        Args:
            triples: number of seeded random triples for the associativity check.
            word_length: maximal length of the generator words for the idempotence check.
            axiom_samples: sampled even elements for the restricted axioms (a) and (c).
        """
        p = self._p
        report = SuiteReport(suite=SUITE_NAME)
        sl2, osp12 = build_preset("sl2", p), build_preset("osp12", p)

        expected_dims = {"sl2": p**3, "osp12": 4 * p**3, "sl2_smash": 2 * p**3}
        expected_dims["osp12_smash"] = 8 * p**3
        for name, dim in expected_dims.items():
            algebra = build_preset(name, p)
            report.add(
                f"dim {name} = {dim}",
                "presets.dimension",
                algebra.dim == dim,
                f"computed {algebra.dim} with shape {algebra.shape}",
            )

        self._straightening(report, osp12)
        for algebra in (sl2, osp12):
            self._idempotence(report, algebra, word_length)
            self._associativity(report, algebra, triples)
        self._truncations(report, sl2, osp12)
        self._smash_signs(report)

        view = even_odd_basis_view(osp12)
        report.add(
            "even/odd monomials e^a f^b h^c E^s F^t form a basis of u(osp(1|2))",
            "osp12.even-odd-basis",
            view.invertible,
            f"{len(view.exponents)} view elements",
        )
        self._graded(report, osp12)
        self._restricted(report, axiom_samples)
        return report

    def _straightening(self, report: SuiteReport, osp12: PBWAlgebra):
        expected = osp12.generator("h") - osp12.word(["E", "F"])
        result = osp12.straighten(["F", "E"])
        report.add(
            "F·E = h - EF in u(osp(1|2))", "osp12.straightening", result == expected, repr(result)
        )
        square = osp12.straighten(["E", "E"])
        report.add(
            "E·E is the PBW monomial E^2",
            "osp12.straightening",
            square == osp12.monomial((2, 0, 0)),
            repr(square),
        )
        report.add(
            "the empty word straightens to 1",
            "osp12.straightening",
            osp12.straighten([]) == osp12.one(),
        )

    def _idempotence(self, report: SuiteReport, algebra: PBWAlgebra, word_length: int):
        checked = 0
        failure = ""
        for length in range(word_length + 1):
            for word in itertools.product(algebra.names, repeat=length):
                for monomial in algebra.straighten(word).terms:
                    checked += 1
                    again = algebra.straighten(_monomial_word(algebra, monomial))
                    if again != algebra.monomial(monomial) and not failure:
                        failure = f"{algebra.format_monomial(monomial)} from {''.join(word)}"
        report.add(
            f"straightening is idempotent on words of length <= {word_length} in {algebra.name}",
            "pbw.idempotence",
            not failure,
            failure or f"{checked} normal forms re-straightened",
        )

    def _associativity(self, report: SuiteReport, algebra: PBWAlgebra, triples: int):
        failures = 0
        for _ in range(triples):
            a, b, c = (algebra.random_element(self._rng) for _ in range(3))
            if (a * b) * c != a * (b * c):
                failures += 1
        report.add(
            f"(ab)c = a(bc) in {algebra.name}",
            "pbw.associativity",
            failures == 0,
            f"{failures} failures among {triples} seeded triples",
        )

    def _truncations(self, report: SuiteReport, sl2: PBWAlgebra, osp12: PBWAlgebra):
        p = self._p
        for algebra, words in (
            (sl2, {"e^p": ["e"] * p, "f^p": ["f"] * p}),
            (osp12, {"e^p": ["E"] * (2 * p), "f^p": ["F"] * (2 * p)}),
        ):
            for label, word in words.items():
                report.add(
                    f"{label} = 0 in {algebra.name}",
                    "nilpotency.root-vectors",
                    algebra.straighten(word).is_zero(),
                )
        h_power = sl2.straighten(["h"] * p)
        report.add("h^p = h in u(sl2)", "presets.relations", h_power == sl2.generator("h"))

    def _smash_signs(self, report: SuiteReport):
        for name in ("sl2_smash", "osp12_smash"):
            algebra = build_preset(name, self._p)
            failures = []
            for gen in algebra.gens:
                if gen.grouplike:
                    continue
                conjugated = algebra.straighten(["g", gen.name, "g"])
                sign = -1 if gen.parity else 1
                if conjugated != algebra.generator(gen.name).scale(sign):
                    failures.append(gen.name)
            report.add(
                f"g·x·g = (-1)^|x| x in {name}",
                "smash.super-commutation",
                not failures,
                f"failing generators {failures}" if failures else "",
            )

    def _graded(self, report: SuiteReport, osp12: PBWAlgebra):
        graded = associated_graded(osp12, {"E": 1, "F": 1, "h": 0})
        anticommute = graded.straighten(["F", "E"]) == graded.word(["E", "F"]).scale(-1)
        truncated = graded.straighten(["E"] * (2 * self._p)).is_zero()
        weight = graded.straighten(["h", "E"]) - graded.straighten(["E", "h"])
        report.add(
            "Gr u(osp(1|2)) has EF + FE = 0, E^{2p} = 0 and keeps [h, E] = E",
            "graded.osp12",
            anticommute and truncated and weight == graded.generator("E"),
            f"[h, E] = {weight!r}",
        )

    def _restricted(self, report: SuiteReport, samples: int):
        for name, data in (
            ("sl2", sl2_restricted_data(self._p)),
            ("osp12", osp12_restricted_data(self._p)),
        ):
            axioms = verify_restricted_axioms(data, self._p, self._rng, samples)
            report.add(
                f"restricted axioms hold for {name}",
                "restricted.axioms",
                axioms.passed,
                "; ".join(axioms.failures[:3]) or f"checked {axioms.checked}",
            )
        broken = sl2_restricted_data(self._p).with_p_map("h", [0, 0, 0])
        axioms = verify_restricted_axioms(broken, self._p, self._rng, samples)
        report.add(
            "h^[p] := 0 violates axiom (b) on sl2",
            "restricted.axioms",
            not axioms.passed and axioms.witness is not None and axioms.witness[0] == "h",
            f"witness {axioms.witness}",
        )
