"""Blocks Suite.

Description:
    Suite that computes the block partitions of u(osp(1|2)) and u(sl2) from the Ext^1-linkage of
    their simples, checks the pairings λ ~ p-1-λ and λ ~ p-2-λ, the independence of the
    enumeration order, and the Ext^1 dimensions between the simples of u(osp(1|2)).

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import logging

import numpy as np

from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.core.configuration import RunConfig
from superalg_workbench.core.report import SuiteReport
from superalg_workbench.homalg.blocks import BlockPartition, blocks
from superalg_workbench.homalg.resolution import ext_dim, minimal_resolution
from superalg_workbench.interfaces.suite_interface import SuiteInterface
from superalg_workbench.rep.families import module_of

logger = logging.getLogger(__name__)

SUITE_NAME = "blocks"


def expected_partition(symbol: str, pairs: list[tuple[int, ...]]) -> set[frozenset[str]]:
    return {frozenset(f"{symbol}^{lam}" for lam in pair) for pair in pairs}


def pairing_text(partition: BlockPartition) -> str:
    """'blocks: 2, pairing {0,2},{1}'."""
    groups = sorted(
        sorted(int(label.split("^")[-1]) for label in block) for block in partition.blocks
    )
    pairing = ",".join("{" + ",".join(str(lam) for lam in group) + "}" for group in groups)
    return f"blocks: {len(partition)}, pairing {pairing}"


class BlocksSuite(SuiteInterface):
    """Suite for the block decompositions of the presets."""

    def __init__(self, run_config: RunConfig, rng: np.random.Generator):
        """Initializes the BlocksSuite"""
        self._p = run_config.p
        self._rng = rng

    def run(self, permutation_check: bool = True) -> SuiteReport:
        """Computes the block partitions.

        Args:
            permutation_check: recompute the osp(1|2) blocks with a random enumeration order.
        """
        p = self._p
        report = SuiteReport(suite=SUITE_NAME)
        half = (p + 1) // 2

        osp12 = build_preset("osp12", p)
        osp_blocks = blocks(osp12)
        osp_pairs = [tuple(sorted({lam, p - 1 - lam})) for lam in range(half)]
        report.add(
            f"u(osp(1|2)) has {half} blocks {{V^λ, V^(p-1-λ)}}",
            "osp12.blocks.pairing",
            osp_blocks.as_sets() == expected_partition("V", osp_pairs),
            pairing_text(osp_blocks),
            {"blocks": [list(block) for block in osp_blocks.blocks]},
        )

        sl2_blocks = blocks(build_preset("sl2", p))
        sl2_pairs = [tuple(sorted({lam, p - 2 - lam})) for lam in range(half - 1)]
        sl2_pairs.append((p - 1,))
        report.add(
            f"u(sl2) has {half} blocks {{V0^λ, V0^(p-2-λ)}} and the Steinberg block",
            "sl2.blocks.pairing",
            sl2_blocks.as_sets() == expected_partition("V0", sl2_pairs),
            pairing_text(sl2_blocks),
            {"blocks": [list(block) for block in sl2_blocks.blocks]},
        )

        if permutation_check:
            order = [int(index) for index in self._rng.permutation(p)]
            permuted = blocks(osp12, order)
            report.add(
                "the block partition does not depend on the order of the simples",
                "blocks.order-independence",
                permuted.as_sets() == osp_blocks.as_sets(),
                f"order {order}",
            )

        self._ext_table(report)
        return report

    def _ext_table(self, report: SuiteReport):
        p = self._p
        rows = []
        for lam in range(p):
            simple = module_of("V", lam, p)
            resolution = minimal_resolution(simple, 2)
            for mu in range(p):
                rows.append((lam, mu, ext_dim(simple, module_of("V", mu, p), 1, resolution)))
        report.add_table("ext1", ("lam", "mu", "ext1_dim"), rows)
        table = {(lam, mu): dim for lam, mu, dim in rows}
        report.add(
            "Ext^1(V^0, V^(p-1)) = 2",
            "osp12.ext1",
            table[(0, p - 1)] == 2,
            f"computed {table[(0, p - 1)]}",
        )
        middle = (p - 1) // 2
        self_extensions = [lam for lam in range(p) if lam != middle and table[(lam, lam)]]
        report.add(
            "Ext^1(V^λ, V^λ) = 0 for λ != (p-1)/2",
            "osp12.ext1",
            not self_extensions,
            f"self-extensions at {self_extensions}" if self_extensions else "",
        )
