"""Complexity And Wildness

Description:
    The complexity of M is the polynomial growth rate of the minimal resolution. It is read off
    the total dimensions dim P_n: the smallest c for which the last three c-th finite
    differences agree gives complexity c + 1. When the whole sequence does not settle, the
    even- and odd-indexed subsequences are fitted separately.

    Complexity at least 3 of the trivial module makes the algebra wild. Smaller values never
    decide tameness.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from superalg_workbench.algebra.pbw import PBWAlgebra
from superalg_workbench.homalg.catalogue import Catalogue
from superalg_workbench.homalg.resolution import minimal_resolution
from superalg_workbench.rep.module import Module, trivial_module

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 10
WILD_COMPLEXITY = 3


class ComplexityError(Exception):
    """Raised if the growth of a resolution does not settle within the computed depth."""


class GrowthStatus(str, enum.Enum):
    OK = "ok"
    PARITY_SPLIT = "parity-split"
    INCONCLUSIVE = "inconclusive"


@dataclass
class ComplexityEstimate:
    complexity: Optional[int]
    status: GrowthStatus
    total_dims: list[int]
    ranks: list[int]
    differences: list[list[int]] = field(default_factory=list)


def finite_differences(sequence: Sequence[int]) -> list[list[int]]:
    """[seq, Δseq, Δ²seq, ...] down to length one."""
    table = [list(sequence)]
    while len(table[-1]) > 1:
        table.append(np.diff(table[-1]).tolist())
    return table


def settled_order(sequence: Sequence[int]) -> Optional[int]:
    """Smallest c whose c-th differences end in three equal values."""
    for order, row in enumerate(finite_differences(sequence)):
        if len(row) < 3:
            return None
        if row[-1] == row[-2] == row[-3]:
            return order
    return None


def estimate_from_dims(total_dims: Sequence[int], ranks: Sequence[int]) -> ComplexityEstimate:
    table = finite_differences(total_dims)
    order = settled_order(total_dims)
    if order is not None:
        return ComplexityEstimate(order + 1, GrowthStatus.OK, list(total_dims), list(ranks), table)
    even, odd = settled_order(total_dims[::2]), settled_order(total_dims[1::2])
    if even is not None and odd is not None:
        return ComplexityEstimate(
            max(even, odd) + 1, GrowthStatus.PARITY_SPLIT, list(total_dims), list(ranks), table
        )
    return ComplexityEstimate(None, GrowthStatus.INCONCLUSIVE, list(total_dims), list(ranks), table)


def complexity_estimate(
    module: Module, depth: int = DEFAULT_DEPTH, catalogue: Optional[Catalogue] = None
) -> ComplexityEstimate:
    resolution = minimal_resolution(module, depth, catalogue)
    estimate = estimate_from_dims(resolution.total_dims, resolution.ranks)
    logger.info(
        "Complexity of %s: %s (%s) from dims %s",
        module.label,
        estimate.complexity,
        estimate.status.value,
        estimate.total_dims,
    )
    return estimate


class WildnessStatus(str, enum.Enum):
    WILD = "wild"
    NOT_DECIDED = "not-decided"


@dataclass
class WildnessVerdict:
    status: WildnessStatus
    estimate: ComplexityEstimate


def wildness_verdict(algebra: PBWAlgebra, depth: int = DEFAULT_DEPTH) -> WildnessVerdict:
    estimate = complexity_estimate(trivial_module(algebra), depth)
    if estimate.complexity is None:
        raise ComplexityError(
            f"Growth of the trivial module over {algebra.name} did not settle: "
            f"{estimate.total_dims}"
        )
    status = (
        WildnessStatus.WILD
        if estimate.complexity >= WILD_COMPLEXITY
        else WildnessStatus.NOT_DECIDED
    )
    return WildnessVerdict(status, estimate)
