"""Bar Complex Oracle

Description:
    dim Ext^n_S(κ, κ) from the normalized cochain complex Hom(S̄^{⊗n}, κ), S̄ the augmentation
    ideal, with

        (∂f)(r_1, ..., r_{n+1}) = Σ_{i=1}^{n} (-1)^i f(r_1, ..., r_i r_{i+1}, ..., r_{n+1}).

    The outer terms vanish since κ is trivial and every r_i lies in S̄. For a QCI every product
    of monomials is a scalar times a monomial of the summed multidegree, so the complex splits
    into blocks of fixed total multidegree and the ranks are taken block by block.

    The oracle is independent of the Koszul resolution and only used to cross-check it. It
    gives up with None once the number of chains needed exceeds the budget.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from typing import Optional

import numpy as np

from superalg_workbench.algebra.pbw import Monomial, PBWAlgebra

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 60000

Chain = tuple[Monomial, ...]


def _grading(algebra: PBWAlgebra, chain: Chain) -> tuple[int, ...]:
    """Total multidegree for QCIs; a single block for everything else."""
    if algebra.kind != "qci":
        return ()
    return tuple(int(sum(column)) for column in zip(*chain)) if chain else (0,) * algebra.rank


def _chains(algebra: PBWAlgebra, length: int) -> dict[tuple[int, ...], list[Chain]]:
    augmentation = [m for m in algebra.basis() if any(m)]
    blocks: dict[tuple[int, ...], list[Chain]] = defaultdict(list)
    for chain in itertools.product(augmentation, repeat=length):
        blocks[_grading(algebra, chain)].append(chain)
    return blocks


def _coboundary(
    algebra: PBWAlgebra, sources: list[Chain], targets: list[Chain]
) -> np.ndarray:
    """Matrix of ∂: C^n → C^{n+1} restricted to one block; rows index (n+1)-chains."""
    field_ = algebra.field
    position = {chain: index for index, chain in enumerate(sources)}
    matrix = field_.zeros(len(targets), len(sources))
    for row, chain in enumerate(targets):
        for i in range(len(chain) - 1):
            sign = field_.sign(i + 1)
            for product, coeff in algebra.multiply_monomials(chain[i], chain[i + 1]).items():
                if not any(product):
                    continue
                merged = chain[:i] + (product,) + chain[i + 2 :]
                matrix[row, position[merged]] += sign * coeff
    return field_.reduce(matrix)


def bar_ext_dims(
    algebra: PBWAlgebra, n_max: int, budget: int = DEFAULT_BUDGET
) -> list[Optional[int]]:
    """dim Ext^n for n = 0..n_max; None from the first degree beyond the budget on."""
    field_ = algebra.field
    augmentation_dim = algebra.dim - 1
    dims: list[Optional[int]] = [1]
    if n_max == 0:
        return dims
    chains = {0: {_grading(algebra, ()): [()]}}
    ranks: dict[int, dict[tuple[int, ...], int]] = {0: {}}
    for degree in range(1, n_max + 1):
        needed = sum(augmentation_dim**length for length in (degree - 1, degree, degree + 1))
        if needed > budget:
            logger.info(
                "Bar oracle for %s stops at degree %d (%d chains > budget %d)",
                algebra.name,
                degree,
                needed,
                budget,
            )
            dims.extend([None] * (n_max + 1 - len(dims)))
            return dims
        for length in (degree, degree + 1):
            if length not in chains:
                chains[length] = _chains(algebra, length)
        ranks[degree] = {
            block: field_.rank(
                _coboundary(algebra, sources, chains[degree + 1].get(block, []))
            )
            if chains[degree + 1].get(block)
            else 0
            for block, sources in chains[degree].items()
        }
        total = 0
        for block, sources in chains[degree].items():
            total += len(sources) - ranks[degree][block] - ranks[degree - 1].get(block, 0)
        dims.append(total)
    logger.debug("Bar oracle dims for %s: %s", algebra.name, dims)
    return dims
