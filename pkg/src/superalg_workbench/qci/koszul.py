"""Koszul Resolution Of A Quantum Complete Intersection

Description:
    The free resolution K_• of the trivial module over S = κ<x_1..x_N>/(x_i x_j - q_ij x_j x_i,
    x_i^{N_i}). K_n is free on the symbols Ψ(a) with a ∈ N^N and Σ a_i = n, and

        d_i Ψ(a) = ∏_{l<i} (-1)^{a_l} q_li^{σ_i(a_i) τ_l(a_l)} · x_i^{σ_i(a_i)} Ψ(a - e_i),

    with σ(a) = 1 for odd a, N - 1 for even a, and τ(a) = σ(1) + ... + σ(a). d is left
    S-linear, so on the κ-basis u ⊗ Ψ(a) it acts by right multiplication with the coefficient.

    The dual differential on Hom_S(K_•, κ) vanishes because every coefficient lies in the
    augmentation ideal, hence dim Ext^n = rank K_n.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import itertools
import logging
import math
import weakref
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from superalg_workbench.algebra.pbw import Monomial, PBWAlgebra

logger = logging.getLogger(__name__)

_RIGHT_MULTIPLICATION: "weakref.WeakKeyDictionary[PBWAlgebra, dict]" = (
    weakref.WeakKeyDictionary()
)

Entries = dict[tuple[int, int], dict[Monomial, int]]


class KoszulResolutionError(Exception):
    """Raised for non-QCI input and if d∘d ≠ 0 on some generator."""


def sigma(exponent: int, truncation: int) -> int:
    return 1 if exponent % 2 else truncation - 1


def tau(exponent: int, truncation: int) -> int:
    """σ(1) + ... + σ(exponent)."""
    return (exponent + 1) // 2 + (exponent // 2) * (truncation - 1)


def qci_data(algebra: PBWAlgebra) -> tuple[list[int], list[list[int]]]:
    """Truncations N_i and the full q-matrix of a QCI."""
    q_matrix = getattr(algebra, "q_matrix", None)
    if algebra.kind != "qci" or q_matrix is None:
        raise KoszulResolutionError(f"{algebra.name} is not a quantum complete intersection")
    return list(algebra.shape), q_matrix


def koszul_generators(rank: int, degree: int) -> list[tuple[int, ...]]:
    """The tuples a with Σ a_i = degree in lexicographic order."""
    return [
        exps for exps in itertools.product(range(degree + 1), repeat=rank) if sum(exps) == degree
    ]


def right_multiplication(algebra: PBWAlgebra, monomial: Monomial) -> np.ndarray:
    """Matrix of u ↦ u·monomial on S."""
    cache = _RIGHT_MULTIPLICATION.setdefault(algebra, {})
    key = tuple(monomial)
    if key not in cache:
        matrix = algebra.field.zeros(algebra.dim, algebra.dim)
        for col, basis_monomial in enumerate(algebra.basis()):
            for product, coeff in algebra.multiply_monomials(basis_monomial, key).items():
                matrix[algebra.monomial_index(product), col] = coeff
        cache[key] = matrix
    return cache[key]


def assemble(algebra: PBWAlgebra, entries: Entries, rows: int, cols: int) -> np.ndarray:
    """κ-matrix of the S-linear map whose (target, source) coefficient is `entries`."""
    size = algebra.dim
    matrix = algebra.field.zeros(rows * size, cols * size)
    for (row, col), terms in entries.items():
        block = matrix[row * size : (row + 1) * size, col * size : (col + 1) * size]
        for monomial, coeff in terms.items():
            block += coeff * right_multiplication(algebra, monomial)
    return algebra.field.reduce(matrix)


def counit(terms: Mapping[Monomial, int], rank: int) -> int:
    return terms.get((0,) * rank, 0)


@dataclass
class KoszulResolution:
    """K_0 ← K_1 ← ... ← K_depth; `entries[n]` holds d_n: K_n → K_{n-1} in S-coefficients."""

    algebra: PBWAlgebra
    depth: int
    generators: list[list[tuple[int, ...]]]
    entries: list[Entries]
    _matrices: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def ranks(self) -> list[int]:
        return [len(gens) for gens in self.generators]

    def index(self, exps: Sequence[int]) -> int:
        return self.generators[sum(exps)].index(tuple(exps))

    def differential(self, degree: int) -> np.ndarray:
        """κ-matrix of d_n; degree 0 gives the augmentation K_0 → κ."""
        if degree not in self._matrices:
            if degree == 0:
                matrix = self.algebra.field.zeros(1, self.algebra.dim)
                matrix[0, self.algebra.monomial_index(self.algebra.zero_monomial())] = 1
            else:
                matrix = assemble(
                    self.algebra,
                    self.entries[degree],
                    self.ranks[degree - 1],
                    self.ranks[degree],
                )
            self._matrices[degree] = matrix
        return self._matrices[degree]


def differential_entries(
    truncations: Sequence[int], q_matrix: Sequence[Sequence[int]], degree: int, field_
) -> Entries:
    """Coefficients of d_n, indexed into the generators of the degree below."""
    rank = len(truncations)
    generators = koszul_generators(rank, degree)
    lower = {exps: index for index, exps in enumerate(koszul_generators(rank, degree - 1))}
    entries: Entries = {}
    for col, exps in enumerate(generators):
        for i in range(rank):
            if exps[i] == 0:
                continue
            step = sigma(exps[i], truncations[i])
            coeff = 1
            for k in range(i):
                coeff *= field_.sign(exps[k]) * field_.power(
                    q_matrix[k][i], step * tau(exps[k], truncations[k])
                )
            target = list(exps)
            target[i] -= 1
            power = [0] * rank
            power[i] = step
            row = lower[tuple(target)]
            entries[(row, col)] = {tuple(power): field_.scalar(coeff)}
    return entries


def build_koszul(algebra: PBWAlgebra, depth: int) -> KoszulResolution:
    if depth < 1:
        raise KoszulResolutionError(f"The depth must be at least 1, got {depth}")
    truncations, q_matrix = qci_data(algebra)
    field_ = algebra.field
    generators = [koszul_generators(algebra.rank, degree) for degree in range(depth + 1)]
    entries: list[Entries] = [{}]
    for degree in range(1, depth + 1):
        entries.append(differential_entries(truncations, q_matrix, degree, field_))
    resolution = KoszulResolution(algebra, depth, generators, entries)
    for degree in range(1, depth + 1):
        product = field_.matmul(
            resolution.differential(degree - 1), resolution.differential(degree)
        )
        if not field_.is_zero(product):
            column = int(np.nonzero(product.any(axis=0))[0][0])
            offending = generators[degree][column // algebra.dim]
            raise KoszulResolutionError(f"d∘d ≠ 0 on Ψ{offending} in degree {degree}")
    logger.debug(
        "Koszul resolution of %s up to degree %d: ranks %s", algebra.name, depth, resolution.ranks
    )
    return resolution


@dataclass
class ExactnessReport:
    """Homology dimensions H_0 .. H_{depth-1} of the augmented complex."""

    homology: list[int]

    @property
    def exact(self) -> bool:
        return not any(self.homology)


def exactness_check(resolution: KoszulResolution) -> ExactnessReport:
    field_ = resolution.algebra.field
    homology = []
    for degree in range(resolution.depth):
        outgoing = resolution.differential(degree)
        kernel = outgoing.shape[1] - field_.rank(outgoing)
        homology.append(kernel - field_.rank(resolution.differential(degree + 1)))
    return ExactnessReport(homology)


def closed_form_dim(degree: int, generators: int) -> int:
    return math.comb(degree + generators - 1, generators - 1)


def ext_dims_qci(
    algebra: PBWAlgebra, n_max: int, resolution: Optional[KoszulResolution] = None
) -> list[int]:
    """dim Ext^n(κ, κ) for n = 0..n_max."""
    resolution = resolution if resolution is not None else build_koszul(algebra, max(n_max, 1))
    for degree in range(1, n_max + 1):
        for (row, col), terms in resolution.entries[degree].items():
            if counit(terms, algebra.rank):
                raise KoszulResolutionError(
                    f"The dual differential does not vanish at "
                    f"Ψ{resolution.generators[degree][col]}"
                )
    return resolution.ranks[: n_max + 1]
