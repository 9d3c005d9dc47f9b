"""Cocycles From Coefficient Extraction

Description:
    Hochschild cocycles with trivial coefficients, stored as value tables on normal-form basis
    monomials of the augmentation ideal.

    The pair functional c_i(a, b) is the coefficient of x_i^{N_i} in the product ã·b̃, taken in
    the lift algebra where x_i^{N_i} does not vanish yet; a normal-form monomial lifts to the
    monomial with the same exponents. x_i^{N_i} spans a square-zero ideal of the lifted
    algebra, so c_i is the cocycle of the corresponding extension.

    - ξ̂_i is c_i on a QCI (for osp(1|2): its graded instance in E and F).
    - f_i on u(osp(1|2)) is the p-fold cup power c_12·c_34⋯c_{2p-1,2p}, of arity 2p.

    Neither is a coboundary: on the tuple (x, x^{N-1}, x, x^{N-1}, ...) every coboundary
    vanishes because x^N = 0, while the cocycle evaluates to 1.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Union

import numpy as np

from superalg_workbench.algebra.pbw import Monomial, PBWAlgebra
from superalg_workbench.algebra.presets import lift_preset, qci_lift
from superalg_workbench.qci.chain_maps import chain_map_class
from superalg_workbench.qci.koszul import qci_data, right_multiplication

logger = logging.getLogger(__name__)

COCYCLE_SEED = 5
DEFAULT_SAMPLES = 10000
EXHAUSTIVE_LIMIT = 128

Argument = dict[int, int]


class CocycleError(Exception):
    """Raised for unsupported algebras and generators."""


@dataclass
class Cocycle:
    """`table[a, b]` holds c(a, b); arity 2k cocycles are the k-fold product of this pairing.

    Args:
        name: identifier used in reports.
        algebra: the algebra the arguments live in.
        arity: number of arguments, a multiple of 2.
        table: dim × dim values on basis monomial indices, zero on the unit.
        generator: index of x_i, whose top power is extracted.
        convention: "lift" or "cartan-free".
    """

    name: str
    algebra: PBWAlgebra
    arity: int
    table: np.ndarray
    generator: int
    convention: str = "lift"
    _support: Optional[np.ndarray] = field(default=None, repr=False)

    def value(self, monomials: Sequence[Monomial]) -> int:
        indices = [self.algebra.monomial_index(m) for m in monomials]
        return self.evaluate([{index: 1} for index in indices])

    def evaluate(self, arguments: Sequence[Argument]) -> int:
        """Multilinear evaluation on sparse coordinate vectors."""
        if len(arguments) != self.arity:
            raise CocycleError(f"{self.name} takes {self.arity} arguments, got {len(arguments)}")
        result = 1
        for left, right in zip(arguments[::2], arguments[1::2]):
            pair = 0
            for row, left_coeff in left.items():
                for col, right_coeff in right.items():
                    pair += left_coeff * right_coeff * int(self.table[row, col])
            result = (result * pair) % self.algebra.p
            if not result:
                return 0
        return result

    def with_entry(self, left: Monomial, right: Monomial, value: int) -> "Cocycle":
        table = self.table.copy()
        table[self.algebra.monomial_index(left), self.algebra.monomial_index(right)] = value
        return replace(self, name=f"{self.name}*", table=table, _support=None)

    @property
    def support(self) -> np.ndarray:
        """Indices of monomials occurring in a nonzero table entry."""
        if self._support is None:
            self._support = np.nonzero(self.table.any(axis=0) | self.table.any(axis=1))[0]
        return self._support


def coefficient_table(
    algebra: PBWAlgebra,
    lift: PBWAlgebra,
    target: Monomial,
    cartan: Sequence[int] = (),
) -> np.ndarray:
    """c(a, b) = coefficient of `target` in ã·b̃; zero if a or b involves a `cartan` generator."""
    weights = [gen.weight for gen in algebra.gens]
    target_degree = algebra.degree(target, weights)
    table = algebra.field.zeros(algebra.dim, algebra.dim)
    monomials = [m for m in algebra.basis() if any(m)]
    for left in monomials:
        if any(left[index] for index in cartan):
            continue
        for right in monomials:
            if any(right[index] for index in cartan):
                continue
            # products are homogeneous for the weight grading
            if algebra.degree(left, weights) + algebra.degree(right, weights) != target_degree:
                continue
            coeff = lift.multiply_monomials(left, right).get(tuple(target), 0)
            if coeff:
                table[algebra.monomial_index(left), algebra.monomial_index(right)] = coeff
    return algebra.field.reduce(table)


def _top_power(algebra: PBWAlgebra, index: int) -> Monomial:
    exps = [0] * algebra.rank
    exps[index] = algebra.shape[index]
    return tuple(exps)


def cocycle_xi_hat(algebra: PBWAlgebra, generator: Union[str, int]) -> Cocycle:
    """ξ̂_i on a QCI."""
    qci_data(algebra)
    index = algebra.index_of(generator)
    table = coefficient_table(algebra, qci_lift(algebra), _top_power(algebra, index))
    return Cocycle(f"ξ̂_{algebra.names[index]}", algebra, 2, table, index)


def cocycle_c(
    algebra: PBWAlgebra, generator: Union[str, int], cartan_free: bool = False
) -> Cocycle:
    """The pair functional c_i on u(sl2) or u(osp(1|2))."""
    if algebra.kind not in ("sl2", "osp12") or algebra.is_smash or algebra.strict:
        raise CocycleError(f"Pair functionals need the sl2 or osp12 preset, got {algebra.name}")
    index = algebra.index_of(generator)
    cartan = [algebra.index_of("h")] if cartan_free else []
    table = coefficient_table(
        algebra, lift_preset(algebra.kind, algebra.field), _top_power(algebra, index), cartan
    )
    convention = "cartan-free" if cartan_free else "lift"
    return Cocycle(f"c_{algebra.names[index]}", algebra, 2, table, index, convention)


def cocycle_f(
    algebra: PBWAlgebra, generator: Union[str, int], cartan_free: bool = False
) -> Cocycle:
    """f_i = c_i ∪ ... ∪ c_i (p factors) on u(osp(1|2)), of arity 2p."""
    if algebra.kind != "osp12":
        raise CocycleError(f"f is defined on u(osp(1|2)), got {algebra.name}")
    pair = cocycle_c(algebra, generator, cartan_free)
    return replace(pair, name=f"f_{algebra.names[pair.generator]}", arity=2 * algebra.p)


def _product(algebra: PBWAlgebra, left: int, right: int) -> Argument:
    terms = algebra.multiply_monomials(algebra.monomial_at(left), algebra.monomial_at(right))
    return {algebra.monomial_index(m): coeff for m, coeff in terms.items() if coeff}


def coboundary_value(cocycle: Cocycle, monomials: Sequence[Monomial]) -> int:
    """(∂c)(r_1, ..., r_{m+1}) = Σ_i (-1)^i c(r_1, ..., r_i r_{i+1}, ..., r_{m+1})."""
    algebra = cocycle.algebra
    indices = [algebra.monomial_index(m) for m in monomials]
    return _coboundary(cocycle, indices)


def _coboundary(cocycle: Cocycle, indices: Sequence[int]) -> int:
    algebra = cocycle.algebra
    if len(indices) != cocycle.arity + 1:
        raise CocycleError(f"∂{cocycle.name} takes {cocycle.arity + 1} arguments")
    total = 0
    for i in range(cocycle.arity):
        merged = _product(algebra, indices[i], indices[i + 1])
        if not merged:
            continue
        arguments = (
            [{index: 1} for index in indices[:i]]
            + [merged]
            + [{index: 1} for index in indices[i + 2 :]]
        )
        total += algebra.field.sign(i + 1) * cocycle.evaluate(arguments)
    return algebra.field.scalar(total)


def left_multiplication(algebra: PBWAlgebra, monomial: Monomial) -> np.ndarray:
    """Matrix of u ↦ monomial·u."""
    matrix = algebra.field.zeros(algebra.dim, algebra.dim)
    for col, basis_monomial in enumerate(algebra.basis()):
        for product, coeff in algebra.multiply_monomials(tuple(monomial), basis_monomial).items():
            matrix[algebra.monomial_index(product), col] = coeff
    return matrix


def _exhaustive_pairs(cocycle: Cocycle) -> tuple[int, Optional[tuple[int, int, int]]]:
    """c(ab, c) = c(a, bc) on all triples of non-unit monomials, one b at a time."""
    algebra = cocycle.algebra
    field_ = algebra.field
    table = cocycle.table
    unit = algebra.monomial_index(algebra.zero_monomial())
    mask = np.ones(algebra.dim, dtype=bool)
    mask[unit] = False
    checked = 0
    for middle in algebra.basis():
        if not any(middle):
            continue
        left_side = field_.matmul(right_multiplication(algebra, middle).T, table)
        right_side = field_.matmul(table, left_multiplication(algebra, middle))
        difference = field_.reduce(left_side - right_side)[np.ix_(mask, mask)]
        checked += int(mask.sum()) ** 2
        if difference.any():
            rows, cols = np.nonzero(difference)
            outer = np.nonzero(mask)[0]
            return checked, (
                int(outer[rows[0]]),
                algebra.monomial_index(middle),
                int(outer[cols[0]]),
            )
    return checked, None


def _sampled(
    cocycle: Cocycle, samples: int, rng: np.random.Generator
) -> tuple[int, Optional[tuple[int, ...]]]:
    algebra = cocycle.algebra
    pool = np.array([index for index in range(algebra.dim) if any(algebra.monomial_at(index))])
    support = cocycle.support if len(cocycle.support) else pool
    for _ in range(samples):
        biased = rng.random(cocycle.arity + 1) < 0.5
        indices = tuple(
            int(rng.choice(support)) if flag else int(rng.choice(pool)) for flag in biased
        )
        if _coboundary(cocycle, indices):
            return samples, indices
    return samples, None


@dataclass
class CocycleReport:
    cocycle_id: str
    arity: int
    convention: str
    checked_tuples: int
    exhaustive: bool
    passed: bool
    witness: Optional[tuple[str, ...]]
    noncoboundary: bool
    nonzero_witness: tuple[str, ...]

    def as_certificate(self) -> dict:
        return {
            "cocycle_id": self.cocycle_id,
            "checked_tuples": self.checked_tuples,
            "nonzero_witness": list(self.nonzero_witness),
        }


def noncoboundary_tuple(cocycle: Cocycle) -> tuple[list[Monomial], bool]:
    """(x, x^{N-1}, ...) and whether all consecutive products vanish on it."""
    algebra = cocycle.algebra
    index = cocycle.generator
    single = [0] * algebra.rank
    single[index] = 1
    complement = [0] * algebra.rank
    complement[index] = algebra.shape[index] - 1
    pair = [tuple(single), tuple(complement)]
    arguments = pair * (cocycle.arity // 2)
    vanishing = not algebra.multiply_monomials(pair[0], pair[1]) and not (
        algebra.multiply_monomials(pair[1], pair[0])
    )
    return arguments, vanishing


def verify_cocycle(
    cocycle: Cocycle,
    samples: int = DEFAULT_SAMPLES,
    rng: Optional[np.random.Generator] = None,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> CocycleReport:
    algebra = cocycle.algebra
    exhaustive = cocycle.arity == 2 and algebra.dim <= exhaustive_limit
    if exhaustive:
        checked, witness = _exhaustive_pairs(cocycle)
    else:
        rng = rng if rng is not None else np.random.default_rng(COCYCLE_SEED)
        checked, witness = _sampled(cocycle, samples, rng)
    arguments, vanishing = noncoboundary_tuple(cocycle)
    noncoboundary = vanishing and cocycle.value(arguments) != 0
    witness_labels = (
        tuple(algebra.format_monomial(algebra.monomial_at(index)) for index in witness)
        if witness is not None
        else None
    )
    if witness_labels is not None:
        logger.warning("∂%s ≠ 0 at %s", cocycle.name, witness_labels)
    report = CocycleReport(
        cocycle.name,
        cocycle.arity,
        cocycle.convention,
        checked,
        exhaustive,
        witness is None,
        witness_labels,
        noncoboundary,
        tuple(algebra.format_monomial(m) for m in arguments),
    )
    logger.info(
        "%s: ∂ = 0 on %d tuples: %s, not a coboundary: %s",
        cocycle.name,
        checked,
        report.passed,
        noncoboundary,
    )
    return report


@dataclass
class DegreeTwoComparison:
    """Rows (Ψ(a), Koszul value of ξ_i, value of ξ̂_i on the comparison image)."""

    rows: list[tuple[tuple[int, ...], int, int]]

    @property
    def matches(self) -> bool:
        return all(koszul == bar for _, koszul, bar in self.rows)


def degree_two_comparison(
    algebra: PBWAlgebra, generator: Union[str, int]
) -> DegreeTwoComparison:
    """ξ_i against ξ̂_i through the comparison map K_2 → Bar_2.

    Ψ(2e_j) goes to [x_j^{N_j-1}|x_j] and Ψ(e_j+e_k) to [x_j|x_k] - q_jk[x_k|x_j].
    """
    truncations, q_matrix = qci_data(algebra)
    index = algebra.index_of(generator)
    field_ = algebra.field
    xi = chain_map_class("xi", index, algebra, 2)
    cocycle = cocycle_xi_hat(algebra, index)
    koszul_values = xi.induced(2)[:, 0]

    def power(position: int, exponent: int) -> Monomial:
        exps = [0] * algebra.rank
        exps[position] = exponent
        return tuple(exps)

    rows = []
    for row, exps in enumerate(xi.resolution.generators[2]):
        support = [position for position, exp in enumerate(exps) if exp]
        if len(support) == 1:
            j = support[0]
            bar = cocycle.value([power(j, truncations[j] - 1), power(j, 1)])
        else:
            j, k = support
            bar = cocycle.value([power(j, 1), power(k, 1)]) - q_matrix[j][k] * cocycle.value(
                [power(k, 1), power(j, 1)]
            )
        rows.append((exps, int(koszul_values[row]), field_.scalar(bar)))
    return DegreeTwoComparison(rows)


def kernel_vanishing(cocycle: Cocycle) -> list[Monomial]:
    """Monomials involving a generator other than x_i on which the table does not vanish."""
    algebra = cocycle.algebra
    offending = []
    for monomial in algebra.basis():
        if not any(exp for position, exp in enumerate(monomial) if position != cocycle.generator):
            continue
        index = algebra.monomial_index(monomial)
        if cocycle.table[index].any() or cocycle.table[:, index].any():
            offending.append(monomial)
    return offending
