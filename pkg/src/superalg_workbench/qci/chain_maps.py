"""Chain Maps On The Koszul Resolution

Description:
    The classes ξ_i ∈ Ext² and η_i ∈ Ext¹ realized as S-linear chain maps K_• → K_{•-2} and
    K_• → K_{•-1}:

        ξ_i Ψ(a) = ∏_{i<l} q_il^{N_i τ_l(a_l)} Ψ(a - 2e_i)
        η_i Ψ(a) = ∏_{l<i} q_li^{(σ_i(a_i)-1) τ_l(a_l)} ∏_{i<l} (-1)^{a_l} q_il^{τ_l(a_l)}
                   · x_i^{σ_i(a_i)-1} Ψ(a - e_i)

    Cup products are composites of chain maps. The induced map of φ on Hom(K_•, κ) is the
    counit of its coefficients, and composites induce the product of these matrices. The
    relations between the classes are checked as exact identities of the induced maps.

    The torus part h and the parity g act diagonally on K_•; both actions commute with d, and
    the action on a class is read off the commutator of the action with its chain map.

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
from superalg_workbench.qci.koszul import (
    Entries,
    KoszulResolution,
    assemble,
    build_koszul,
    counit,
    koszul_generators,
    qci_data,
    sigma,
    tau,
)

logger = logging.getLogger(__name__)


class ChainMapError(Exception):
    """Raised if a chain map does not commute with d, or an action does not."""


class ClassKind(str, enum.Enum):
    XI = "xi"
    ETA = "eta"


@dataclass
class ChainMap:
    """`entries[n]` maps K_n → K_{n-shift}; `sign` satisfies d∘φ = sign·φ∘d."""

    name: str
    kind: ClassKind
    generator: int
    resolution: KoszulResolution
    shift: int
    entries: dict[int, Entries]
    sign: int = 1
    _matrices: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def matrix(self, degree: int) -> np.ndarray:
        if degree not in self._matrices:
            resolution = self.resolution
            self._matrices[degree] = assemble(
                resolution.algebra,
                self.entries[degree],
                resolution.ranks[degree - self.shift],
                resolution.ranks[degree],
            )
        return self._matrices[degree]

    def induced(self, degree: int) -> np.ndarray:
        """φ*: Hom(K_{n-shift}, κ) → Hom(K_n, κ) in the dual bases, rows indexed by K_n."""
        resolution = self.resolution
        result = resolution.algebra.field.zeros(
            resolution.ranks[degree], resolution.ranks[degree - self.shift]
        )
        for (row, col), terms in self.entries[degree].items():
            result[col, row] = counit(terms, resolution.algebra.rank)
        return result


def _xi_entries(
    resolution: KoszulResolution, index: int, degree: int, truncations, q_matrix
) -> Entries:
    field_ = resolution.algebra.field
    rank = resolution.algebra.rank
    lower = {exps: pos for pos, exps in enumerate(resolution.generators[degree - 2])}
    entries: Entries = {}
    for col, exps in enumerate(resolution.generators[degree]):
        if exps[index] < 2:
            continue
        coeff = 1
        for k in range(index + 1, rank):
            coeff *= field_.power(
                q_matrix[index][k], truncations[index] * tau(exps[k], truncations[k])
            )
        target = list(exps)
        target[index] -= 2
        entries[(lower[tuple(target)], col)] = {(0,) * rank: field_.scalar(coeff)}
    return entries


def eta_coefficient(
    exps: Sequence[int], index: int, truncations: Sequence[int], q_matrix, field_
) -> int:
    step = sigma(exps[index], truncations[index]) - 1
    coeff = 1
    for k in range(index):
        coeff *= field_.power(q_matrix[k][index], step * tau(exps[k], truncations[k]))
    for k in range(index + 1, len(exps)):
        coeff *= field_.sign(exps[k]) * field_.power(
            q_matrix[index][k], tau(exps[k], truncations[k])
        )
    return field_.scalar(coeff)


def _eta_entries(
    resolution: KoszulResolution, index: int, degree: int, truncations, q_matrix
) -> Entries:
    field_ = resolution.algebra.field
    rank = resolution.algebra.rank
    lower = {exps: pos for pos, exps in enumerate(resolution.generators[degree - 1])}
    entries: Entries = {}
    for col, exps in enumerate(resolution.generators[degree]):
        if exps[index] < 1:
            continue
        power = [0] * rank
        power[index] = sigma(exps[index], truncations[index]) - 1
        target = list(exps)
        target[index] -= 1
        entries[(lower[tuple(target)], col)] = {
            tuple(power): eta_coefficient(exps, index, truncations, q_matrix, field_)
        }
    return entries


def _commutation_sign(chain_map: ChainMap) -> int:
    """The sign s with d∘φ = s·φ∘d in every degree, or ChainMapError with a witness."""
    resolution = chain_map.resolution
    field_ = resolution.algebra.field
    failures = {}
    for sign in (1, -1):
        for degree in range(chain_map.shift + 1, resolution.depth + 1):
            left = field_.matmul(
                resolution.differential(degree - chain_map.shift), chain_map.matrix(degree)
            )
            right = field_.matmul(chain_map.matrix(degree - 1), resolution.differential(degree))
            if not field_.is_zero(left - sign * right):
                failures[sign] = degree
                break
        else:
            return sign
    degree = failures[1]
    raise ChainMapError(
        f"{chain_map.name} does not commute with d in degree {degree} "
        f"(generators {resolution.generators[degree]})"
    )


def chain_map_class(
    kind: str,
    index: int,
    algebra: PBWAlgebra,
    depth: int,
    resolution: Optional[KoszulResolution] = None,
) -> ChainMap:
    """ξ_i or η_i (0-based generator index) on K_• up to `depth`."""
    kind = ClassKind(kind)
    if depth < 2:
        raise ChainMapError(f"Chain maps need depth >= 2, got {depth}")
    if not 0 <= index < algebra.rank:
        raise ChainMapError(f"{algebra.name} has no generator {index}")
    truncations, q_matrix = qci_data(algebra)
    resolution = resolution if resolution is not None else build_koszul(algebra, depth)
    shift = 2 if kind is ClassKind.XI else 1
    build = _xi_entries if kind is ClassKind.XI else _eta_entries
    entries = {
        degree: build(resolution, index, degree, truncations, q_matrix)
        for degree in range(shift, resolution.depth + 1)
    }
    symbol = "ξ" if kind is ClassKind.XI else "η"
    chain_map = ChainMap(f"{symbol}{index + 1}", kind, index, resolution, shift, entries)
    chain_map.sign = _commutation_sign(chain_map)
    logger.debug("%s commutes with d up to sign %d", chain_map.name, chain_map.sign)
    return chain_map


def composite_induced(outer: ChainMap, inner: ChainMap, degree: int) -> np.ndarray:
    """Induced map of outer∘inner on Hom(K_•, κ), landing in degree `degree`."""
    field_ = outer.resolution.algebra.field
    return field_.matmul(inner.induced(degree), outer.induced(degree - inner.shift))


@dataclass
class RelationCheck:
    relation: str
    degree: int
    passed: bool


@dataclass
class RelationReport:
    checks: list[RelationCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[RelationCheck]:
        return [check for check in self.checks if not check.passed]


def verify_lemma32(algebra: PBWAlgebra, depth: int) -> RelationReport:
    """ξ_iξ_j = q_ji^{N_iN_j} ξ_jξ_i, η_iξ_j = q_ji^{N_j} ξ_jη_i, η_iη_j = -q_ji η_jη_i and
    η_i² = 0 (N_i > 2) or ξ_i (N_i = 2), on every degree up to `depth`."""
    if depth < 4:
        raise ChainMapError(f"The relations need depth >= 4, got {depth}")
    truncations, q_matrix = qci_data(algebra)
    field_ = algebra.field
    resolution = build_koszul(algebra, depth)
    xi = [chain_map_class("xi", i, algebra, depth, resolution) for i in range(algebra.rank)]
    eta = [chain_map_class("eta", i, algebra, depth, resolution) for i in range(algebra.rank)]
    checks = []

    def record(relation: str, degree: int, left: np.ndarray, right: np.ndarray):
        checks.append(RelationCheck(relation, degree, field_.is_zero(left - right)))

    for i in range(algebra.rank):
        for j in range(algebra.rank):
            q_ji = q_matrix[j][i]
            xixi = field_.power(q_ji, truncations[i] * truncations[j])
            etaxi = field_.power(q_ji, truncations[j])
            for degree in range(4, depth + 1):
                record(
                    f"{xi[i].name}{xi[j].name} = {xixi}·{xi[j].name}{xi[i].name}",
                    degree,
                    composite_induced(xi[i], xi[j], degree),
                    xixi * composite_induced(xi[j], xi[i], degree),
                )
            for degree in range(3, depth + 1):
                record(
                    f"{eta[i].name}{xi[j].name} = {etaxi}·{xi[j].name}{eta[i].name}",
                    degree,
                    composite_induced(eta[i], xi[j], degree),
                    etaxi * composite_induced(xi[j], eta[i], degree),
                )
            for degree in range(2, depth + 1):
                square = composite_induced(eta[i], eta[j], degree)
                if i != j:
                    record(
                        f"{eta[i].name}{eta[j].name} = -{q_ji}·{eta[j].name}{eta[i].name}",
                        degree,
                        square,
                        -q_ji * composite_induced(eta[j], eta[i], degree),
                    )
                elif truncations[i] == 2:
                    record(f"{eta[i].name}² = {xi[i].name}", degree, square, xi[i].induced(degree))
                else:
                    record(f"{eta[i].name}² = 0", degree, square, np.zeros_like(square))
    report = RelationReport(checks)
    logger.info(
        "Cup relations on %s: %d checks, %d failures",
        algebra.name,
        len(checks),
        len(report.failures()),
    )
    return report


def _weight_action(resolution: KoszulResolution, degree: int, weights: Sequence[int]) -> np.ndarray:
    algebra = resolution.algebra
    truncations = algebra.shape
    diagonal = []
    for exps in resolution.generators[degree]:
        shift = sum(tau(a, n) * w for a, n, w in zip(exps, truncations, weights))
        for monomial in algebra.basis():
            diagonal.append(algebra.degree(monomial, weights) + shift)
    return np.diag(algebra.field.reduce(np.array(diagonal, dtype=np.int64)))


def _parity_action(resolution: KoszulResolution, degree: int) -> np.ndarray:
    algebra = resolution.algebra
    truncations = algebra.shape
    diagonal = []
    for exps in resolution.generators[degree]:
        twist = sum(
            tau(a, n) for a, n, gen in zip(exps, truncations, algebra.gens) if gen.parity
        )
        for monomial in algebra.basis():
            diagonal.append(algebra.field.sign(algebra.monomial_parity(monomial) + twist))
    return np.diag(np.array(diagonal, dtype=np.int64))


def class_weight(exps: Sequence[int], truncations: Sequence[int], weights: Sequence[int]) -> int:
    """h acts on the dual class Ψ(a)* by minus this weight."""
    return sum(tau(a, n) * w for a, n, w in zip(exps, truncations, weights))


@dataclass
class WeightActionReport:
    """`class_actions` maps a class to its (h-scalar, g-sign) read off the commutators."""

    commutes_h: bool
    commutes_g: bool
    class_actions: dict[str, tuple[int, int]]
    expected_actions: dict[str, tuple[int, int]]
    invariant_dims: list[int]
    power_invariant: dict[str, bool]

    @property
    def passed(self) -> bool:
        return (
            self.commutes_h
            and self.commutes_g
            and self.class_actions == self.expected_actions
            and all(self.power_invariant.values())
        )


def _commutator_scalar(
    chain_map: ChainMap, left: dict[int, np.ndarray], right: dict[int, np.ndarray], additive: bool
) -> Optional[int]:
    """The scalar c with A∘φ - φ∘A = c·φ (additive) or A∘φ = c·φ∘A, if there is one."""
    field_ = chain_map.resolution.algebra.field
    scalar: Optional[int] = None
    for degree in range(chain_map.shift, chain_map.resolution.depth + 1):
        phi = chain_map.matrix(degree)
        outer = field_.matmul(left[degree - chain_map.shift], phi)
        inner = field_.matmul(phi, right[degree])
        if field_.is_zero(phi):
            continue
        candidates = field_.elements() if additive else (1, field_.p - 1)
        for value in candidates:
            residual = outer - inner - value * phi if additive else outer - value * inner
            if field_.is_zero(residual):
                if scalar is not None and scalar != value:
                    return None
                scalar = value
                break
        else:
            return None
    return scalar


def verify_weight_actions(
    algebra: PBWAlgebra, depth: int, weights: Optional[Sequence[int]] = None
) -> WeightActionReport:
    """h- and g-actions on K_•, their compatibility with d and the induced actions on classes."""
    truncations, _ = qci_data(algebra)
    weights = list(weights) if weights is not None else [gen.weight for gen in algebra.gens]
    field_ = algebra.field
    resolution = build_koszul(algebra, max(depth, 2))
    h_action = {n: _weight_action(resolution, n, weights) for n in range(resolution.depth + 1)}
    g_action = {n: _parity_action(resolution, n) for n in range(resolution.depth + 1)}
    commutes_h = commutes_g = True
    for degree in range(1, resolution.depth + 1):
        differential = resolution.differential(degree)
        lower_h = h_action[degree - 1]
        lower_g = g_action[degree - 1]
        commutes_h &= field_.is_zero(
            field_.matmul(differential, h_action[degree]) - field_.matmul(lower_h, differential)
        )
        commutes_g &= field_.is_zero(
            field_.matmul(differential, g_action[degree]) - field_.matmul(lower_g, differential)
        )
    class_actions: dict[str, tuple[int, int]] = {}
    expected: dict[str, tuple[int, int]] = {}
    for index, gen in enumerate(algebra.gens):
        for kind in ClassKind:
            chain_map = chain_map_class(kind.value, index, algebra, resolution.depth, resolution)
            h_scalar = _commutator_scalar(chain_map, h_action, h_action, additive=True)
            g_sign = _commutator_scalar(chain_map, g_action, g_action, additive=False)
            class_actions[chain_map.name] = (
                h_scalar if h_scalar is not None else -1,
                g_sign if g_sign is not None else 0,
            )
            multiplier = truncations[index] if kind is ClassKind.XI else 1
            parity_flip = gen.parity * (truncations[index] if kind is ClassKind.XI else 1)
            expected[chain_map.name] = (
                field_.scalar(-multiplier * weights[index]),
                field_.sign(parity_flip),
            )
    invariant_dims = []
    for degree in range(resolution.depth + 1):
        count = 0
        for exps in koszul_generators(algebra.rank, degree):
            twist = sum(
                tau(a, n) for a, n, gen in zip(exps, truncations, algebra.gens) if gen.parity
            )
            if field_.scalar(class_weight(exps, truncations, weights)) == 0 and twist % 2 == 0:
                count += 1
        invariant_dims.append(count)
    power_invariant = {}
    for index in range(algebra.rank):
        name = f"ξ{index + 1}"
        h_scalar, g_sign = class_actions[name]
        power_invariant[f"{name}^{field_.p}"] = (
            field_.scalar(field_.p * h_scalar) == 0
            and field_.power(g_sign, field_.p) == 1
        )
    report = WeightActionReport(
        bool(commutes_h), bool(commutes_g), class_actions, expected, invariant_dims, power_invariant
    )
    logger.info(
        "Weight actions on %s: passed=%s, invariant dims %s",
        algebra.name,
        report.passed,
        invariant_dims,
    )
    return report
