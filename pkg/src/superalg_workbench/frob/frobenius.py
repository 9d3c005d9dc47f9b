"""Frobenius Extension u(sl2) ⊂ u(osp(1|2))

Description:
    u(osp(1|2)) is free of rank 4 as a right u(sl2)-module on {1, E, F, EF}, where u(sl2) sits
    inside through e ↦ E², f ↦ -F², h ↦ h. The EF-component of this decomposition is the
    Frobenius form, and with x = sE, y = tF the elements

        x = (1, x, y, xy + 1 - [x, y]),   y = (xy, y, -x, 1)

    form a dual projective pair: Σ y_i x_i = 1 and r = Σ y_i form(x_i r). The trace

        Tr(f)(m) = Σ y_i f(x_i m)

    turns u(sl2)-linear maps between u(osp(1|2))-modules into u(osp(1|2))-linear ones. With
    φ: Ind Res M → M, a⊗m ↦ am and ψ: M → Ind Res M, m ↦ 1⊗m, φ∘Tr(ψ) = id, so every M is a
    direct summand of the module induced from its restriction.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.algebra.pbw import AlgebraElement, PBWAlgebra
from superalg_workbench.algebra.presets import build_preset
from superalg_workbench.homalg.endring import decompose
from superalg_workbench.homalg.hom import hom_dim, intertwines
from superalg_workbench.homalg.isomorphism import is_isomorphic
from superalg_workbench.rep.families import sl2_projectives
from superalg_workbench.rep.module import Module, check_relations, restrict

logger = logging.getLogger(__name__)

FREE_WORDS = ((), ("E",), ("F",), ("E", "F"))
FREE_PARITIES = (0, 1, 1, 0)
RECONSTRUCTION_SAMPLES = 50
RECONSTRUCTION_SEED = 17


class FrobeniusError(Exception):
    """Raised for maps that are not u(sl2)-linear, mismatched characteristics and failed
    structural identities of the extension."""


def _osp(p: Union[int, PrimeField, PBWAlgebra]) -> PBWAlgebra:
    if isinstance(p, PBWAlgebra):
        if p.kind != "osp12" or p.is_smash or p.strict:
            raise FrobeniusError(f"Expected the osp12 preset, got {p.name}")
        return p
    return build_preset("osp12", p)


def embed_sl2(algebra: PBWAlgebra, monomial: Sequence[int]) -> AlgebraElement:
    """Image of e^a f^b h^c under e ↦ E², f ↦ -F², h ↦ h."""
    a, b, c = monomial
    word = ["E"] * (2 * a) + ["F"] * (2 * b) + ["h"] * c
    return algebra.word(word).scale(algebra.field.sign(b))


class FreeRightBasis:
    """Coordinates of u(osp(1|2)) = ⊕_w w·u(sl2), w ∈ {1, E, F, EF}."""

    def __init__(self, algebra: PBWAlgebra):
        self.algebra = algebra
        self.base = build_preset("sl2", algebra.p)
        field_ = algebra.field
        self.words = tuple(algebra.word(list(word)) for word in FREE_WORDS)
        self.embedding = field_.zeros(algebra.dim, self.base.dim)
        for col, monomial in enumerate(self.base.basis()):
            self.embedding[:, col] = embed_sl2(algebra, monomial).to_vector()
        columns = [
            (word * algebra.from_vector(self.embedding[:, col])).to_vector()
            for word in self.words
            for col in range(self.base.dim)
        ]
        self.matrix = field_.reduce(np.stack(columns, axis=1))
        self.inverse = field_.inverse(self.matrix)

    def components(self, element: AlgebraElement) -> list[AlgebraElement]:
        """The u(sl2) coefficients r_w with element = Σ_w w·r_w."""
        coordinates = self.algebra.field.matmul(self.inverse, element.to_vector().reshape(-1, 1))
        blocks = coordinates.reshape(len(self.words), self.base.dim)
        return [self.base.from_vector(block) for block in blocks]

    def form(self, element: AlgebraElement) -> AlgebraElement:
        return self.components(element)[-1]

    def lift(self, element: AlgebraElement) -> AlgebraElement:
        """u(sl2) element as an element of u(osp(1|2))."""
        vector = self.algebra.field.matmul(self.embedding, element.to_vector().reshape(-1, 1))
        return self.algebra.from_vector(vector[:, 0])


@functools.lru_cache(maxsize=None)
def free_right_basis(p: int) -> FreeRightBasis:
    return FreeRightBasis(build_preset("osp12", p))


@dataclass(frozen=True)
class DualProjectivePair:
    xs: tuple[AlgebraElement, ...]
    ys: tuple[AlgebraElement, ...]
    scalars: tuple[int, int]

    def total(self) -> AlgebraElement:
        result = self.xs[0].algebra.zero()
        for x, y in zip(self.xs, self.ys):
            result = result + y * x
        return result


def dual_pair(algebra: PBWAlgebra, scalars: tuple[int, int] = (1, 1)) -> DualProjectivePair:
    s, t = scalars
    x = algebra.generator("E").scale(s)
    y = algebra.generator("F").scale(t)
    one = algebra.one()
    bracket = x * y + y * x
    xs = (one, x, y, x * y + one - bracket)
    ys = (x * y, y, -x, one)
    return DualProjectivePair(xs, ys, (algebra.field.scalar(s), algebra.field.scalar(t)))


def scalar_lattice(field_: PrimeField) -> list[int]:
    """±1 and ±2⁻¹."""
    half = field_.half()
    return [1, field_.p - 1, half, field_.scalar(-half)]


def find_dual_pair(algebra: PBWAlgebra) -> DualProjectivePair:
    """First scalar assignment (s, t) from the lattice with Σ y_i x_i = 1."""
    lattice = scalar_lattice(algebra.field)
    for scalars in itertools.product(lattice, repeat=2):
        pair = dual_pair(algebra, scalars)
        if pair.total() == algebra.one():
            logger.debug("Dual projective pair with x = %d·E, y = %d·F", *scalars)
            return pair
    raise FrobeniusError(f"No scalar assignment gives Σ y_i x_i = 1 over {algebra.name}")


@dataclass
class DualPairReport:
    scalars: tuple[int, int]
    sum_is_one: bool
    residual: str
    reconstruction_checked: int
    reconstruction_failures: int

    @property
    def passed(self) -> bool:
        return self.sum_is_one and self.reconstruction_failures == 0


def verify_dual_pair(
    p: Union[int, PrimeField, PBWAlgebra],
    pair: Optional[DualProjectivePair] = None,
    samples: int = RECONSTRUCTION_SAMPLES,
    rng: Optional[np.random.Generator] = None,
) -> DualPairReport:
    """Σ y_i x_i = 1 and the reconstruction identity on `samples` random elements."""
    algebra = _osp(p)
    pair = pair if pair is not None else find_dual_pair(algebra)
    residual = pair.total() - algebra.one()
    failures = 0
    if samples:
        basis = free_right_basis(algebra.p)
        rng = rng if rng is not None else np.random.default_rng(RECONSTRUCTION_SEED)
        for _ in range(samples):
            element = algebra.random_element(rng, terms=6)
            rebuilt = algebra.zero()
            for x, y in zip(pair.xs, pair.ys):
                rebuilt = rebuilt + y * basis.lift(basis.form(x * element))
            if rebuilt != element:
                failures += 1
    report = DualPairReport(
        pair.scalars, residual.is_zero(), repr(residual), samples, failures
    )
    logger.info(
        "Dual pair over %s with scalars %s: Σ y_i x_i = 1: %s, reconstruction failures %d/%d",
        algebra.name,
        pair.scalars,
        report.sum_is_one,
        failures,
        samples,
    )
    return report


def induce(module: Module) -> Module:
    """u(osp(1|2)) ⊗_{u(sl2)} M on the basis w ⊗ m, w ∈ {1, E, F, EF}."""
    base = module.algebra
    if base.kind != "sl2" or base.is_smash or base.strict:
        raise FrobeniusError(f"induce expects a module over the sl2 preset, got {base.name}")
    basis = free_right_basis(base.p)
    algebra = basis.algebra
    field_ = algebra.field
    size = module.dim
    blocks = len(FREE_WORDS)
    action = []
    for gen in algebra.names:
        matrix = field_.zeros(blocks * size, blocks * size)
        for col, word in enumerate(basis.words):
            for row, component in enumerate(basis.components(algebra.generator(gen) * word)):
                if component.is_zero():
                    continue
                matrix[row * size : (row + 1) * size, col * size : (col + 1) * size] = (
                    module.element_matrix(component)
                )
        action.append(matrix)
    parity_base = module.parity if module.parity is not None else (0,) * size
    parity = tuple((bit + own) % 2 for bit in FREE_PARITIES for own in parity_base)
    induced = Module(algebra, tuple(action), parity, f"Ind {module.label}")
    check = check_relations(induced)
    if not check.passed:
        raise FrobeniusError(f"{induced.label} violates {check.relation}")
    return induced


def trace_map(
    matrix: np.ndarray, source: Module, target: Module, pair: Optional[DualProjectivePair] = None
) -> np.ndarray:
    """Tr(f) = Σ ρ_N(y_i)·f·ρ_M(x_i) for a u(sl2)-linear f: M → N."""
    if source.algebra.p != target.algebra.p:
        raise FrobeniusError("Source and target live over different characteristics")
    if not intertwines(restrict(source), restrict(target), matrix):
        raise FrobeniusError(
            f"The map {source.label} → {target.label} is not u(sl2)-linear"
        )
    pair = pair if pair is not None else find_dual_pair(source.algebra)
    field_ = source.field
    result = field_.zeros(target.dim, source.dim)
    for x, y in zip(pair.xs, pair.ys):
        result = result + field_.chain(
            [target.element_matrix(y), matrix, source.element_matrix(x)]
        )
    result = field_.reduce(result)
    if not intertwines(source, target, result):
        raise FrobeniusError(f"Tr of a map {source.label} → {target.label} is not osp-linear")
    return result


@dataclass
class SplitCertificate:
    module_id: str
    induced_dim: int
    phi: np.ndarray
    trace_psi: np.ndarray
    composite_is_identity: bool
    scalars: tuple[int, int]

    def as_certificate(self) -> dict:
        return {
            "module_id": self.module_id,
            "phi": self.phi.tolist(),
            "trace_psi": self.trace_psi.tolist(),
            "composite_is_identity": self.composite_is_identity,
            "scalars": list(self.scalars),
        }


def split_summand_check(module: Module) -> SplitCertificate:
    """φ∘Tr(ψ) = id for M → Ind Res M → M."""
    algebra = _osp(module.algebra)
    field_ = module.field
    pair = find_dual_pair(algebra)
    induced = induce(restrict(module))
    phi = np.hstack(
        [module.element_matrix(algebra.word(list(word))) for word in FREE_WORDS]
    )
    if not intertwines(induced, module, phi):
        raise FrobeniusError(f"a⊗m ↦ am is not osp-linear on {induced.label}")
    psi = field_.zeros(induced.dim, module.dim)
    psi[: module.dim] = field_.identity(module.dim)
    trace_psi = trace_map(psi, module, induced, pair)
    composite = field_.matmul(phi, trace_psi)
    identity = bool(np.array_equal(composite, field_.identity(module.dim)))
    if not identity:
        raise FrobeniusError(f"φ∘Tr(ψ) ≠ id on {module.label}")
    return SplitCertificate(module.label, induced.dim, phi, trace_psi, identity, pair.scalars)


@dataclass
class ProjectivityCertificate:
    split: SplitCertificate
    restriction_summands: list[str]
    projective: bool


def projectivity_certificate(module: Module) -> ProjectivityCertificate:
    """M is projective iff Res M is projective over u(sl2), given the split certificate."""
    split = split_summand_check(module)
    projectives = sl2_projectives(module.algebra.p)
    labels = []
    projective = True
    for summand in decompose(restrict(module)):
        match = next(
            (
                candidate
                for candidate in projectives
                if candidate.dim == summand.dim and is_isomorphic(summand, candidate).is_yes
            ),
            None,
        )
        if match is None:
            projective = False
            labels.append(f"non-projective({summand.dim})")
        else:
            labels.append(match.label)
    logger.info("%s projective: %s (restriction %s)", module.label, projective, labels)
    return ProjectivityCertificate(split, sorted(labels), projective)


@dataclass
class ReciprocityCheck:
    induced_dim: int
    induced_side: int
    restricted_side: int

    @property
    def holds(self) -> bool:
        return self.induced_side == self.restricted_side


def frobenius_reciprocity_check(base: Module, module: Module) -> ReciprocityCheck:
    """dim Hom_osp(Ind M, N) = dim Hom_sl2(M, Res N)."""
    if base.algebra.p != module.algebra.p:
        raise FrobeniusError("Base and target live over different characteristics")
    induced = induce(base)
    return ReciprocityCheck(
        induced.dim, hom_dim(induced, module), hom_dim(base, restrict(module))
    )
