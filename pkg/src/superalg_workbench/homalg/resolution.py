"""Projective Covers, Minimal Resolutions And Ext

Description:
    The cover of M collects, in catalogue order, maps P_λ → M that enlarge the image in the head
    of M. The minimal resolution iterates covers on syzygies: with K_n the inclusion of
    Ω^{n+1} = ker π_n into P_n and π_{n+1}: P_{n+1} → Ω^{n+1}, the differential is
    d_{n+1} = K_n·π_{n+1}.

    Ext^n(M, N) is the cohomology of Hom(P_•, N):

        dim Ext^n = dim Hom(P_n, N) - rank(∘d_{n+1}) - rank(∘d_n).

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.homalg.catalogue import Catalogue, catalogue_for
from superalg_workbench.homalg.composition import head_maps
from superalg_workbench.homalg.hom import hom_basis
from superalg_workbench.rep.module import (
    Module,
    direct_sum,
    from_smash_module,
    submodule,
    to_smash_module,
    zero_module,
)

logger = logging.getLogger(__name__)

MAX_DEPTH = 12


class ResolutionError(Exception):
    """Raised for failed covers, non-complexes or Ext queries beyond the computed depth."""


@dataclass
class ProjectiveCover:
    """P → M with P = ⊕ projectives[i] for i in `summands`; `surjection` is dim M x dim P."""

    module: Module
    surjection: np.ndarray
    summands: tuple[int, ...]


def projective_cover(module: Module, catalogue: Optional[Catalogue] = None) -> ProjectiveCover:
    catalogue = catalogue if catalogue is not None else catalogue_for(module.algebra)
    field_ = module.field
    if module.dim == 0:
        return ProjectiveCover(zero_module(module.algebra), field_.zeros(0, 0), ())
    counts, head = head_maps(module, catalogue)
    target_rank = field_.rank(head)
    maps: list[np.ndarray] = []
    summands: list[int] = []
    image = field_.zeros(head.shape[0], 0)
    rank = 0
    for index in sorted(counts):
        for candidate in hom_basis(catalogue.projectives[index], module).basis:
            trial = np.hstack([image, field_.matmul(head, candidate)])
            trial_rank = field_.rank(trial)
            if trial_rank > rank:
                image, rank = trial, trial_rank
                maps.append(candidate)
                summands.append(index)
            if rank == target_rank:
                break
        if rank == target_rank:
            break
    if rank < target_rank:
        raise ResolutionError(f"Could not cover the head of {module.label}")
    cover = direct_sum(*(catalogue.projectives[index] for index in summands))
    return ProjectiveCover(cover, np.hstack(maps), tuple(summands))


@dataclass
class Resolution:
    """Minimal projective resolution P_D → ... → P_0 → M.

    Args:
        module: the resolved module.
        covers: covers[n] maps P_n onto Ω^n (Ω^0 = M).
        differentials: differentials[n - 1] is d_n: P_n → P_{n-1}.
        catalogue: the catalogue the summand indices refer to.
    """

    module: Module
    covers: list[ProjectiveCover]
    differentials: list[np.ndarray]
    catalogue: Catalogue
    minimal: bool = True
    syzygy_dims: list[int] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.covers) - 1

    @property
    def projectives(self) -> list[Module]:
        return [cover.module for cover in self.covers]

    @property
    def ranks(self) -> list[int]:
        return [len(cover.summands) for cover in self.covers]

    @property
    def total_dims(self) -> list[int]:
        return [cover.module.dim for cover in self.covers]

    @property
    def augmentation(self) -> np.ndarray:
        return self.covers[0].surjection

    def differential(self, degree: int) -> np.ndarray:
        if not 1 <= degree <= self.depth:
            raise ResolutionError(
                f"No differential d_{degree} in a resolution of depth {self.depth}"
            )
        return self.differentials[degree - 1]

    def growth_table(self) -> list[tuple[int, int, int]]:
        """(degree, rank, total dim) per degree."""
        return [(n, rank, dim) for n, (rank, dim) in enumerate(zip(self.ranks, self.total_dims))]


def _top_projection(cover: ProjectiveCover, catalogue: Catalogue) -> np.ndarray:
    """P → ⊕ heads, block diagonal over the summands."""
    blocks = []
    for index in cover.summands:
        head = hom_basis(catalogue.projectives[index], catalogue.simples[index]).basis
        blocks.append(head.reshape(-1, catalogue.projectives[index].dim))
    if not blocks:
        return np.zeros((0, cover.module.dim), dtype=np.int64)
    rows = sum(block.shape[0] for block in blocks)
    result = np.zeros((rows, cover.module.dim), dtype=np.int64)
    row = col = 0
    for block in blocks:
        result[row : row + block.shape[0], col : col + block.shape[1]] = block
        row += block.shape[0]
        col += block.shape[1]
    return result


def minimal_resolution(
    module: Module, depth: int, catalogue: Optional[Catalogue] = None
) -> Resolution:
    if not 0 <= depth <= MAX_DEPTH:
        raise ResolutionError(f"Resolution depth must lie in [0, {MAX_DEPTH}], got {depth}")
    catalogue = catalogue if catalogue is not None else catalogue_for(module.algebra)
    field_ = module.field
    covers: list[ProjectiveCover] = []
    differentials: list[np.ndarray] = []
    syzygy_dims: list[int] = []
    syzygy = module
    inclusion: Optional[np.ndarray] = None
    for degree in range(depth + 1):
        syzygy_dims.append(syzygy.dim)
        cover = projective_cover(syzygy, catalogue)
        covers.append(cover)
        if inclusion is not None:
            differentials.append(field_.matmul(inclusion, cover.surjection))
        inclusion = field_.nullspace(cover.surjection)
        syzygy = submodule(cover.module, inclusion, f"Ω^{degree + 1}({module.label})")
        logger.debug(
            "Degree %d: %d summands, dim P = %d, dim Ω = %d",
            degree,
            len(cover.summands),
            cover.module.dim,
            syzygy.dim,
        )
    resolution = Resolution(module, covers, differentials, catalogue, syzygy_dims=syzygy_dims)
    resolution.minimal = _verify(resolution, field_)
    return resolution


def _verify(resolution: Resolution, field_: PrimeField) -> bool:
    """Checks that the sequence is a complex; returns whether every d_n lands in the radical."""
    maps = [resolution.augmentation] + resolution.differentials
    for degree in range(1, len(maps)):
        if np.any(field_.matmul(maps[degree - 1], maps[degree])):
            raise ResolutionError(f"d_{degree - 1}∘d_{degree} does not vanish")
    minimal = True
    for degree in range(1, len(maps)):
        top = _top_projection(resolution.covers[degree - 1], resolution.catalogue)
        if np.any(field_.matmul(top, maps[degree])):
            logger.warning("d_%d does not land in the radical", degree)
            minimal = False
    return minimal


def hom_from_sum(sources: Sequence[Module], target: Module, field_: PrimeField) -> np.ndarray:
    """Basis of Hom(⊕ sources, target), assembled blockwise; shape (k, dim N, Σ dim)."""
    total = sum(source.dim for source in sources)
    blocks = []
    offset = 0
    for source in sources:
        for element in hom_basis(source, target).basis:
            block = field_.zeros(target.dim, total)
            block[:, offset : offset + source.dim] = element
            blocks.append(block)
        offset += source.dim
    if not blocks:
        return np.zeros((0, target.dim, total), dtype=np.int64)
    return np.stack(blocks)


def _precompose_rank(field_: PrimeField, basis: np.ndarray, differential: np.ndarray) -> int:
    if basis.shape[0] == 0 or differential.size == 0:
        return 0
    images = np.einsum("kab,bc->kac", basis, differential) % field_.p
    return field_.rank(images.reshape(basis.shape[0], -1))


def _summand_modules(resolution: Resolution, degree: int) -> list[Module]:
    return [resolution.catalogue.projectives[i] for i in resolution.covers[degree].summands]


def ext_dim(
    source: Module,
    target: Module,
    degree: int,
    resolution: Optional[Resolution] = None,
    catalogue: Optional[Catalogue] = None,
) -> int:
    """dim Ext^n(M, N) from the minimal resolution of M."""
    if degree < 0:
        raise ResolutionError(f"Ext degree must be non-negative, got {degree}")
    if resolution is None:
        resolution = minimal_resolution(source, degree + 1, catalogue)
    if resolution.depth < degree + 1:
        raise ResolutionError(
            f"Ext^{degree} needs a resolution of depth {degree + 1}, got {resolution.depth}"
        )
    field_ = source.field
    basis = hom_from_sum(_summand_modules(resolution, degree), target, field_)
    outgoing = _precompose_rank(field_, basis, resolution.differential(degree + 1))
    incoming = 0
    if degree > 0:
        previous = hom_from_sum(_summand_modules(resolution, degree - 1), target, field_)
        incoming = _precompose_rank(field_, previous, resolution.differential(degree))
    return int(basis.shape[0]) - outgoing - incoming


def ext_dims(source: Module, target: Module, depth: int) -> list[int]:
    resolution = minimal_resolution(source, depth + 1)
    return [ext_dim(source, target, n, resolution) for n in range(depth + 1)]


def ext_dim_super(source: Module, target: Module, degree: int) -> int:
    """Ext^n in the category of supermodules, computed over the smash algebra."""
    if not source.algebra.is_smash:
        source, target = to_smash_module(source), to_smash_module(target)
    return ext_dim(source, target, degree)


@dataclass
class InvariantExtReport:
    """Plain Ext^n with the explicit Z2-action obtained from the lifted parity operator."""

    degree: int
    plain_dim: int
    invariant_dim: int
    super_dim: int
    lift_ok: bool

    @property
    def passed(self) -> bool:
        return self.lift_ok and self.invariant_dim == self.super_dim


def _column_intersection_dim(field_: PrimeField, left: np.ndarray, right: np.ndarray) -> int:
    if left.shape[1] == 0 or right.shape[1] == 0:
        return 0
    return field_.rank(left) + field_.rank(right) - field_.rank(np.hstack([left, right]))


def lemma27_check(source: Module, target: Module, degree: int) -> InvariantExtReport:
    """Compares Ext over the smash algebra with the Z2-invariants of the plain Ext.

    The parity operator σ_M is lifted to G_n: P_n → γ*P_n with ε·G_0 = σ_M·ε and
    d_n·G_n = G_{n-1}·d_n. The resolution is taken over the smash algebra, so its differentials
    are even and the parity operators of the P_n are such lifts; the lift equations are still
    checked. Z2 acts on Hom(P_n, N) by f ↦ σ_N·f·G_n.
    """
    if source.algebra.is_smash:
        raise ResolutionError("lemma27_check expects modules over the plain algebra")
    field_ = source.field
    smash_source, smash_target = to_smash_module(source), to_smash_module(target)
    resolution = minimal_resolution(smash_source, degree + 1)
    lifts = [cover.module.sign_matrix() for cover in resolution.covers]
    maps = [resolution.augmentation] + resolution.differentials
    lift_ok = field_.is_zero(
        field_.matmul(resolution.augmentation, lifts[0])
        - field_.matmul(source.sign_matrix(), resolution.augmentation)
    ) and all(
        field_.is_zero(
            field_.matmul(maps[n], lifts[n]) - field_.matmul(lifts[n - 1], maps[n])
        )
        for n in range(1, len(maps))
    )

    def plain_summands(n: int) -> list[Module]:
        return [from_smash_module(module) for module in _summand_modules(resolution, n)]

    basis = hom_from_sum(plain_summands(degree), target, field_)
    count = basis.shape[0]
    super_dim = ext_dim(smash_source, smash_target, degree, resolution)
    if count == 0:
        return InvariantExtReport(degree, 0, 0, super_dim, lift_ok)
    flat = basis.reshape(count, -1).T
    outgoing = np.einsum("kab,bc->kac", basis, resolution.differential(degree + 1)) % field_.p
    cycles = field_.nullspace(outgoing.reshape(count, -1).T)
    boundaries = field_.zeros(count, 0)
    previous = hom_from_sum(plain_summands(degree - 1), target, field_) if degree else None
    if previous is not None and previous.shape[0]:
        pulled = np.einsum("kab,bc->kac", previous, resolution.differential(degree)) % field_.p
        pulled = pulled.reshape(previous.shape[0], -1).T
        if np.any(pulled):
            boundaries = field_.coordinates(flat, field_.column_basis(pulled))
    acted = np.einsum("ab,kbc,cd->kad", target.sign_matrix(), basis, lifts[degree]) % field_.p
    action = field_.coordinates(flat, acted.reshape(count, -1).T)
    invariant = field_.nullspace((action - field_.identity(count)) % field_.p)

    plain_dim = cycles.shape[1] - boundaries.shape[1]
    invariant_dim = _column_intersection_dim(
        field_, cycles, invariant
    ) - _column_intersection_dim(field_, boundaries, invariant)
    logger.debug(
        "Degree %d: plain %d, invariant %d, super %d", degree, plain_dim, invariant_dim, super_dim
    )
    return InvariantExtReport(degree, plain_dim, invariant_dim, super_dim, lift_ok)
