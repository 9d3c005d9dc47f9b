"""Hom Spaces

Description:
    Solves the intertwiner equations T·ρ_M(x) = ρ_N(x)·T for all generators x.

    The source M is presented through a spanning forest: starting from a few root vectors, the
    generators are applied breadth first and every vector that enlarges the span becomes a
    basis vector b_k, defined as x·b_j for some earlier b_j. A homomorphism is determined by
    the images of the roots; the image of b_k is then a linear function L_k of the root images.
    The remaining constraints read

        ρ_N(x)·L_k = Σ_j c_jk·L_j   whenever x·b_k = Σ_j c_jk·b_j,

    and are solved generator by generator, restricting the space of root images each time.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
import weakref
from dataclasses import dataclass
from typing import Optional

import numpy as np

from superalg_workbench.algebra.field import EchelonBasis, PrimeField
from superalg_workbench.rep.module import Module, ModuleError

logger = logging.getLogger(__name__)

FOREST_SEED = 0


@dataclass(frozen=True)
class SpanningForest:
    """Basis of a module generated from roots.

    Args:
        basis: columns b_0..b_{m-1} spanning the module.
        roots: positions of the root vectors among the columns.
        parents: for every non-root column k the pair (generator index, parent column).
        structure: per generator the coordinates of x·b_k in the basis (B⁻¹ρ(x)B).
    """

    basis: np.ndarray
    roots: tuple[int, ...]
    parents: dict[int, tuple[int, int]]
    structure: tuple[np.ndarray, ...]
    basis_inverse: np.ndarray


_FOREST_CACHE: "weakref.WeakKeyDictionary[Module, SpanningForest]" = weakref.WeakKeyDictionary()


def spanning_forest(module: Module) -> SpanningForest:
    cached = _FOREST_CACHE.get(module)
    if cached is not None:
        return cached
    field = module.field
    dim = module.dim
    rng = np.random.default_rng(FOREST_SEED)
    echelon = EchelonBasis(field, dim)
    vectors: list[np.ndarray] = []
    roots: list[int] = []
    parents: dict[int, tuple[int, int]] = {}
    while echelon.rank < dim:
        root = field.random_matrix(rng, dim, 1)[:, 0]
        if not echelon.add(root):
            continue
        roots.append(len(vectors))
        vectors.append(root)
        queue = [len(vectors) - 1]
        while queue:
            current = queue.pop(0)
            for gen_index, matrix in enumerate(module.action):
                image = field.matmul(matrix, vectors[current])
                if echelon.add(image):
                    parents[len(vectors)] = (gen_index, current)
                    queue.append(len(vectors))
                    vectors.append(image)
    basis = np.stack(vectors, axis=1) if vectors else field.zeros(0, 0)
    inverse = field.inverse(basis) if dim else basis
    structure = tuple(field.chain([inverse, matrix, basis]) for matrix in module.action)
    forest = SpanningForest(basis, tuple(roots), parents, structure, inverse)
    _FOREST_CACHE[module] = forest
    logger.debug("Spanning forest of %s: %d roots for dim %d", module.label, len(roots), dim)
    return forest


@dataclass(frozen=True)
class HomSpace:
    """Basis of Hom_A(M, N); basis[k] is a dim N x dim M matrix."""

    source: Module
    target: Module
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def field(self) -> PrimeField:
        return self.source.field

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, index: int) -> np.ndarray:
        return self.basis[index]

    def combination(self, coeffs) -> np.ndarray:
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if self.dim == 0:
            return self.field.zeros(self.target.dim, self.source.dim)
        return np.tensordot(coeffs, self.basis, axes=1) % self.field.p

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        return self.combination(rng.integers(0, self.field.p, size=self.dim))

    def coordinates(self, matrix: np.ndarray) -> Optional[np.ndarray]:
        """Coordinates of a homomorphism in this basis, None if it does not lie in the space."""
        if self.dim == 0:
            return np.zeros(0, dtype=np.int64) if not np.any(matrix) else None
        flat = self.basis.reshape(self.dim, -1).T
        result = self.field.solve(flat, matrix.reshape(-1, 1))
        return result.particular[:, 0] if result.consistent else None


def _check_compatible(source: Module, target: Module):
    if not source.algebra.same_as(target.algebra):
        raise ModuleError(
            f"Hom between modules over {source.algebra.name} and {target.algebra.name}"
        )


def intertwines(source: Module, target: Module, matrix: np.ndarray) -> bool:
    field = source.field
    return all(
        not np.any((field.matmul(matrix, a) - field.matmul(b, matrix)) % field.p)
        for a, b in zip(source.action, target.action)
    )


def _hom_into_line(source: Module, target: Module) -> np.ndarray:
    """Hom(M, N) for dim N = 1: row vectors y with y·ρ_M(x) = c_x·y."""
    field = source.field
    constraints = np.vstack(
        [
            (a.T - b[0, 0] * field.identity(source.dim)) % field.p
            for a, b in zip(source.action, target.action)
        ]
    )
    kernel = field.nullspace(constraints)
    return kernel.T.reshape(-1, 1, source.dim)


def hom_basis(source: Module, target: Module) -> HomSpace:
    """Basis of all module maps source → target."""
    _check_compatible(source, target)
    field = source.field
    m, n = source.dim, target.dim
    if m == 0 or n == 0:
        return HomSpace(source, target, np.zeros((0, n, m), dtype=np.int64))
    if n == 1:
        return HomSpace(source, target, _hom_into_line(source, target))

    forest = spanning_forest(source)
    roots = forest.roots
    unknowns = n * len(roots)
    # images[k] is the n x unknowns matrix L_k
    images = np.zeros((m, n, unknowns), dtype=np.int64)
    for position, root in enumerate(roots):
        images[root, :, position * n : (position + 1) * n] = field.identity(n)
    for child in sorted(forest.parents):
        gen_index, parent = forest.parents[child]
        images[child] = field.matmul(target.action[gen_index], images[parent])

    for gen_index, coords in enumerate(forest.structure):
        if images.shape[2] == 0:
            break
        pushed = np.einsum("ab,kbu->kau", target.action[gen_index], images) % field.p
        expected = np.einsum("jk,jau->kau", coords, images) % field.p
        constraint = ((pushed - expected) % field.p).reshape(-1, images.shape[2])
        if not np.any(constraint):
            continue
        kernel = field.nullspace(constraint)
        images = np.einsum("kau,uv->kav", images, kernel) % field.p

    count = images.shape[2]
    # columns of each map in the forest basis, then back to the standard basis
    in_forest = np.transpose(images, (2, 1, 0))
    basis = np.einsum("dak,kj->daj", in_forest, forest.basis_inverse) % field.p
    logger.debug("dim Hom(%s, %s) = %d", source.label, target.label, count)
    return HomSpace(source, target, basis.astype(np.int64))


def hom_dim(source: Module, target: Module) -> int:
    return hom_basis(source, target).dim


def end_basis(module: Module) -> HomSpace:
    return hom_basis(module, module)


def even_part(module_source: Module, module_target: Module, matrix: np.ndarray) -> np.ndarray:
    """Parity-preserving part of a linear map between supermodules."""
    if module_source.parity is None or module_target.parity is None:
        return matrix
    source = np.array(module_source.parity)
    target = np.array(module_target.parity)
    mask = target[:, None] == source[None, :]
    return np.where(mask, matrix, 0)
