"""Modules

Description:
    A module over a PBW algebra is one square matrix over F_p per generator, plus an optional
    parity vector turning it into a supermodule. Structural operations (direct sums, parity
    change, duals, restriction to u(sl2), passage to the smash product, sub- and quotient
    modules) act on these matrices directly.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from superalg_workbench.algebra.field import EchelonBasis, PrimeField
from superalg_workbench.algebra.pbw import AlgebraElement, Monomial, PBWAlgebra
from superalg_workbench.algebra.presets import build_preset, smash

logger = logging.getLogger(__name__)


class ModuleError(Exception):
    """Raised for inconsistent module data or operations across different algebras."""


@dataclass(frozen=True, eq=False)
class Module:
    """A finite-dimensional module.

    Args:
        algebra: the acting algebra.
        action: one dim x dim matrix per generator, in generator order.
        parity: optional parity per basis vector.
        label: human-readable name, e.g. 'P^1' or 'V^0(2)'.
    """

    algebra: PBWAlgebra
    action: tuple[np.ndarray, ...]
    parity: Optional[tuple[int, ...]] = None
    label: str = ""

    def __post_init__(self):
        if len(self.action) != self.algebra.rank:
            raise ModuleError(
                f"{self.algebra.name} has {self.algebra.rank} generators, got {len(self.action)} "
                "action matrices"
            )
        dims = {matrix.shape for matrix in self.action}
        if len(dims) > 1 or any(rows != cols for rows, cols in dims):
            raise ModuleError(f"Action matrices must be square of equal size, got {dims}")
        if self.parity is not None and len(self.parity) != self.dim:
            raise ModuleError(f"Parity vector of length {len(self.parity)} for dim {self.dim}")

    @property
    def dim(self) -> int:
        return int(self.action[0].shape[0]) if self.action else 0

    @property
    def field(self) -> PrimeField:
        return self.algebra.field

    def matrix(self, name: Union[str, int]) -> np.ndarray:
        return self.action[self.algebra.index_of(name)]

    def monomial_matrix(self, monomial: Monomial) -> np.ndarray:
        result = self.field.identity(self.dim)
        for index, exponent in enumerate(monomial):
            for _ in range(exponent):
                result = self.field.matmul(result, self.action[index])
        return result

    def element_matrix(self, element: AlgebraElement) -> np.ndarray:
        """Action matrix of an arbitrary algebra element."""
        if not element.algebra.same_as(self.algebra):
            raise ModuleError(f"Element of {element.algebra.name} acting on {self.algebra.name}")
        result = self.field.zeros(self.dim, self.dim)
        for monomial, coeff in element.terms.items():
            result = (result + coeff * self.monomial_matrix(monomial)) % self.field.p
        return result

    def terms_matrix(self, terms) -> np.ndarray:
        return self.element_matrix(self.algebra.element(terms))

    def sign_matrix(self) -> np.ndarray:
        """Diagonal matrix with (-1)^parity on the diagonal."""
        if self.parity is None:
            raise ModuleError(f"Module {self.label or '?'} carries no parity vector")
        return np.diag([self.field.sign(bit) for bit in self.parity]).astype(np.int64)

    def with_label(self, label: str) -> "Module":
        return Module(self.algebra, self.action, self.parity, label)

    def __repr__(self) -> str:
        return f"Module({self.label or 'unnamed'}, {self.algebra.name}, dim={self.dim})"


@dataclass(frozen=True)
class RelationCheck:
    """Outcome of check_relations; on failure `relation` names the broken relation."""

    passed: bool
    relation: Optional[str] = None
    witness: Optional[np.ndarray] = None


def _first_witness(field: PrimeField, difference: np.ndarray) -> np.ndarray:
    col = int(np.nonzero(np.any(field.reduce(difference), axis=0))[0][0])
    vector = field.zeros(difference.shape[1], 1)[:, 0]
    vector[col] = 1
    return vector


def check_relations(module: Module) -> RelationCheck:
    """Verifies all rewrite rules, truncation relations and parity compatibility."""
    algebra = module.algebra
    field = module.field
    for (j, i), terms in algebra.rewrite.items():
        left = field.matmul(module.action[j], module.action[i])
        difference = (left - module.terms_matrix(terms)) % field.p
        if np.any(difference):
            relation = f"{algebra.names[j]}·{algebra.names[i]} = {algebra.element(terms)}"
            return RelationCheck(False, relation, _first_witness(field, difference))
    for index, gen in enumerate(algebra.gens):
        left = field.matpow(module.action[index], gen.truncation)
        difference = (left - module.terms_matrix(gen.power_image)) % field.p
        if np.any(difference):
            relation = f"{gen.name}^{gen.truncation} = {algebra.element(gen.power_image)}"
            return RelationCheck(False, relation, _first_witness(field, difference))
    if module.parity is not None:
        parity = np.array(module.parity, dtype=np.int64)
        for index, gen in enumerate(algebra.gens):
            matrix = module.action[index]
            if gen.grouplike:
                difference = (matrix - module.sign_matrix()) % field.p
                if np.any(difference):
                    relation = f"{gen.name} acts by the parity sign"
                    return RelationCheck(False, relation, _first_witness(field, difference))
                continue
            rows, cols = np.nonzero(matrix)
            bad = (parity[rows] + parity[cols] + gen.parity) % 2 != 0
            if np.any(bad):
                vector = field.zeros(module.dim, 1)[:, 0]
                vector[cols[np.argmax(bad)]] = 1
                return RelationCheck(False, f"{gen.name} has parity {gen.parity}", vector)
    return RelationCheck(True)


def _check_same_algebra(left: Module, right: Module):
    if not left.algebra.same_as(right.algebra):
        raise ModuleError(
            f"Modules over different algebras: {left.algebra.name} and {right.algebra.name}"
        )


def direct_sum(*modules: Module) -> Module:
    if not modules:
        raise ModuleError("direct_sum needs at least one module")
    for other in modules[1:]:
        _check_same_algebra(modules[0], other)
    algebra = modules[0].algebra
    dim = sum(module.dim for module in modules)
    action = []
    for index in range(algebra.rank):
        matrix = algebra.field.zeros(dim, dim)
        offset = 0
        for module in modules:
            matrix[offset : offset + module.dim, offset : offset + module.dim] = module.action[
                index
            ]
            offset += module.dim
        action.append(matrix)
    parity = None
    if all(module.parity is not None for module in modules):
        parity = tuple(bit for module in modules for bit in (module.parity or ()))
    label = " ⊕ ".join(module.label or "?" for module in modules)
    return Module(algebra, tuple(action), parity, label)


def parity_change(module: Module) -> Module:
    """ΠM: flips the parity vector; over a smash algebra g changes sign."""
    if module.parity is None:
        raise ModuleError("Parity change needs a parity vector")
    action = tuple(
        (-matrix) % module.field.p if gen.grouplike else matrix
        for gen, matrix in zip(module.algebra.gens, module.action)
    )
    parity = tuple(1 - bit for bit in module.parity)
    label = module.label[2:] if module.label.startswith("Π ") else f"Π {module.label}"
    return Module(module.algebra, action, parity, label)


def twist_by_parity(module: Module) -> Module:
    """γ*M: odd generators act with an extra sign."""
    action = tuple(
        (-matrix) % module.field.p if gen.parity else matrix
        for gen, matrix in zip(module.algebra.gens, module.action)
    )
    return Module(module.algebra, action, module.parity, f"γ*{module.label}")


def dual(module: Module) -> Module:
    """Dual module through the antipode: x ↦ -x for primitive x, g ↦ g."""
    if module.algebra.kind not in ("sl2", "osp12") or module.algebra.strict:
        raise ModuleError(f"Duals are only available over the presets, not {module.algebra.name}")
    field = module.field
    needs_sign = any(gen.parity for gen in module.algebra.gens)
    sign = module.sign_matrix() if needs_sign else None
    action = []
    for gen, matrix in zip(module.algebra.gens, module.action):
        if gen.grouplike:
            action.append(matrix.T.copy())
        elif gen.parity:
            action.append(field.matmul(matrix.T, sign))
        else:
            action.append((-matrix.T) % field.p)
    return Module(module.algebra, tuple(action), module.parity, f"{module.label}*")


def restrict(module: Module) -> Module:
    """Restriction from u(osp(1|2)) (or its smash product) to u(sl2) with e = E², f = -F²."""
    algebra = module.algebra
    if algebra.kind != "osp12" or algebra.strict:
        raise ModuleError(f"restrict expects a module over osp12, got {algebra.name}")
    field = module.field
    target = build_preset("sl2_smash" if algebra.is_smash else "sl2", algebra.p)
    E, F, h = module.matrix("E"), module.matrix("F"), module.matrix("h")
    action = [field.matmul(E, E), (-field.matmul(F, F)) % field.p, h]
    if algebra.is_smash:
        action.append(module.matrix("g"))
    return Module(target, tuple(action), module.parity, f"res {module.label}")


def to_smash_module(module: Module) -> Module:
    """The supermodule seen as a module over A#κZ2, g acting by the parity sign."""
    if module.algebra.is_smash:
        raise ModuleError(f"{module.label} is already a module over {module.algebra.name}")
    target = smash(module.algebra)
    action = module.action + (module.sign_matrix(),)
    return Module(target, action, module.parity, module.label)


def from_smash_module(module: Module) -> Module:
    """Forgets the action of g, keeping the parity vector."""
    algebra = module.algebra
    if algebra.base is None:
        raise ModuleError(f"{algebra.name} is not a smash product")
    action = tuple(m for gen, m in zip(algebra.gens, module.action) if not gen.grouplike)
    return Module(algebra.base, action, module.parity, module.label)


def regular_module(algebra: PBWAlgebra) -> Module:
    action = tuple(algebra.left_multiplication_matrix(index) for index in range(algebra.rank))
    parity = tuple(algebra.monomial_parity(monomial) for monomial in algebra.basis())
    logger.debug("Regular module of %s (dim %d)", algebra.name, algebra.dim)
    return Module(algebra, action, parity, f"reg {algebra.name}")


def trivial_module(algebra: PBWAlgebra) -> Module:
    """The counit module κ: primitive generators act by 0, the group-like g by 1."""
    action = tuple(
        np.ones((1, 1), dtype=np.int64) if gen.grouplike else np.zeros((1, 1), dtype=np.int64)
        for gen in algebra.gens
    )
    return Module(algebra, action, (0,), "κ")


def zero_module(algebra: PBWAlgebra) -> Module:
    action = tuple(np.zeros((0, 0), dtype=np.int64) for _ in algebra.gens)
    return Module(algebra, action, (), "0")


def _homogeneous_parity(module: Module, basis: np.ndarray) -> Optional[tuple[int, ...]]:
    if module.parity is None:
        return None
    parity = np.array(module.parity)
    bits = []
    for col in range(basis.shape[1]):
        support = set(parity[np.nonzero(basis[:, col])[0]].tolist())
        if len(support) != 1:
            return None
        bits.append(support.pop())
    return tuple(bits)


def submodule(module: Module, basis: np.ndarray, label: str = "") -> Module:
    """Module structure on the span of the independent columns of `basis`."""
    field = module.field
    basis = field.reduce(basis)
    if basis.shape[1] == 0:
        return zero_module(module.algebra)
    selector = field.independent_rows(basis)
    square_inverse = field.inverse(basis[selector])
    action = []
    for matrix in module.action:
        image = field.matmul(matrix, basis)
        coords = field.matmul(square_inverse, image[selector])
        if np.any((field.matmul(basis, coords) - image) % field.p):
            raise ModuleError("The given subspace is not a submodule")
        action.append(coords)
    return Module(module.algebra, tuple(action), _homogeneous_parity(module, basis), label)


def complement_basis(field: PrimeField, basis: np.ndarray) -> np.ndarray:
    """Standard basis vectors completing the independent columns of `basis` to a basis."""
    size = basis.shape[0]
    echelon = EchelonBasis(field, size)
    for col in range(basis.shape[1]):
        echelon.add(basis[:, col])
    chosen = []
    for index in range(size):
        unit = field.zeros(size, 1)[:, 0]
        unit[index] = 1
        if echelon.add(unit):
            chosen.append(index)
    complement = field.zeros(size, len(chosen))
    for col, index in enumerate(chosen):
        complement[index, col] = 1
    return complement


def quotient_with_projection(
    module: Module, basis: np.ndarray, label: str = ""
) -> tuple[Module, np.ndarray]:
    """M/U for the submodule U spanned by `basis`, together with the projection M → M/U."""
    field = module.field
    basis = field.column_basis(basis) if basis.size else field.zeros(module.dim, 0)
    complement = complement_basis(field, basis)
    full = np.hstack([basis, complement])
    inverse = field.inverse(full)
    projection = inverse[basis.shape[1] :]
    action = tuple(
        field.chain([projection, matrix, complement]) for matrix in module.action
    )
    parity = None
    if module.parity is not None:
        parity = tuple(
            module.parity[int(np.nonzero(complement[:, col])[0][0])]
            for col in range(complement.shape[1])
        )
    return Module(module.algebra, action, parity, label), projection


def quotient(module: Module, basis: np.ndarray, label: str = "") -> Module:
    return quotient_with_projection(module, basis, label)[0]


def change_of_basis(module: Module, transform: np.ndarray, label: Optional[str] = None) -> Module:
    """Module with action T⁻¹ρT for an invertible T (columns = new basis vectors)."""
    field = module.field
    inverse = field.inverse(transform)
    action = tuple(field.chain([inverse, matrix, transform]) for matrix in module.action)
    return Module(
        module.algebra,
        action,
        _homogeneous_parity(module, transform),
        module.label if label is None else label,
    )


def generated_submodule_basis(module: Module, vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Basis (columns) of the submodule generated by `vectors`."""
    field = module.field
    echelon = EchelonBasis(field, module.dim)
    found = []
    pending = [field.reduce(vector) for vector in vectors]
    while pending:
        vector = pending.pop()
        if not echelon.add(vector):
            continue
        found.append(vector)
        pending.extend(field.matmul(matrix, vector) for matrix in module.action)
    if not found:
        return field.zeros(module.dim, 0)
    return np.stack(found, axis=1)
