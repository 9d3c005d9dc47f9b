"""Endomorphism Rings

Description:
    End rings as matrix algebras: locality, the Jacobson radical with its Loewy series, Fitting
    decompositions into indecomposable summands and the quiver shapes of the End rings of the
    projective modules over u(osp(1|2)).

    All End rings met here are split, End/rad being a product of matrix rings over F_p. An
    element whose spectrum does not lie in F_p is reported through EndRingError instead of
    being accepted.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from superalg_workbench.algebra.field import EchelonBasis, PrimeField
from superalg_workbench.homalg.hom import HomSpace, end_basis, even_part, hom_basis
from superalg_workbench.rep.module import Module, direct_sum, submodule

logger = logging.getLogger(__name__)

DECOMPOSITION_SEED = 7
RANDOM_CANDIDATES = 32


class EndRingError(Exception):
    """Raised for End rings with a non-split quotient or a local summand that is not local."""


class DecompositionError(EndRingError):
    """Raised if a module with non-local End ring cannot be split."""


def eigenvalues_in_field(field_: PrimeField, matrix: np.ndarray) -> list[int]:
    """The c in F_p for which matrix - c·1 is singular."""
    size = matrix.shape[0]
    identity = field_.identity(size)
    return [c for c in field_.elements() if field_.rank((matrix - c * identity) % field_.p) < size]


def _span(field_: PrimeField, matrices: list[np.ndarray], size: int) -> np.ndarray:
    """Basis (as stacked matrices) of the span of the given square matrices."""
    if not matrices:
        return np.zeros((0, size, size), dtype=np.int64)
    rows = field_.row_space(np.stack([m.reshape(-1) for m in matrices]))
    return rows.reshape(-1, size, size)


def product_space(field_: PrimeField, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Span of all products a·b with a from `left` and b from `right`."""
    size = left.shape[1] if left.size else right.shape[1] if right.size else 0
    if left.shape[0] == 0 or right.shape[0] == 0:
        return np.zeros((0, size, size), dtype=np.int64)
    products = np.einsum("aij,bjk->abik", left, right) % field_.p
    return _span(field_, list(products.reshape(-1, size, size)), size)


def loewy_series(field_: PrimeField, radical: np.ndarray, limit: int = 64) -> Optional[list[int]]:
    """Dimensions of rad, rad², ... down to 0; None if the powers stabilize above 0."""
    dims = [int(radical.shape[0])]
    power = radical
    while power.shape[0] > 0:
        power = product_space(field_, power, radical)
        if power.shape[0] == dims[-1] or len(dims) > limit:
            return None
        dims.append(int(power.shape[0]))
    return dims


def local_character(field_: PrimeField, matrix: np.ndarray) -> Optional[int]:
    """The unique eigenvalue c of `matrix` if matrix - c·1 is nilpotent, else None."""
    values = eigenvalues_in_field(field_, matrix)
    if len(values) != 1:
        return None
    size = matrix.shape[0]
    shifted = (matrix - values[0] * field_.identity(size)) % field_.p
    return values[0] if field_.is_zero(field_.matpow(shifted, size)) else None


@dataclass
class EndRing:
    """End(M) with its radical.

    Args:
        hom: basis of End(M).
        radical: basis of rad End(M), shape (r, dim M, dim M).
        loewy: dimensions (dim End, dim rad, dim rad², ..., 0).
        is_local: End/rad is one-dimensional.
        summands: local summands used for the radical of a non-local ring.
    """

    hom: HomSpace
    radical: np.ndarray
    loewy: list[int]
    is_local: bool
    summands: list[Module] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.hom.dim

    @property
    def module(self) -> Module:
        return self.hom.source

    def multiplication_table(self) -> np.ndarray:
        """table[a, b] holds the coordinates of basis[a]·basis[b]."""
        field_ = self.hom.field
        products = np.einsum("aij,bjk->abik", self.hom.basis, self.hom.basis) % field_.p
        flat = self.hom.basis.reshape(self.dim, -1).T
        coords = field_.coordinates(flat, products.reshape(self.dim * self.dim, -1).T)
        return coords.T.reshape(self.dim, self.dim, self.dim)


def frobenius_power(p: int, size: int) -> int:
    """Smallest power q of p with q >= size, so that φ^q kills the nilpotent part of φ."""
    power = p
    while power < size:
        power *= p
    return power


def _combine(field_: PrimeField, coords: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """The elements Σ_c coords[c, k]·basis[c], one per column k of coords."""
    return np.einsum("ck,cij->kij", coords, basis) % field_.p


def _residues(field_: PrimeField, ideal: np.ndarray, matrices: list[np.ndarray]) -> np.ndarray:
    """Columns: the flattened matrices reduced modulo span(ideal)."""
    size = matrices[0].shape[0]
    echelon = EchelonBasis(field_, size * size)
    for element in ideal:
        echelon.add(element.reshape(-1))
    return np.stack([echelon.reduce(matrix.reshape(-1)) for matrix in matrices], axis=1)


def commutator_ideal(field_: PrimeField, basis: np.ndarray) -> np.ndarray:
    """Two-sided ideal of the algebra span(basis) generated by all commutators."""
    size = basis.shape[1]
    commutators = [
        (field_.matmul(a, b) - field_.matmul(b, a)) % field_.p
        for a, b in itertools.combinations(basis, 2)
    ]
    ideal = _span(field_, commutators, size)
    while ideal.shape[0]:
        grown = _span(
            field_,
            [
                *ideal,
                *product_space(field_, basis, ideal),
                *product_space(field_, ideal, basis),
            ],
            size,
        )
        if grown.shape[0] == ideal.shape[0]:
            break
        ideal = grown
    return ideal


@dataclass
class ResidueStructure:
    """An algebra A of matrices modulo J, the preimage of the nilradical of A/[A, A].

    A/J is a product of finite fields. J is rad A exactly when J is nilpotent, and A is
    local exactly when in addition A/J is a single field.

    Args:
        radical: basis of J.
        nilpotent: J is nilpotent.
        fixed: elements a with a^p ≡ a mod J; modulo J they span one F_p per field factor.
    """

    radical: np.ndarray
    nilpotent: bool
    fixed: np.ndarray

    @property
    def factors(self) -> int:
        return int(self.fixed.shape[0] - self.radical.shape[0])


def residue_structure(field_: PrimeField, basis: np.ndarray) -> ResidueStructure:
    """J and the Frobenius-fixed elements of span(basis), which must contain the identity."""
    size = basis.shape[1]
    commutators = commutator_ideal(field_, basis)
    # φ ↦ φ^q is F_p-linear modulo the commutator ideal
    power = frobenius_power(field_.p, size)
    powers = [field_.matpow(element, power) for element in basis]
    coords = field_.nullspace(_residues(field_, commutators, powers))
    radical = _span(field_, [*commutators, *_combine(field_, coords, basis)], size)
    nilpotent = radical.shape[0] == 0 or loewy_series(field_, radical) is not None
    shifted = [(field_.matpow(element, field_.p) - element) % field_.p for element in basis]
    fixed = _combine(field_, field_.nullspace(_residues(field_, radical, shifted)), basis)
    return ResidueStructure(radical, nilpotent, fixed)


def _newton_idempotent(field_: PrimeField, element: np.ndarray) -> Optional[np.ndarray]:
    """Iterates e ↦ 3e² - 2e³; returns the idempotent once reached."""
    for _ in range(element.shape[0].bit_length() + 2):
        square = field_.matmul(element, element)
        if np.array_equal(square, element):
            return element
        element = (3 * square - 2 * field_.matmul(square, element)) % field_.p
    return element if np.array_equal(field_.matmul(element, element), element) else None


def lift_idempotent(field_: PrimeField, structure: ResidueStructure) -> Optional[np.ndarray]:
    """A non-trivial idempotent lifted from A/J, None if A/J is a single field or J is not nil."""
    if not structure.nilpotent or structure.factors < 2:
        return None
    size = structure.fixed.shape[1]
    identity = field_.identity(size)
    for element in structure.fixed:
        for value in field_.elements():
            # (a - c)^{p-1} is idempotent modulo J because a^p ≡ a
            guess = field_.matpow((element - value * identity) % field_.p, field_.p - 1)
            idempotent = _newton_idempotent(field_, guess)
            if idempotent is not None and 0 < field_.rank(idempotent) < size:
                return idempotent
    return None


def cyclic_algebra(field_: PrimeField, matrix: np.ndarray) -> np.ndarray:
    """Basis 1, φ, φ², ... of the commutative algebra F_p[φ]."""
    size = matrix.shape[0]
    echelon = EchelonBasis(field_, size * size)
    powers = []
    current = field_.identity(size)
    while echelon.add(current.reshape(-1)):
        powers.append(current)
        current = field_.matmul(current, matrix)
    return np.stack(powers)


def _split_local_radical(hom: HomSpace) -> Optional[np.ndarray]:
    """rad End(M) when End(M) is local with residue field F_p, else None."""
    field_ = hom.field
    size = hom.source.dim
    shifted = []
    for element in hom.basis:
        character = local_character(field_, element)
        if character is None:
            return None
        shifted.append((element - character * field_.identity(size)) % field_.p)
    radical = _span(field_, shifted, size)
    if loewy_series(field_, radical) is None:
        return None
    return radical


def local_radical(hom: HomSpace) -> Optional[np.ndarray]:
    """rad End(M) when End(M) is local, else None; residue fields F_{p^k} are allowed."""
    radical = _split_local_radical(hom)
    if radical is not None:
        return radical
    structure = residue_structure(hom.field, hom.basis)
    if structure.nilpotent and structure.factors == 1:
        return structure.radical
    return None


def is_local_end(hom: HomSpace) -> bool:
    return hom.source.dim > 0 and local_radical(hom) is not None


def _candidates(hom: HomSpace, rng: np.random.Generator):
    module = hom.source
    for _ in range(RANDOM_CANDIDATES):
        yield even_part(module, module, hom.random_element(rng))
    for _ in range(RANDOM_CANDIDATES):
        yield hom.random_element(rng)
    yield from hom.basis


def fitting_split(
    hom: HomSpace, rng: np.random.Generator
) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """A pair (image basis, kernel basis) with M = im ⊕ ker of some (φ - c)^n, if one is found.

    Only sampled endomorphisms with an eigenvalue in F_p are tried, so None does not prove
    that End(M) is local.
    """
    field_ = hom.field
    size = hom.source.dim
    for candidate in _candidates(hom, rng):
        for value in eigenvalues_in_field(field_, candidate):
            shifted = (candidate - value * field_.identity(size)) % field_.p
            power = field_.matpow(shifted, size)
            rank = field_.rank(power)
            if 0 < rank < size:
                return field_.column_basis(power), field_.nullspace(power)
    return None


def idempotent_split(
    hom: HomSpace, rng: np.random.Generator
) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """A pair (im e, im(1 - e)) for an idempotent e of End(M) lifted from End/rad.

    Returns None exactly when End(M) is local. If End/rad has matrix blocks, the
    idempotent comes from the primary decomposition of a sampled endomorphism.

    Raises:
        DecompositionError, if End(M) is not local and every sample has a single primary part.
    """
    if _split_local_radical(hom) is not None:
        return None
    field_ = hom.field
    size = hom.source.dim
    structure = residue_structure(field_, hom.basis)
    idempotent = lift_idempotent(field_, structure)
    if idempotent is None:
        if structure.nilpotent:
            return None
        for candidate in _candidates(hom, rng):
            commutative = cyclic_algebra(field_, candidate)
            idempotent = lift_idempotent(field_, residue_structure(field_, commutative))
            if idempotent is not None:
                break
        else:
            raise DecompositionError(
                f"End({hom.source.label}) is not local but no sampled endomorphism splits it"
            )
    complement = (field_.identity(size) - idempotent) % field_.p
    return field_.column_basis(idempotent), field_.column_basis(complement)


@dataclass(frozen=True)
class Summand:
    """An indecomposable summand with the columns spanning it inside the original module."""

    module: Module
    embedding: np.ndarray


def decompose_with_embeddings(
    module: Module, rng: Optional[np.random.Generator] = None
) -> list[Summand]:
    """Indecomposable summands together with their embeddings; the embeddings fill a basis."""
    if module.dim == 0:
        return []
    rng = rng if rng is not None else np.random.default_rng(DECOMPOSITION_SEED)
    field_ = module.field
    hom = end_basis(module)
    split = fitting_split(hom, rng)
    if split is None:
        try:
            split = idempotent_split(hom, rng)
        except DecompositionError as err:
            logger.warning("Keeping %s as one summand: %s", module.label, err)
    if split is None:
        return [Summand(module, field_.identity(module.dim))]
    logger.debug("Split %s into dims %d + %d", module.label, split[0].shape[1], split[1].shape[1])
    result = []
    for basis, tag in zip(split, ("im", "ker")):
        part = submodule(module, basis, f"{module.label}|{tag}")
        for piece in decompose_with_embeddings(part, rng):
            result.append(Summand(piece.module, field_.matmul(basis, piece.embedding)))
    return result


def decompose(module: Module, rng: Optional[np.random.Generator] = None) -> list[Module]:
    """Indecomposable summands of the module, each with a local End ring."""
    return [summand.module for summand in decompose_with_embeddings(module, rng)]


def is_indecomposable(module: Module) -> bool:
    return is_local_end(end_basis(module))


def end_ring(module: Module) -> EndRing:
    """End(M) with radical and Loewy series."""
    field_ = module.field
    hom = end_basis(module)
    size = module.dim
    radical = local_radical(hom) if size else np.zeros((0, 0, 0), dtype=np.int64)
    if radical is not None:
        loewy = [hom.dim] + (loewy_series(field_, radical) or [])
        return EndRing(hom, radical, loewy, is_local=size > 0, summands=[module])

    summands = decompose_with_embeddings(module)
    radical = _radical_from_summands(module, hom, summands)
    series = loewy_series(field_, radical)
    if series is None:
        raise EndRingError(f"The computed radical of End({module.label}) is not nilpotent")
    return EndRing(
        hom,
        radical,
        [hom.dim] + series,
        is_local=False,
        summands=[summand.module for summand in summands],
    )


def _radical_from_summands(
    module: Module, hom: HomSpace, summands: list[Summand]
) -> np.ndarray:
    """rad End(M) for M = ⊕ M_i with local End(M_i).

    φ lies in the radical iff θ_ji ∘ π_j φ ι_i ∈ rad End(M_i) for all pairs with M_i ≅ M_j,
    where θ_ji is an isomorphism M_j → M_i.
    """
    field_ = module.field
    injections = [summand.embedding for summand in summands]
    inverse = field_.inverse(np.hstack(injections))
    offsets = np.cumsum([0] + [summand.module.dim for summand in summands])
    projections = [inverse[offsets[i] : offsets[i + 1]] for i in range(len(summands))]
    annihilators = []
    for summand in summands:
        radical = local_radical(end_basis(summand.module))
        if radical is None:
            raise EndRingError(f"End({summand.module.label}) of a summand is not local")
        # functionals on the matrix space vanishing exactly on rad End(M_i)
        annihilators.append(field_.left_nullspace(radical.reshape(radical.shape[0], -1).T))

    constraints = []
    for i, j in itertools.product(range(len(summands)), repeat=2):
        if i == j:
            theta = field_.identity(summands[i].module.dim)
        else:
            theta = _isomorphism(summands[j].module, summands[i].module)
        if theta is None:
            continue
        blocks = np.stack(
            [
                field_.chain([theta, projections[j], element, injections[i]]).reshape(-1)
                for element in hom.basis
            ],
            axis=1,
        )
        constraints.append(field_.matmul(annihilators[i], blocks))
    coords = field_.nullspace(np.vstack(constraints))
    return _combine(field_, coords, hom.basis)


def _isomorphism(source: Module, target: Module) -> Optional[np.ndarray]:
    from superalg_workbench.homalg.isomorphism import is_isomorphic

    if source.dim != target.dim:
        return None
    return is_isomorphic(source, target).witness


@dataclass
class QuiverShape:
    """Result of a quiver-with-relations search on a local or two-vertex End ring.

    `orientation` names the relation set found for the local shape: "symmetric" for
    xy = yx = 0, x² = s·y² and "alternating" for x² = y² = 0, xy = t·yx.
    """

    matches: bool
    loewy: list[int]
    arrows: dict[str, np.ndarray] = field(default_factory=dict)
    scalars: dict[str, int] = field(default_factory=dict)
    detail: str = ""
    orientation: str = ""


LAMBDA1_LOEWY = [4, 3, 1, 0]


def _top_complement(field_: PrimeField, radical: np.ndarray, square: np.ndarray) -> np.ndarray:
    """Radical elements completing a basis of rad² to one of rad."""
    size = radical.shape[1]
    echelon = EchelonBasis(field_, size * size)
    for element in square:
        echelon.add(element.reshape(-1))
    tops = [element for element in radical if echelon.add(element.reshape(-1))]
    return np.stack(tops) if tops else np.zeros((0, size, size), dtype=np.int64)


def two_loop_shape(field_: PrimeField, radical: np.ndarray, loewy: list[int]) -> QuiverShape:
    """Searches loops x, y spanning rad/rad² for either relation set of the local shape.

    Since rad³ = 0, products of loops only depend on their classes modulo rad², so one
    representative per line of rad/rad² is enough. The symmetric set is tried first.
    """
    if loewy != LAMBDA1_LOEWY:
        return QuiverShape(False, loewy, detail=f"Loewy series {loewy}")
    square = product_space(field_, radical, radical)
    points = _projective_points(field_, _top_complement(field_, radical, square))
    pairs = [
        (x, y, field_.matmul(x, x), field_.matmul(y, y), field_.matmul(x, y), field_.matmul(y, x))
        for x, y in itertools.permutations(points, 2)
    ]
    for x, y, x2, y2, xy, yx in pairs:
        if np.any(xy) or np.any(yx) or not np.any(x2):
            continue
        s = _proportion(field_, x2, y2)
        if s is not None:
            return QuiverShape(
                True, loewy, {"x": x, "y": y}, {"s": s}, f"xy = yx = 0, x² = {s}·y²", "symmetric"
            )
    for x, y, x2, y2, xy, yx in pairs:
        if np.any(x2) or np.any(y2) or not np.any(xy):
            continue
        t = _proportion(field_, xy, yx)
        if t is not None:
            return QuiverShape(
                True, loewy, {"x": x, "y": y}, {"t": t}, f"x² = y² = 0, xy = {t}·yx", "alternating"
            )
    return QuiverShape(
        False, loewy, detail="no loops x, y with xy = yx = 0, x² = s·y² or x² = y² = 0, xy = t·yx"
    )


def lambda1_shape(module: Module) -> QuiverShape:
    """End(M) as a local ring with two loops x, y and Loewy dimensions (4, 3, 1, 0).

    Either orientation of the relations is accepted and the one found is reported: the
    symmetric κ⟨x, y⟩ / (xy, yx, x² - s·y²) or the alternating κ⟨x, y⟩ / (x², y², xy - t·yx).
    """
    ring = end_ring(module)
    return two_loop_shape(module.field, ring.radical, ring.loewy)


def _projective_points(field_: PrimeField, basis: np.ndarray) -> list[np.ndarray]:
    """One representative per line in the span of the (k, n, m) basis."""
    points = []
    for coeffs in itertools.product(field_.elements(), repeat=basis.shape[0]):
        nonzero = [c for c in coeffs if c]
        if nonzero and nonzero[0] == 1:
            points.append(np.einsum("c,cij->ij", np.array(coeffs), basis) % field_.p)
    return points


def _annihilators(field_: PrimeField, basis: np.ndarray, left: np.ndarray, right: np.ndarray):
    """Elements z of span(basis) with z·left = 0 and right·z = 0."""
    flat = []
    for element in basis:
        flat.append(
            np.concatenate(
                [
                    field_.matmul(element, left).reshape(-1),
                    field_.matmul(right, element).reshape(-1),
                ]
            )
        )
    coords = field_.nullspace(np.stack(flat, axis=1))
    return np.einsum("ck,cij->kij", coords, basis) % field_.p


def lambda2_shape(first: Module, second: Module) -> QuiverShape:
    """End(P ⊕ P') for the two-vertex quiver with arrows x1, y1: P → P' and x2, y2: P' → P.

    Relations: mixed products vanish, x2·x1 = s·y2·y1 and x1·x2 = t·y1·y2, with Loewy
    dimensions (8, 6, 2, 0).
    """
    field_ = first.field
    ring = end_ring(direct_sum(first, second))
    if ring.loewy != [8, 6, 2, 0]:
        return QuiverShape(False, ring.loewy, detail=f"Loewy series {ring.loewy}")
    forward = hom_basis(first, second).basis
    backward = hom_basis(second, first).basis
    if forward.shape[0] != 2 or backward.shape[0] != 2:
        return QuiverShape(False, ring.loewy, detail="arrow spaces are not two-dimensional")
    for y1, x1 in itertools.product(_projective_points(field_, forward), repeat=2):
        x2_space = _annihilators(field_, backward, y1, y1)
        y2_space = _annihilators(field_, backward, x1, x1)
        for x2 in _projective_points(field_, x2_space):
            for y2 in _projective_points(field_, y2_space):
                loop1 = field_.matmul(x2, x1), field_.matmul(y2, y1)
                loop2 = field_.matmul(x1, x2), field_.matmul(y1, y2)
                if not all(np.any(m) for m in (*loop1, *loop2)):
                    continue
                s = _proportion(field_, *loop1)
                t = _proportion(field_, *loop2)
                if s is None or t is None:
                    continue
                return QuiverShape(
                    True,
                    ring.loewy,
                    {"x1": x1, "y1": y1, "x2": x2, "y2": y2},
                    {"s": s, "t": t},
                    f"x2x1 = {s}·y2y1, x1x2 = {t}·y1y2",
                )
    return QuiverShape(False, ring.loewy, detail="no arrows satisfying the relations")


def _proportion(field_: PrimeField, left: np.ndarray, right: np.ndarray) -> Optional[int]:
    for s in range(1, field_.p):
        if field_.is_zero(left - s * right):
            return s
    return None


@dataclass
class BrickReport:
    label: str
    end_dim: int
    radical_dim: int
    is_brick: bool


def brick_report(module: Module) -> BrickReport:
    """End(M) ≅ κ, or the local shape κ[x]/(x²) for the middle Verma modules."""
    ring = end_ring(module)
    return BrickReport(module.label, ring.dim, int(ring.radical.shape[0]), ring.dim == 1)
