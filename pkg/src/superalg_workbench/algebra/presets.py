"""Algebra Presets

Description:
    Concrete presentations of the algebras the workbench verifies claims about:
    - u(sl2) with generators e < f < h,
    - u(osp(1|2)) in the folded PBW basis E < F < h with exponents (2p, 2p, p),
    - smash products A#κZ2 obtained by adjoining the parity involution g,
    - quantum complete intersections (QCIs) x_i x_j = q_ij x_j x_i, x_i^{N_i} = 0,
    - the graded osp(1|2) instance (a QCI in E, F with q = -1),
    - strict lift algebras that stand in for the untruncated algebras.

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

from superalg_workbench.algebra.field import PrimeField, PrimeFieldError
from superalg_workbench.algebra.pbw import GeneratorSpec, Monomial, PBWAlgebra

logger = logging.getLogger(__name__)

PRESET_NAMES = ("sl2", "osp12", "sl2_smash", "osp12_smash")
DEFAULT_MAX_P = 13

QCISpec = Sequence[tuple[int, Sequence[int]]]


class PresetError(Exception):
    """Raised for unknown presets, unsupported characteristics or malformed QCI data."""


def as_field(p: Union[int, PrimeField]) -> PrimeField:
    if isinstance(p, PrimeField):
        return p
    try:
        return PrimeField(int(p))
    except PrimeFieldError as error:
        raise PresetError(str(error)) from error


def _check_range(field: PrimeField, max_p: int = DEFAULT_MAX_P):
    if not 3 <= field.p <= max_p:
        raise PresetError(f"p={field.p} outside the supported range 3..{max_p}")


def build_preset(name: str, p: Union[int, PrimeField]) -> PBWAlgebra:
    """Builds one of the named presets; results are cached per (name, p)."""
    field = as_field(p)
    if name not in PRESET_NAMES:
        raise PresetError(f"Unsupported preset '{name}', available: {PRESET_NAMES}")
    return _build_preset(name, field)


@functools.lru_cache(maxsize=None)
def _build_preset(name: str, field: PrimeField) -> PBWAlgebra:
    _check_range(field)
    if name == "sl2":
        return _sl2(field)
    if name == "osp12":
        return _osp12(field)
    base = _build_preset(name.removesuffix("_smash"), field)
    return smash(base)


def _sl2(field: PrimeField, strict: bool = False, bounds: Optional[Sequence[int]] = None):
    p = field.p
    e_bound, f_bound, h_bound = bounds or (p, p, p)
    zero = {}
    h_image = {} if strict else {(0, 0, 1): 1}
    gens = [
        GeneratorSpec("e", 0, e_bound, zero, weight=2),
        GeneratorSpec("f", 0, f_bound, zero, weight=-2),
        GeneratorSpec("h", 0, h_bound, h_image, weight=0),
    ]
    rewrite = {
        (1, 0): {(1, 1, 0): 1, (0, 0, 1): -1},  # fe = ef - h
        (2, 0): {(1, 0, 1): 1, (1, 0, 0): 2},  # he = eh + 2e
        (2, 1): {(0, 1, 1): 1, (0, 1, 0): -2},  # hf = fh - 2f
    }
    name = "sl2_lift" if strict else "sl2"
    return PBWAlgebra(field, gens, rewrite, name=name, kind="sl2", strict=strict)


def _osp12(field: PrimeField, strict: bool = False, bounds: Optional[Sequence[int]] = None):
    p = field.p
    e_bound, f_bound, h_bound = bounds or (2 * p, 2 * p, p)
    h_image = {} if strict else {(0, 0, 1): 1}
    gens = [
        GeneratorSpec("E", 1, e_bound, {}, weight=1),
        GeneratorSpec("F", 1, f_bound, {}, weight=-1),
        GeneratorSpec("h", 0, h_bound, h_image, weight=0),
    ]
    rewrite = {
        (1, 0): {(0, 0, 1): 1, (1, 1, 0): -1},  # FE = h - EF
        (2, 0): {(1, 0, 1): 1, (1, 0, 0): 1},  # hE = Eh + E
        (2, 1): {(0, 1, 1): 1, (0, 1, 0): -1},  # hF = Fh - F
    }
    name = "osp12_lift" if strict else "osp12"
    return PBWAlgebra(field, gens, rewrite, name=name, kind="osp12", strict=strict)


@functools.lru_cache(maxsize=None)
def lift_preset(name: str, p: Union[int, PrimeField]) -> PBWAlgebra:
    """Strict copy of u(sl2) or u(osp(1|2)) standing in for the enveloping algebra U.

    The bounds are large enough that no product of two normal-form monomials of the restricted
    algebra leaves the truncated range; a product that would is reported as
    TruncationOverflowError instead of being silently truncated.
    """
    field = as_field(p)
    if name == "osp12":
        return _osp12(field, strict=True, bounds=(4 * field.p, 4 * field.p, 4 * field.p))
    if name == "sl2":
        return _sl2(field, strict=True, bounds=(2 * field.p, 2 * field.p, 4 * field.p))
    raise PresetError(f"No lift available for '{name}'")


@functools.lru_cache(maxsize=None)
def smash(algebra: PBWAlgebra) -> PBWAlgebra:
    """Smash product with κZ2: adjoins g with g^2 = 1 and g·x = (-1)^{|x|} x·g."""
    if algebra.is_smash:
        raise PresetError(f"{algebra.name} already contains a group-like generator")
    rank = algebra.rank
    gens = list(algebra.gens) + [
        GeneratorSpec("g", 0, 2, {(0,) * (rank + 1): 1}, weight=0, grouplike=True)
    ]
    rewrite: dict[tuple[int, int], dict[Monomial, int]] = {
        key: {monomial + (0,): coeff for monomial, coeff in terms.items()}
        for key, terms in algebra.rewrite.items()
    }
    for index, gen in enumerate(algebra.gens):
        exps = [0] * (rank + 1)
        exps[index] = 1
        exps[rank] = 1
        rewrite[(rank, index)] = {tuple(exps): -1 if gen.parity else 1}
    # Power images keep their meaning with the extra exponent 0 for g.
    gens = [
        GeneratorSpec(
            gen.name,
            gen.parity,
            gen.truncation,
            {monomial + (0,): coeff for monomial, coeff in gen.power_image.items()},
            gen.weight,
            gen.grouplike,
        )
        if not gen.grouplike
        else gen
        for gen in gens
    ]
    return PBWAlgebra(
        algebra.field,
        gens,
        rewrite,
        name=f"{algebra.name}_smash",
        kind=algebra.kind,
        base=algebra,
    )


def qci_matrix(field: PrimeField, spec: QCISpec) -> list[list[int]]:
    """Full matrix q with q_ij from the presentation for i < j, q_ji = q_ij^{-1} and q_ii = 1."""
    size = len(spec)
    matrix = [[1] * size for _ in range(size)]
    for i, (_, row) in enumerate(spec):
        if len(row) != size - 1 - i:
            raise PresetError(
                f"Row {i} of the QCI presentation needs {size - 1 - i} entries q_ij (j > i), "
                f"got {len(row)}"
            )
        for offset, value in enumerate(row):
            j = i + 1 + offset
            if int(value) % field.p == 0:
                raise PresetError(f"q_{i + 1}{j + 1} must be non-zero")
            matrix[i][j] = int(value) % field.p
            matrix[j][i] = field.inv(value)
    return matrix


def build_qci(
    spec: QCISpec,
    p: Union[int, PrimeField],
    parities: Optional[Sequence[int]] = None,
    weights: Optional[Sequence[int]] = None,
    names: Optional[Sequence[str]] = None,
    strict: bool = False,
    name: Optional[str] = None,
) -> PBWAlgebra:
    """Quantum complete intersection with x_i x_j = q_ij x_j x_i (i < j) and x_i^{N_i} = 0.

    Args:
        spec: list of (N_i, [q_ij for j > i]).
        p: characteristic.
        parities: optional parities of the generators (default all even).
        weights: optional Cartan weights alpha_i of the generators.
        names: optional generator names (default x1, x2, ...).
        strict: raise on truncation overflow, used by lift algebras.
    """
    field = as_field(p)
    size = len(spec)
    if size == 0:
        raise PresetError("A QCI needs at least one generator")
    truncations = [int(entry[0]) for entry in spec]
    if any(truncation < 2 for truncation in truncations):
        raise PresetError(f"All N_i must be >= 2, got {truncations}")
    q = qci_matrix(field, spec)
    parities = list(parities) if parities is not None else [0] * size
    weights = list(weights) if weights is not None else [0] * size
    names = list(names) if names is not None else [f"x{i + 1}" for i in range(size)]
    gens = [
        GeneratorSpec(names[i], parities[i], truncations[i], {}, weight=weights[i])
        for i in range(size)
    ]
    rewrite: dict[tuple[int, int], dict[Monomial, int]] = {}
    for j in range(size):
        for i in range(j):
            exps = [0] * size
            exps[i] = exps[j] = 1
            rewrite[(j, i)] = {tuple(exps): q[j][i]}  # x_j x_i = q_ij^{-1} x_i x_j
    algebra = PBWAlgebra(
        field,
        gens,
        rewrite,
        name=name or "qci" + "".join(f"_{n}" for n in truncations),
        kind="qci",
        strict=strict,
    )
    algebra.qci_spec = tuple((n, tuple(row)) for n, row in spec)  # type: ignore[attr-defined]
    algebra.q_matrix = q  # type: ignore[attr-defined]
    return algebra


def qci_lift(algebra: PBWAlgebra, factor: int = 2) -> PBWAlgebra:
    """Strict QCI with truncations factor·N_i standing in for the q-polynomial ring."""
    spec = getattr(algebra, "qci_spec", None)
    if spec is None:
        raise PresetError(f"{algebra.name} is not a QCI")
    lifted = [(factor * n, row) for n, row in spec]
    return build_qci(
        lifted,
        algebra.field,
        parities=algebra.parities,
        weights=[gen.weight for gen in algebra.gens],
        names=algebra.names,
        strict=True,
        name=f"{algebra.name}_lift",
    )


@dataclass(frozen=True)
class EvenOddBasisView:
    """The basis e^a f^b h^c E^s F^t (s, t in {0, 1}) of u(osp(1|2)), e = E^2 and f = -F^2.

    Args:
        exponents: the tuples (a, b, c, s, t) in the order of the columns of `matrix`.
        matrix: column k holds the folded-basis coordinates of the k-th view element.
        invertible: True if the view elements form a basis.
    """

    exponents: tuple[tuple[int, int, int, int, int], ...]
    matrix: np.ndarray
    invertible: bool


def even_odd_basis_view(algebra: PBWAlgebra) -> EvenOddBasisView:
    """Change of basis from the even/odd PBW basis to the folded basis of u(osp(1|2))."""
    if algebra.kind != "osp12" or algebra.is_smash or algebra.strict:
        raise PresetError(f"The even/odd basis view needs the osp12 preset, got {algebra.name}")
    p = algebra.p
    exponents = tuple(itertools.product(range(p), range(p), range(p), range(2), range(2)))
    matrix = algebra.field.zeros(algebra.dim, len(exponents))
    for col, (a, b, c, s, t) in enumerate(exponents):
        word = ["E"] * (2 * a) + ["F"] * (2 * b) + ["h"] * c + ["E"] * s + ["F"] * t
        element = algebra.word(word).scale(algebra.field.sign(b))
        matrix[:, col] = element.to_vector()
    invertible = algebra.field.is_invertible(matrix)
    logger.debug("Even/odd basis view of %s invertible: %s", algebra.name, invertible)
    return EvenOddBasisView(exponents, matrix, invertible)


@functools.lru_cache(maxsize=None)
def osp12_graded(p: Union[int, PrimeField]) -> PBWAlgebra:
    """The graded instance of the root-vector part of u(osp(1|2)): a QCI in E, F."""
    field = as_field(p)
    return build_qci(
        [(2 * field.p, [-1]), (2 * field.p, [])],
        field,
        parities=(1, 1),
        weights=(1, -1),
        names=("E", "F"),
        name="osp12_graded",
    )
