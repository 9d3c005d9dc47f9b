"""PBW Straightening Engine

Description:
    Realizes a finite-dimensional algebra through an ordered list of generators, truncation
    exponents and rewrite rules. The basis consists of the normal-form monomials
    x_1^{a_1}···x_k^{a_k} with 0 <= a_i < N_i. Every product is brought into normal form by
    left-multiplying generators onto normal monomials:
    - a generator smaller than the leading generator of the monomial is simply prepended,
    - the leading generator raises its exponent; on reaching N_i, x_i^{N_i} is replaced by
      its power image,
    - a larger generator is commuted past the leading generator through the rewrite rule
      x_j·x_i (j > i).
    Results of generator-monomial products are memoized per algebra.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from superalg_workbench.algebra.field import PrimeField

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Terms = dict[Monomial, int]


class PBWAlgebraError(Exception):
    """Raised for malformed presentations or invalid words."""


class TruncationOverflowError(PBWAlgebraError):
    """Raised by strict algebras when a product leaves the truncated range."""


@dataclass(frozen=True)
class GeneratorSpec:
    """A single PBW generator.

    Args:
        name: symbol of the generator.
        parity: 0 for even, 1 for odd generators.
        truncation: exponent N >= 2; x^N is replaced by the power image.
        power_image: normal-form terms of x^N (empty for x^N = 0).
        weight: eigenvalue of the adjoint Cartan action (the weight alpha of the generator).
        grouplike: True for the parity involution g of smash products.
    """

    name: str
    parity: int = 0
    truncation: int = 2
    power_image: Mapping[Monomial, int] = field(default_factory=dict)
    weight: int = 0
    grouplike: bool = False


class PBWAlgebra:
    """Finite-dimensional algebra presented by PBW generators and rewrite rules.

    Args:
        field: the prime field.
        gens: ordered generators.
        rewrite: for each pair j > i the normal-form expansion of gen_j·gen_i. Missing pairs
            commute.
        name: identifier, also used as algebra reference in serialized modules.
        kind: family of the algebra ('sl2', 'osp12', 'qci' or 'custom').
        base: for smash products, the algebra the group-like element was adjoined to.
        strict: raise TruncationOverflowError instead of applying power images.
    """

    def __init__(
        self,
        field: PrimeField,
        gens: Sequence[GeneratorSpec],
        rewrite: Mapping[tuple[int, int], Mapping[Monomial, int]],
        name: str = "algebra",
        kind: str = "custom",
        base: Optional["PBWAlgebra"] = None,
        strict: bool = False,
    ):
        self.field = field
        self.gens = tuple(gens)
        self.name = name
        self.kind = kind
        self.base = base
        self.strict = strict
        self.shape = tuple(gen.truncation for gen in self.gens)
        if any(truncation < 2 for truncation in self.shape):
            raise PBWAlgebraError(f"Truncations must be >= 2, got {self.shape}")
        self.rank = len(self.gens)
        self.rewrite = self._complete_rules(rewrite)
        self.dim = int(np.prod(self.shape)) if self.gens else 1
        self._generator_cache: dict[tuple[int, Monomial], Terms] = {}
        self._product_cache: dict[tuple[Monomial, Monomial], Terms] = {}
        logger.debug("Built PBW algebra %s with shape %s (dim %d)", name, self.shape, self.dim)

    def _complete_rules(
        self, rewrite: Mapping[tuple[int, int], Mapping[Monomial, int]]
    ) -> dict[tuple[int, int], Terms]:
        rules: dict[tuple[int, int], Terms] = {}
        for j in range(self.rank):
            for i in range(j):
                if (j, i) in rewrite:
                    rules[(j, i)] = self._clean(rewrite[(j, i)])
                else:
                    rules[(j, i)] = {self.unit_vector(i, j): 1}
        unknown = set(rewrite) - set(rules)
        if unknown:
            raise PBWAlgebraError(f"Rewrite rules must be keyed by (j, i) with j > i: {unknown}")
        return rules

    def _clean(self, terms: Mapping[Monomial, int]) -> Terms:
        cleaned: Terms = {}
        for monomial, coeff in terms.items():
            monomial = tuple(int(exp) for exp in monomial)
            if len(monomial) != self.rank or any(
                exp < 0 or exp >= bound for exp, bound in zip(monomial, self.shape)
            ):
                raise PBWAlgebraError(f"Monomial {monomial} is not in normal form for {self.name}")
            value = (cleaned.get(monomial, 0) + int(coeff)) % self.field.p
            if value:
                cleaned[monomial] = value
            else:
                cleaned.pop(monomial, None)
        return cleaned

    # ---- basis -------------------------------------------------------------------------------

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(gen.name for gen in self.gens)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(gen.parity for gen in self.gens)

    @property
    def is_smash(self) -> bool:
        return any(gen.grouplike for gen in self.gens)

    def key(self) -> tuple:
        """Structural identity of the presentation."""
        return (
            self.name,
            self.p,
            self.shape,
            self.parities,
            tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.rewrite.items())),
        )

    def same_as(self, other: "PBWAlgebra") -> bool:
        return self is other or self.key() == other.key()

    def index_of(self, name: Union[str, int]) -> int:
        if isinstance(name, (int, np.integer)):
            if not 0 <= int(name) < self.rank:
                raise PBWAlgebraError(f"Generator index {name} out of range for {self.name}")
            return int(name)
        try:
            return self.names.index(name)
        except ValueError as error:
            raise PBWAlgebraError(
                f"Unknown generator '{name}' for {self.name}, available: {self.names}"
            ) from error

    def unit_vector(self, *indices: int) -> Monomial:
        exps = [0] * self.rank
        for index in indices:
            exps[index] += 1
        return tuple(exps)

    def zero_monomial(self) -> Monomial:
        return (0,) * self.rank

    def basis(self) -> Iterable[Monomial]:
        return itertools.product(*(range(bound) for bound in self.shape))

    def monomial_index(self, monomial: Monomial) -> int:
        return int(np.ravel_multi_index(monomial, self.shape)) if self.rank else 0

    def monomial_at(self, index: int) -> Monomial:
        return tuple(int(exp) for exp in np.unravel_index(index, self.shape)) if self.rank else ()

    def degree(self, monomial: Monomial, weights: Optional[Sequence[int]] = None) -> int:
        weights = weights if weights is not None else [1] * self.rank
        return sum(exp * weight for exp, weight in zip(monomial, weights))

    def monomial_parity(self, monomial: Monomial) -> int:
        return sum(exp * gen.parity for exp, gen in zip(monomial, self.gens)) % 2

    def monomial_weight(self, monomial: Monomial) -> int:
        return sum(exp * gen.weight for exp, gen in zip(monomial, self.gens)) % self.p

    def format_monomial(self, monomial: Monomial) -> str:
        factors = []
        for exp, gen in zip(monomial, self.gens):
            if exp == 1:
                factors.append(gen.name)
            elif exp > 1:
                factors.append(f"{gen.name}^{exp}")
        return "·".join(factors) if factors else "1"

    # ---- elements ----------------------------------------------------------------------------

    def element(self, terms: Optional[Mapping[Monomial, int]] = None) -> "AlgebraElement":
        return AlgebraElement(self, self._clean(terms or {}))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {self.zero_monomial(): 1})

    def monomial(self, monomial: Monomial) -> "AlgebraElement":
        return self.element({tuple(monomial): 1})

    def generator(self, name: Union[str, int]) -> "AlgebraElement":
        return self.word([name])

    def word(self, word: Sequence[Union[str, int]]) -> "AlgebraElement":
        return self.straighten(word)

    def from_vector(self, vector: np.ndarray) -> "AlgebraElement":
        return self.element(
            {self.monomial_at(int(index)): int(vector[index]) for index in np.nonzero(vector)[0]}
        )

    def random_element(self, rng: np.random.Generator, terms: int = 4) -> "AlgebraElement":
        indices = rng.integers(0, self.dim, size=terms)
        coeffs = rng.integers(1, self.p, size=terms)
        result: Terms = {}
        for index, coeff in zip(indices, coeffs):
            monomial = self.monomial_at(int(index))
            result[monomial] = (result.get(monomial, 0) + int(coeff)) % self.p
        return self.element(result)

    # ---- straightening -----------------------------------------------------------------------

    def straighten(self, word: Sequence[Union[str, int]]) -> "AlgebraElement":
        """Normal form of the product of the generators in `word`, read left to right."""
        current: Terms = {self.zero_monomial(): 1}
        for letter in reversed(list(word)):
            index = self.index_of(letter)
            current = self._left_multiply_terms(index, current)
        return AlgebraElement(self, current)

    def _left_multiply_terms(self, index: int, terms: Terms) -> Terms:
        result: Terms = {}
        for monomial, coeff in terms.items():
            for out, value in self.left_multiply_generator(index, monomial).items():
                result[out] = (result.get(out, 0) + coeff * value) % self.p
        return {monomial: coeff for monomial, coeff in result.items() if coeff}

    def left_multiply_generator(self, index: int, monomial: Monomial) -> Terms:
        """Normal form of gen_index · monomial."""
        key = (index, monomial)
        cached = self._generator_cache.get(key)
        if cached is not None:
            return cached

        leading = next((pos for pos, exp in enumerate(monomial) if exp > 0), None)
        if leading is None or index < leading:
            exps = list(monomial)
            exps[index] = 1
            result: Terms = {tuple(exps): 1}
        elif index == leading:
            exps = list(monomial)
            exps[index] += 1
            if exps[index] < self.shape[index]:
                result = {tuple(exps): 1}
            else:
                if self.strict:
                    raise TruncationOverflowError(
                        f"{self.gens[index].name}^{exps[index]} leaves the truncated range of "
                        f"{self.name}"
                    )
                exps[index] = 0
                result = self._multiply_terms(self.gens[index].power_image, tuple(exps))
        else:
            exps = list(monomial)
            exps[leading] -= 1
            result = self._multiply_terms(self.rewrite[(index, leading)], tuple(exps))

        self._generator_cache[key] = result
        return result

    def _multiply_terms(self, left: Mapping[Monomial, int], right: Monomial) -> Terms:
        result: Terms = {}
        for monomial, coeff in left.items():
            for out, value in self.multiply_monomials(monomial, right).items():
                result[out] = (result.get(out, 0) + coeff * value) % self.p
        return {monomial: coeff for monomial, coeff in result.items() if coeff}

    def multiply_monomials(self, left: Monomial, right: Monomial) -> Terms:
        """Normal form of the product of two normal-form monomials."""
        key = (left, right)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        current: Terms = {right: 1}
        for index in reversed(range(self.rank)):
            for _ in range(left[index]):
                current = self._left_multiply_terms(index, current)
        self._product_cache[key] = current
        return current

    def multiply(self, left: "AlgebraElement", right: "AlgebraElement") -> "AlgebraElement":
        result: Terms = {}
        for mono_left, coeff_left in left.terms.items():
            for mono_right, coeff_right in right.terms.items():
                for out, value in self.multiply_monomials(mono_left, mono_right).items():
                    result[out] = (result.get(out, 0) + coeff_left * coeff_right * value) % self.p
        return AlgebraElement(self, {mono: coeff for mono, coeff in result.items() if coeff})

    def left_multiplication_matrix(self, index: int) -> np.ndarray:
        """Matrix of left multiplication by a generator on the monomial basis."""
        matrix = self.field.zeros(self.dim, self.dim)
        for col, monomial in enumerate(self.basis()):
            for out, coeff in self.left_multiply_generator(index, monomial).items():
                matrix[self.monomial_index(out), col] = coeff
        return matrix

    def __repr__(self) -> str:
        return f"PBWAlgebra({self.name}, p={self.p}, gens={self.names}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """A linear combination of normal-form monomials; zero coefficients are never stored."""

    algebra: PBWAlgebra
    terms: Mapping[Monomial, int]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        result = dict(self.terms)
        for monomial, coeff in other.terms.items():
            result[monomial] = result.get(monomial, 0) + coeff
        return self.algebra.element(result)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: Union["AlgebraElement", int]) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.scale(int(other))

    def __rmul__(self, other: int) -> "AlgebraElement":
        return self.scale(int(other))

    def scale(self, scalar: int) -> "AlgebraElement":
        return self.algebra.element({mono: coeff * scalar for mono, coeff in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.same_as(other.algebra) and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> int:
        return self.terms.get(tuple(monomial), 0)

    def power(self, exponent: int) -> "AlgebraElement":
        result = self.algebra.one()
        for _ in range(exponent):
            result = result * self
        return result

    def to_vector(self) -> np.ndarray:
        vector = np.zeros(self.algebra.dim, dtype=np.int64)
        for monomial, coeff in self.terms.items():
            vector[self.algebra.monomial_index(monomial)] = coeff
        return vector

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [
            f"{coeff}·{self.algebra.format_monomial(monomial)}"
            for monomial, coeff in sorted(self.terms.items())
        ]
        return " + ".join(parts)


def straighten(word: Sequence[Union[str, int]], algebra: PBWAlgebra) -> AlgebraElement:
    """Normal form of a word of generators in the given algebra."""
    return algebra.straighten(word)
