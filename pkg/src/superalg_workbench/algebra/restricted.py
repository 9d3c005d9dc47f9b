"""Restricted Lie Superalgebra Axioms

Description:
    A restricted Lie superalgebra is given here by a finite basis with parities, the structure
    constants of the super bracket and the p-map on the even basis elements. The p-map of an
    arbitrary even element is extended from the basis through homogeneity and the Jacobson
    formula

        (x + y)^[p] = x^[p] + y^[p] + sum_i s_i(x, y),

    where i·s_i(x, y) is the coefficient of t^(i-1) in ad(t·x + y)^(p-1)(x).

    The data for sl2 and osp(1|2) is read off the restricted enveloping algebras: brackets are
    supercommutators and x^[p] is the straightened p-th power.

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

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.algebra.pbw import AlgebraElement, PBWAlgebra
from superalg_workbench.algebra.presets import PresetError, as_field, build_preset

logger = logging.getLogger(__name__)


class RestrictedDataError(Exception):
    """Raised if brackets or p-powers leave the span of the chosen Lie basis."""


@dataclass(frozen=True)
class RestrictedLieData:
    """Bracket table and p-map of a restricted Lie superalgebra.

    Args:
        names: basis symbols.
        parities: parity per basis element.
        brackets: array of shape (n, n, n), brackets[a, b] holds the coordinates of [b_a, b_b].
        p_map: coordinates of b^[p] for every even basis element b.
    """

    names: tuple[str, ...]
    parities: tuple[int, ...]
    brackets: np.ndarray
    p_map: dict[str, np.ndarray]

    @property
    def size(self) -> int:
        return len(self.names)

    def with_p_map(self, name: str, image: Sequence[int]) -> "RestrictedLieData":
        p_map = dict(self.p_map)
        p_map[name] = np.asarray(image, dtype=np.int64)
        return replace(self, p_map=p_map)


@dataclass
class RestrictedAxiomsReport:
    """Outcome of verify_restricted_axioms; `witness` names the first failing pair."""

    passed: bool
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    witness: Optional[tuple[str, ...]] = None


class _Bracket:
    def __init__(self, data: RestrictedLieData, field_: PrimeField):
        self.data = data
        self.field = field_

    def __call__(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        values = np.einsum("a,b,abk->k", left, right, self.data.brackets)
        return self.field.reduce(values)

    def ad_power(self, x: np.ndarray, y: np.ndarray, exponent: int) -> np.ndarray:
        for _ in range(exponent):
            y = self(x, y)
        return y

    def jacobson_terms(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Sum of s_i(x, y) for i = 1..p-1."""
        p = self.field.p
        # coefficient vectors of t^0..t^(p-1)
        poly = np.zeros((p, self.data.size), dtype=np.int64)
        poly[0] = x
        for _ in range(p - 1):
            shifted = np.zeros_like(poly)
            for degree in range(p):
                if not np.any(poly[degree]):
                    continue
                shifted[degree] = (shifted[degree] + self(y, poly[degree])) % p
                if degree + 1 < p:
                    shifted[degree + 1] = (shifted[degree + 1] + self(x, poly[degree])) % p
            poly = shifted
        total = np.zeros(self.data.size, dtype=np.int64)
        for i in range(1, p):
            total = (total + poly[i - 1] * self.field.inv(i)) % p
        return total


def extended_p_map(data: RestrictedLieData, field_: PrimeField, vector: np.ndarray) -> np.ndarray:
    """p-map of an even element, extended from the basis values."""
    bracket = _Bracket(data, field_)
    result = np.zeros(data.size, dtype=np.int64)
    partial = np.zeros(data.size, dtype=np.int64)
    for index, coeff in enumerate(field_.reduce(vector)):
        if not coeff:
            continue
        if data.parities[index]:
            raise RestrictedDataError(f"p-map requested on odd basis element {data.names[index]}")
        term = np.zeros(data.size, dtype=np.int64)
        term[index] = coeff
        image = (data.p_map[data.names[index]] * field_.power(coeff, field_.p)) % field_.p
        if np.any(partial):
            image = (image + bracket.jacobson_terms(partial, term)) % field_.p
        result = (result + image) % field_.p
        partial = (partial + term) % field_.p
    return result


def verify_restricted_axioms(
    data: RestrictedLieData,
    p: Union[int, PrimeField],
    rng: Optional[np.random.Generator] = None,
    samples: int = 20,
) -> RestrictedAxiomsReport:
    """Checks the restricted axioms; failures are reported, never raised.

    - (b) [x^[p], y] = (ad x)^p (y) on all pairs of basis elements with x even,
    - (a) (c·x)^[p] = c^p·x^[p] and (c) the Jacobson extension on sampled even elements, the
      extension being tested against (b).
    """
    field_ = as_field(p)
    rng = rng if rng is not None else np.random.default_rng(0)
    bracket = _Bracket(data, field_)
    report = RestrictedAxiomsReport(passed=True)
    even = [index for index, parity in enumerate(data.parities) if parity == 0]
    unit = np.eye(data.size, dtype=np.int64)

    def fail(axiom: str, witness: tuple[str, ...], message: str):
        report.passed = False
        report.failures.append(f"({axiom}) {message}")
        if report.witness is None:
            report.witness = witness

    report.checked["b"] = 0
    for x in even:
        x_power = data.p_map[data.names[x]]
        for y in range(data.size):
            report.checked["b"] += 1
            left = bracket(x_power, unit[y])
            right = bracket.ad_power(unit[x], unit[y], field_.p)
            if np.any((left - right) % field_.p):
                fail(
                    "b",
                    (data.names[x], data.names[y]),
                    f"[{data.names[x]}^[p], {data.names[y]}] != (ad {data.names[x]})^p"
                    f"({data.names[y]})",
                )

    report.checked["a"] = 0
    report.checked["c"] = 0
    for _ in range(samples):
        x = np.zeros(data.size, dtype=np.int64)
        x[even] = rng.integers(0, field_.p, size=len(even))
        scalar = int(rng.integers(1, field_.p))
        image = extended_p_map(data, field_, x)
        report.checked["a"] += 1
        scaled = extended_p_map(data, field_, (scalar * x) % field_.p)
        if np.any((scaled - field_.power(scalar, field_.p) * image) % field_.p):
            fail("a", ("sample",), f"homogeneity fails for {x.tolist()} and scalar {scalar}")
        for y in range(data.size):
            report.checked["c"] += 1
            left = bracket(image, unit[y])
            right = bracket.ad_power(x, unit[y], field_.p)
            if np.any((left - right) % field_.p):
                fail(
                    "c",
                    ("sample", data.names[y]),
                    f"extended p-map of {x.tolist()} violates [x^[p], {data.names[y]}]",
                )
    logger.debug("Restricted axioms checked: %s, passed: %s", report.checked, report.passed)
    return report


def _lie_data_from_algebra(
    algebra: PBWAlgebra, basis: dict[str, AlgebraElement], parities: dict[str, int]
) -> RestrictedLieData:
    names = tuple(basis)
    field_ = algebra.field
    vectors = np.stack([basis[name].to_vector() for name in names], axis=1)
    support = field_.independent_rows(vectors)
    square_inverse = field_.inverse(vectors[support])

    def coordinates(element: AlgebraElement) -> np.ndarray:
        vector = element.to_vector()
        coords = (square_inverse @ vector[support]) % field_.p
        if np.any((vectors @ coords - vector) % field_.p):
            raise RestrictedDataError(f"{element} is not in the span of {names}")
        return coords

    size = len(names)
    brackets = np.zeros((size, size, size), dtype=np.int64)
    for a, name_a in enumerate(names):
        for b, name_b in enumerate(names):
            sign = field_.sign(parities[name_a] * parities[name_b])
            element = basis[name_a] * basis[name_b] - (basis[name_b] * basis[name_a]).scale(sign)
            brackets[a, b] = coordinates(element)
    p_map = {
        name: coordinates(basis[name].power(field_.p)) for name in names if parities[name] == 0
    }
    return RestrictedLieData(names, tuple(parities[name] for name in names), brackets, p_map)


def sl2_restricted_data(p: Union[int, PrimeField]) -> RestrictedLieData:
    algebra = build_preset("sl2", p)
    basis = {name: algebra.generator(name) for name in ("e", "f", "h")}
    return _lie_data_from_algebra(algebra, basis, {"e": 0, "f": 0, "h": 0})


def osp12_restricted_data(p: Union[int, PrimeField]) -> RestrictedLieData:
    """osp(1|2) with even part spanned by e = E^2, f = -F^2 and h."""
    algebra = build_preset("osp12", p)
    E, F = algebra.generator("E"), algebra.generator("F")
    basis = {
        "e": E * E,
        "f": -(F * F),
        "h": algebra.generator("h"),
        "E": E,
        "F": F,
    }
    return _lie_data_from_algebra(algebra, basis, {"e": 0, "f": 0, "h": 0, "E": 1, "F": 1})


def restricted_data(name: str, p: Union[int, PrimeField]) -> RestrictedLieData:
    if name == "sl2":
        return sl2_restricted_data(p)
    if name == "osp12":
        return osp12_restricted_data(p)
    raise PresetError(f"No restricted data for '{name}'")
