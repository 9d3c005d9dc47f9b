"""Associated Graded Algebras

Description:
    Given a degree per generator, the filtration by total degree is multiplicative if every
    rewrite rule gen_j·gen_i and every power image gen^N only produces terms of degree at most
    the degree of the left-hand side. The associated graded algebra keeps the top-degree part of
    each rule.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from typing import Mapping, Union

from superalg_workbench.algebra.pbw import GeneratorSpec, Monomial, PBWAlgebra

logger = logging.getLogger(__name__)


class FilteredAlgebraError(Exception):
    """Raised when the degree assignment does not define a filtration of the algebra."""


def _top_part(
    algebra: PBWAlgebra, terms: Mapping[Monomial, int], degree: int, weights: list[int], rule: str
) -> dict[Monomial, int]:
    kept: dict[Monomial, int] = {}
    for monomial, coeff in terms.items():
        term_degree = algebra.degree(monomial, weights)
        if term_degree > degree:
            raise FilteredAlgebraError(
                f"Rule {rule} of {algebra.name} produces {algebra.format_monomial(monomial)} "
                f"of degree {term_degree} > {degree}"
            )
        if term_degree == degree:
            kept[monomial] = coeff
    return kept


def associated_graded(algebra: PBWAlgebra, deg: Mapping[Union[str, int], int]) -> PBWAlgebra:
    """Presentation of the associated graded algebra for the filtration given by `deg`.

    Args:
        algebra: the filtered algebra.
        deg: non-negative degree per generator, keyed by name or index.

    Raises:
        FilteredAlgebraError: on missing or negative degrees, or if some rule is not filtered.
    """
    weights = [0] * algebra.rank
    for key, value in deg.items():
        weights[algebra.index_of(key)] = int(value)
    missing = [
        name for index, name in enumerate(algebra.names) if name not in deg and index not in deg
    ]
    if missing:
        raise FilteredAlgebraError(f"No degree given for the generators {missing}")
    if any(weight < 0 for weight in weights):
        raise FilteredAlgebraError(f"Degrees must be non-negative, got {weights}")

    rewrite = {}
    for (j, i), terms in algebra.rewrite.items():
        rule = f"{algebra.names[j]}·{algebra.names[i]}"
        rewrite[(j, i)] = _top_part(algebra, terms, weights[i] + weights[j], weights, rule)

    gens = []
    for index, gen in enumerate(algebra.gens):
        rule = f"{gen.name}^{gen.truncation}"
        image = _top_part(
            algebra, gen.power_image, gen.truncation * weights[index], weights, rule
        )
        gens.append(
            GeneratorSpec(gen.name, gen.parity, gen.truncation, image, gen.weight, gen.grouplike)
        )

    graded = PBWAlgebra(
        algebra.field,
        gens,
        rewrite,
        name=f"gr_{algebra.name}",
        kind=algebra.kind if not any(weights) else "graded",
        base=algebra.base,
        strict=algebra.strict,
    )
    for attribute in ("qci_spec", "q_matrix"):
        if hasattr(algebra, attribute):
            setattr(graded, attribute, getattr(algebra, attribute))
    logger.debug("Associated graded of %s for degrees %s", algebra.name, weights)
    return graded
