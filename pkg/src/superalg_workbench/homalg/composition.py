"""Composition Factors

Description:
    Jordan-Hölder multiplicities by radical peeling. The head of M is read off the maps into
    the simples, dim Hom(M, S) being the multiplicity of S in the head since every End(S) is κ.
    The radical is the common kernel of all those maps.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from collections import Counter
from typing import Optional

import numpy as np

from superalg_workbench.homalg.catalogue import Catalogue, CatalogueError, catalogue_for
from superalg_workbench.homalg.hom import hom_basis
from superalg_workbench.rep.module import Module, submodule

logger = logging.getLogger(__name__)


def head_maps(module: Module, catalogue: Catalogue) -> tuple[Counter, np.ndarray]:
    """Head multiplicities and the stacked maps M → ⊕ S (one row per map coordinate)."""
    counts: Counter = Counter()
    rows = [np.zeros((0, module.dim), dtype=np.int64)]
    for index, simple in enumerate(catalogue.simples):
        hom = hom_basis(module, simple)
        if hom.dim:
            counts[index] = hom.dim
            rows.append(hom.basis.reshape(-1, module.dim))
    return counts, np.vstack(rows)


def loewy_layers(module: Module, catalogue: Optional[Catalogue] = None) -> list[Counter]:
    """Head of M, head of rad M, head of rad² M, ..."""
    catalogue = catalogue if catalogue is not None else catalogue_for(module.algebra)
    layers = []
    current = module
    while current.dim:
        counts, stacked = head_maps(current, catalogue)
        if not counts:
            raise CatalogueError(f"{current.label} has no simple quotient in the catalogue")
        layers.append(counts)
        current = submodule(current, current.field.nullspace(stacked), f"rad {current.label}")
    return layers


def composition_factors(module: Module, catalogue: Optional[Catalogue] = None) -> Counter:
    """Multiset of simple indices, as a Counter."""
    total: Counter = Counter()
    for layer in loewy_layers(module, catalogue):
        total.update(layer)
    logger.debug("Composition factors of %s: %s", module.label, dict(total))
    return total


def factor_labels(factors: Counter, catalogue: Catalogue) -> dict[str, int]:
    return {catalogue.labels[index]: count for index, count in sorted(factors.items())}
