"""Catalogue Of Simples And Projectives

Description:
    For every algebra the workbench handles, the list of simple modules together with their
    projective covers, simples[i] being the head of projectives[i].

    - osp12 and sl2: the V^λ / V₀^λ families and their projective covers,
    - smash presets: every simple and projective of the base in both parities,
    - QCIs, smash QCIs and custom algebras: the one-dimensional characters, found by enumeration,
      with projectives split off the regular module.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from superalg_workbench.algebra.pbw import PBWAlgebra
from superalg_workbench.homalg.hom import hom_basis
from superalg_workbench.rep.families import (
    osp_projectives,
    osp_simples,
    sl2_projectives,
    sl2_simples,
)
from superalg_workbench.rep.module import (
    Module,
    check_relations,
    parity_change,
    regular_module,
    to_smash_module,
)

logger = logging.getLogger(__name__)


class CatalogueError(Exception):
    """Raised if the simples and projectives of an algebra cannot be determined."""


@dataclass(frozen=True)
class Catalogue:
    """Simple modules and their projective covers, index by index."""

    algebra: PBWAlgebra
    simples: tuple[Module, ...]
    projectives: tuple[Module, ...]
    labels: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.simples)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def heads(self, module: Module) -> list[int]:
        """Indices of the simples occurring in the head of the module."""
        return [
            index for index, simple in enumerate(self.simples) if hom_basis(module, simple).dim
        ]

    def permuted(self, order: Sequence[int]) -> "Catalogue":
        if sorted(order) != list(range(len(self))):
            raise CatalogueError(f"{list(order)} is not a permutation of the simples")
        return Catalogue(
            self.algebra,
            tuple(self.simples[i] for i in order),
            tuple(self.projectives[i] for i in order),
            tuple(self.labels[i] for i in order),
        )


_CATALOGUES: dict[tuple, Catalogue] = {}


def _preset_catalogue(algebra: PBWAlgebra) -> Catalogue:
    field = algebra.field
    if algebra.kind == "osp12":
        simples, projectives, symbol = osp_simples(field), osp_projectives(field), "V"
    else:
        simples, projectives, symbol = sl2_simples(field), sl2_projectives(field), "V0"
    labels = [f"{symbol}^{lam}" for lam in range(field.p)]
    if not algebra.is_smash:
        return Catalogue(algebra, tuple(simples), tuple(projectives), tuple(labels))

    smash_simples, smash_projectives, smash_labels = [], [], []
    for simple, projective, label in zip(simples, projectives, labels):
        smash_simples += [to_smash_module(simple), to_smash_module(parity_change(simple))]
        smash_projectives += [
            to_smash_module(projective),
            to_smash_module(parity_change(projective)),
        ]
        smash_labels += [label, f"Π{label}"]
    return Catalogue(
        algebra, tuple(smash_simples), tuple(smash_projectives), tuple(smash_labels)
    )


def characters(algebra: PBWAlgebra) -> list[Module]:
    """All one-dimensional modules, found by enumerating scalar actions."""
    field = algebra.field
    choices = []
    for gen in algebra.gens:
        if not gen.power_image and not gen.grouplike:
            choices.append((0,))
        else:
            choices.append(tuple(field.elements()))
    found = []
    for values in itertools.product(*choices):
        action = tuple(np.array([[value]], dtype=np.int64) for value in values)
        parity = (0,)
        for gen, value in zip(algebra.gens, values):
            if gen.grouplike and value == field.p - 1:
                parity = (1,)
        label = "χ[" + ",".join(
            f"{name}={value}" for name, value in zip(algebra.names, values) if value
        ) + "]"
        candidate = Module(algebra, action, parity, label)
        if check_relations(candidate).passed:
            found.append(candidate)
    logger.debug("%s has %d characters", algebra.name, len(found))
    return found


def _basic_catalogue(algebra: PBWAlgebra) -> Catalogue:
    from superalg_workbench.homalg.endring import decompose

    simples = characters(algebra)
    if not simples:
        raise CatalogueError(f"{algebra.name} has no one-dimensional modules")
    summands = decompose(regular_module(algebra))
    projectives = []
    for simple in simples:
        cover = next((q for q in summands if hom_basis(q, simple).dim), None)
        if cover is None:
            raise CatalogueError(f"No projective summand of {algebra.name} covers {simple.label}")
        projectives.append(cover.with_label(f"P({simple.label})"))
    if sum(projective.dim for projective in projectives) != algebra.dim:
        raise CatalogueError(
            f"The characters of {algebra.name} do not account for all of its simples"
        )
    labels = tuple(simple.label for simple in simples)
    return Catalogue(algebra, tuple(simples), tuple(projectives), labels)


def catalogue_for(algebra: PBWAlgebra) -> Catalogue:
    key = algebra.key()
    if key in _CATALOGUES:
        return _CATALOGUES[key]
    if algebra.strict:
        raise CatalogueError(f"No catalogue for the lift algebra {algebra.name}")
    if algebra.kind in ("sl2", "osp12"):
        catalogue = _preset_catalogue(algebra)
    else:
        catalogue = _basic_catalogue(algebra)
    logger.info("Catalogue of %s: %s", algebra.name, ", ".join(catalogue.labels))
    _CATALOGUES[key] = catalogue
    return catalogue
