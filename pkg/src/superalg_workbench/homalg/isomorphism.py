"""Isomorphism Testing

Description:
    Decides M ≅ N by a fixed, seeded escalation ladder:

    1. different dimensions or Hom(M, N) = 0 give "no",
    2. 64 random combinations of a Hom basis are tested for invertibility,
    3. for dim Hom(M, N) ≤ 3 all combinations are swept,
    4. for local End(M) the composites g∘f of basis elements decide exactly, since the
       non-units of a local ring form an ideal,
    5. composition factors and the dimensions of Hom(M, N), End(M), Hom(N, M), End(N) are
       compared as a structural obstruction,
    6. otherwise the result is "indeterminate".

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from superalg_workbench.homalg.hom import end_basis, hom_basis
from superalg_workbench.rep.module import Module, to_smash_module

logger = logging.getLogger(__name__)

ISOMORPHISM_SEED = 11
RANDOM_TRIALS = 64
EXHAUSTIVE_LIMIT = 3


class IsoStatus(str, enum.Enum):
    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


@dataclass
class IsoResult:
    """Outcome of is_isomorphic; `witness` is an invertible module map M → N for "yes"."""

    status: IsoStatus
    witness: Optional[np.ndarray] = None
    obstruction: str = ""

    @property
    def is_yes(self) -> bool:
        return self.status is IsoStatus.YES

    @property
    def is_no(self) -> bool:
        return self.status is IsoStatus.NO


def _structural_obstruction(source: Module, target: Module, hom_dim: int) -> Optional[str]:
    from superalg_workbench.homalg.catalogue import CatalogueError, catalogue_for
    from superalg_workbench.homalg.composition import composition_factors

    end_source = end_basis(source).dim
    end_target = end_basis(target).dim
    back = hom_basis(target, source).dim
    if hom_dim != end_source:
        return f"dim Hom(M, N) = {hom_dim} but dim End(M) = {end_source}"
    if back != end_target:
        return f"dim Hom(N, M) = {back} but dim End(N) = {end_target}"
    if end_source != end_target:
        return f"dim End(M) = {end_source} but dim End(N) = {end_target}"
    try:
        catalogue = catalogue_for(source.algebra)
    except CatalogueError:
        logger.debug("No catalogue for %s, skipping composition factors", source.algebra.name)
        return None
    factors_source = composition_factors(source, catalogue)
    factors_target = composition_factors(target, catalogue)
    if factors_source != factors_target:
        return f"composition factors differ: {dict(factors_source)} vs {dict(factors_target)}"
    return None


def is_isomorphic(
    source: Module, target: Module, rng: Optional[np.random.Generator] = None
) -> IsoResult:
    """Isomorphism test as modules over the common algebra."""
    if source.dim != target.dim:
        return IsoResult(IsoStatus.NO, obstruction=f"dim {source.dim} != dim {target.dim}")
    field_ = source.field
    if source.dim == 0:
        return IsoResult(IsoStatus.YES, field_.zeros(0, 0))
    hom = hom_basis(source, target)
    if hom.dim == 0:
        return IsoResult(IsoStatus.NO, obstruction="Hom(M, N) = 0")

    rng = rng if rng is not None else np.random.default_rng(ISOMORPHISM_SEED)
    for candidate in itertools.chain(
        hom.basis, (hom.random_element(rng) for _ in range(RANDOM_TRIALS))
    ):
        if field_.is_invertible(candidate):
            return IsoResult(IsoStatus.YES, candidate)

    if hom.dim <= EXHAUSTIVE_LIMIT:
        for coeffs in itertools.product(field_.elements(), repeat=hom.dim):
            candidate = hom.combination(coeffs)
            if any(coeffs) and field_.is_invertible(candidate):
                return IsoResult(IsoStatus.YES, candidate)
        return IsoResult(
            IsoStatus.NO, obstruction=f"no invertible element among all {field_.p}^{hom.dim} maps"
        )

    from superalg_workbench.homalg.endring import is_local_end

    back = hom_basis(target, source)
    if is_local_end(end_basis(source)):
        for forward, backward in itertools.product(hom.basis, back.basis):
            if field_.is_invertible(field_.matmul(backward, forward)):
                return IsoResult(IsoStatus.YES, forward)
        return IsoResult(
            IsoStatus.NO, obstruction="every composite M → N → M lies in rad End(M)"
        )

    obstruction = _structural_obstruction(source, target, hom.dim)
    if obstruction is not None:
        return IsoResult(IsoStatus.NO, obstruction=obstruction)
    logger.info("Isomorphism of %s and %s left undecided", source.label, target.label)
    return IsoResult(IsoStatus.INDETERMINATE, obstruction="search exhausted without certificate")


def is_super_isomorphic(source: Module, target: Module) -> IsoResult:
    """Isomorphism of supermodules, i.e. through even maps, decided over the smash algebra."""
    if not source.algebra.is_smash:
        source, target = to_smash_module(source), to_smash_module(target)
    return is_isomorphic(source, target)
