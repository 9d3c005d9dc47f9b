"""Non-split Extensions

Description:
    Certifies that 0 → A → M → B → 0 is a non-split extension: an injective ι: A → M with
    cokernel isomorphic to B is searched in Hom(A, M), and the absence of a retraction is shown
    by the inconsistency of Σ_b c_b·(r_b∘ι) = 1_A over a basis r_b of Hom(M, A).

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

from superalg_workbench.homalg.hom import hom_basis
from superalg_workbench.homalg.isomorphism import is_isomorphic
from superalg_workbench.rep.module import Module, quotient

logger = logging.getLogger(__name__)

EMBEDDING_SEED = 3
EMBEDDING_TRIALS = 64


class ExtensionError(Exception):
    """Raised if the dimensions of the three terms do not add up."""


class ExtensionStatus(str, enum.Enum):
    NONSPLIT = "nonsplit"
    SPLIT = "split"
    NO_EMBEDDING = "no-embedding"


@dataclass
class ExtensionCertificate:
    """`certificate` is a functional killing every r∘ι but not 1_A (non-split case)."""

    status: ExtensionStatus
    embedding: Optional[np.ndarray] = None
    retraction: Optional[np.ndarray] = None
    certificate: Optional[np.ndarray] = None
    detail: str = ""


def find_embedding(
    sub: Module, top: Module, middle: Module, rng: Optional[np.random.Generator] = None
) -> Optional[np.ndarray]:
    """Injective ι: sub → middle whose cokernel is isomorphic to top."""
    field_ = sub.field
    hom = hom_basis(sub, middle)
    if hom.dim == 0:
        return None
    rng = rng if rng is not None else np.random.default_rng(EMBEDDING_SEED)
    candidates = itertools.chain(
        hom.basis, (hom.random_element(rng) for _ in range(EMBEDDING_TRIALS))
    )
    for candidate in candidates:
        if field_.rank(candidate) != sub.dim:
            continue
        if is_isomorphic(quotient(middle, candidate), top).is_yes:
            return candidate
    return None


def nonsplit_extension_check(sub: Module, top: Module, middle: Module) -> ExtensionCertificate:
    if middle.dim != sub.dim + top.dim:
        raise ExtensionError(
            f"dim {middle.label} = {middle.dim} is not {sub.dim} + {top.dim}"
        )
    field_ = sub.field
    embedding = find_embedding(sub, top, middle)
    if embedding is None:
        return ExtensionCertificate(
            ExtensionStatus.NO_EMBEDDING,
            detail=f"no injection {sub.label} → {middle.label} with cokernel {top.label}",
        )
    retractions = hom_basis(middle, sub)
    identity = field_.identity(sub.dim).reshape(-1, 1)
    if retractions.dim == 0:
        return ExtensionCertificate(
            ExtensionStatus.NONSPLIT, embedding, detail=f"Hom({middle.label}, {sub.label}) = 0"
        )
    composites = np.stack(
        [field_.matmul(r, embedding).reshape(-1) for r in retractions.basis], axis=1
    )
    result = field_.solve(composites, identity)
    if result.consistent:
        retraction = retractions.combination(result.particular[:, 0])
        return ExtensionCertificate(ExtensionStatus.SPLIT, embedding, retraction=retraction)
    logger.debug("No retraction of %s → %s", sub.label, middle.label)
    return ExtensionCertificate(
        ExtensionStatus.NONSPLIT,
        embedding,
        certificate=result.certificate,
        detail="r∘ι = 1 has no solution",
    )
