"""Blocks

Description:
    Blocks as connected components of the Ext¹-linkage graph on the simple modules. In a minimal
    resolution of S_i the summand P_j occurs in P_1 exactly when Ext¹(S_i, S_j) ≠ 0.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx

from superalg_workbench.algebra.pbw import PBWAlgebra
from superalg_workbench.homalg.catalogue import Catalogue, catalogue_for
from superalg_workbench.homalg.resolution import minimal_resolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockPartition:
    """Blocks as tuples of simple labels, each sorted, the blocks sorted as well."""

    blocks: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def as_sets(self) -> set[frozenset[str]]:
        return {frozenset(block) for block in self.blocks}

    def block_of(self, label: str) -> tuple[str, ...]:
        return next(block for block in self.blocks if label in block)


def linkage_graph(catalogue: Catalogue) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(catalogue.labels)
    for index, simple in enumerate(catalogue.simples):
        resolution = minimal_resolution(simple, 1, catalogue)
        for linked in resolution.covers[1].summands:
            graph.add_edge(catalogue.labels[index], catalogue.labels[linked])
    return graph


def blocks(algebra: PBWAlgebra, order: Optional[Sequence[int]] = None) -> BlockPartition:
    """Block partition; `order` enumerates the simples in a different order."""
    catalogue = catalogue_for(algebra)
    if order is not None:
        catalogue = catalogue.permuted(order)
    graph = linkage_graph(catalogue)
    components = sorted(tuple(sorted(component)) for component in nx.connected_components(graph))
    logger.info("%s has %d blocks: %s", algebra.name, len(components), components)
    return BlockPartition(tuple(components))
