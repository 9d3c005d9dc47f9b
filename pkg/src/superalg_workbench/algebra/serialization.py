"""Serialization

Description:
    Versioned JSON schemas for algebras, matrices and modules, built on pydantic models.

    - Matrix: {rows, cols, entries} with the entries in row-major order,
    - PBWAlgebra: {version, name, kind, p, gens: [...], rewrite: {"j,i": [[exponents, coeff]]}},
    - Module: {version, algebra_ref, dim, parity, action: {generator: Matrix}, label}.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Callable, Optional

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.algebra.pbw import GeneratorSpec, PBWAlgebra

if TYPE_CHECKING:
    from superalg_workbench.rep.module import Module

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class SerializationError(Exception):
    """Raised for documents that do not match the schema or the referenced algebra."""


class MatrixModel(BaseModel):
    rows: int
    cols: int
    entries: list[int]


class GeneratorModel(BaseModel):
    name: str
    parity: int = 0
    trunc: int = 2
    weight: int = 0
    grouplike: bool = False
    power_image: list[tuple[list[int], int]] = Field(default_factory=list)


class AlgebraModel(BaseModel):
    version: int = SCHEMA_VERSION
    name: str
    kind: str = "custom"
    p: int
    gens: list[GeneratorModel]
    rewrite: dict[str, list[tuple[list[int], int]]]


class ModuleModel(BaseModel):
    version: int = SCHEMA_VERSION
    algebra_ref: str
    dim: int
    parity: Optional[list[int]] = None
    action: dict[str, MatrixModel]
    label: str = ""


def matrix_to_model(matrix: np.ndarray) -> MatrixModel:
    rows, cols = matrix.shape
    return MatrixModel(rows=rows, cols=cols, entries=[int(v) for v in matrix.reshape(-1)])


def matrix_from_model(model: MatrixModel, field: PrimeField) -> np.ndarray:
    if len(model.entries) != model.rows * model.cols:
        raise SerializationError(
            f"Matrix with {model.rows}x{model.cols} entries expected, got {len(model.entries)}"
        )
    return field.reduce(np.array(model.entries, dtype=np.int64).reshape(model.rows, model.cols))


def algebra_to_model(algebra: PBWAlgebra) -> AlgebraModel:
    gens = [
        GeneratorModel(
            name=gen.name,
            parity=gen.parity,
            trunc=gen.truncation,
            weight=gen.weight,
            grouplike=gen.grouplike,
            power_image=[(list(mono), coeff) for mono, coeff in sorted(gen.power_image.items())],
        )
        for gen in algebra.gens
    ]
    rewrite = {
        f"{j},{i}": [(list(mono), coeff) for mono, coeff in sorted(terms.items())]
        for (j, i), terms in sorted(algebra.rewrite.items())
    }
    return AlgebraModel(
        name=algebra.name, kind=algebra.kind, p=algebra.p, gens=gens, rewrite=rewrite
    )


def algebra_from_model(model: AlgebraModel) -> PBWAlgebra:
    if model.version != SCHEMA_VERSION:
        raise SerializationError(f"Unsupported algebra schema version {model.version}")
    gens = [
        GeneratorSpec(
            gen.name,
            gen.parity,
            gen.trunc,
            {tuple(mono): coeff for mono, coeff in gen.power_image},
            gen.weight,
            gen.grouplike,
        )
        for gen in model.gens
    ]
    rewrite = {}
    for key, terms in model.rewrite.items():
        j, i = (int(part) for part in key.split(","))
        rewrite[(j, i)] = {tuple(mono): coeff for mono, coeff in terms}
    return PBWAlgebra(PrimeField(model.p), gens, rewrite, name=model.name, kind=model.kind)


def dump_algebra(algebra: PBWAlgebra) -> str:
    return algebra_to_model(algebra).model_dump_json()


def load_algebra(document: str) -> PBWAlgebra:
    try:
        return algebra_from_model(AlgebraModel.model_validate_json(document))
    except ValidationError as error:
        raise SerializationError(f"Invalid algebra document: {error}") from error


def module_to_model(module: "Module") -> ModuleModel:
    return ModuleModel(
        algebra_ref=module.algebra.name,
        dim=module.dim,
        parity=list(module.parity) if module.parity is not None else None,
        action={
            name: matrix_to_model(matrix)
            for name, matrix in zip(module.algebra.names, module.action)
        },
        label=module.label,
    )


def module_from_model(model: ModuleModel, resolve: Callable[[str], PBWAlgebra]) -> "Module":
    """Rebuilds a module; `resolve` maps the algebra reference to the algebra instance."""
    from superalg_workbench.rep.module import Module

    if model.version != SCHEMA_VERSION:
        raise SerializationError(f"Unsupported module schema version {model.version}")
    algebra = resolve(model.algebra_ref)
    if set(model.action) != set(algebra.names):
        raise SerializationError(
            f"Module acts by {sorted(model.action)}, algebra {algebra.name} has {algebra.names}"
        )
    action = tuple(matrix_from_model(model.action[name], algebra.field) for name in algebra.names)
    if any(matrix.shape != (model.dim, model.dim) for matrix in action):
        raise SerializationError(f"Action matrices must be {model.dim}x{model.dim}")
    parity = tuple(model.parity) if model.parity is not None else None
    return Module(algebra, action, parity, model.label)


def dump_module(module: "Module") -> str:
    return module_to_model(module).model_dump_json()


def load_module(document: str, resolve: Callable[[str], PBWAlgebra]) -> "Module":
    try:
        model = ModuleModel.model_validate_json(document)
    except ValidationError as error:
        raise SerializationError(f"Invalid module document: {error}") from error
    return module_from_model(model, resolve)
