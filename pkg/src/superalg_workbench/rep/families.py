"""Module Families

Description:
    Constructors for the indecomposable modules over u(osp(1|2)) and the comparison modules
    over u(sl2). Every family is assembled from labelled basis vectors; the action formulas are
    written per chain of basis vectors, gluing terms between chains are either explicit or
    expressed through index aliases (e.g. b_{2μ+1} = y_{2λ'}). Indices outside a chain resolve
    to 0 unless aliased.

    Families (tag: module, dimension):
    - V0: simple sl2-module V₀^λ, λ+1
    - P0: projective sl2-module P₀^λ (λ <= p-2), 2p
    - V, W, Wt: simple osp-module V^λ and the Verma modules W^λ, W̃^λ, 2λ+1 and 2p
    - P: projective cover P^λ of V^λ, 4p
    - Vn, Vtn: string modules V^λ(n), Ṽ^λ(n), (2λ+1)(n+1) + (2p-2λ-1)n
    - Wn, Wtn: string modules W^λ(n), W̃^λ(n), 2pn
    - T, Tt: band modules T^λ(s, n), T̃^λ(s, n), 4pn

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Union

import numpy as np

from superalg_workbench.algebra.field import PrimeField
from superalg_workbench.algebra.pbw import PBWAlgebra
from superalg_workbench.algebra.presets import as_field, build_preset
from superalg_workbench.rep.module import Module, ModuleError, check_relations, parity_change

logger = logging.getLogger(__name__)

OSP_FAMILIES = ("V", "W", "Wt", "P", "Vn", "Vtn", "Wn", "Wtn", "T", "Tt")
SL2_FAMILIES = ("V0", "P0")
FAMILIES = OSP_FAMILIES + SL2_FAMILIES

Label = Hashable


class FamilyParameterError(Exception):
    """Raised for parameters outside the range of a family."""


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of a module family.

    Args:
        family: tag, one of FAMILIES.
        lam: the weight λ.
        n: length of string and band modules.
        s: the pair (s₁, s₂) of non-zero scalars for the band modules.
    """

    family: str
    lam: int
    n: int = 0
    s: tuple[int, int] = (1, 1)

    def validate(self, p: int):
        if self.family not in FAMILIES:
            raise FamilyParameterError(f"Unknown family '{self.family}', available: {FAMILIES}")
        top = p - 2 if self.family == "P0" else p - 1
        if not 0 <= self.lam <= top:
            raise FamilyParameterError(f"λ={self.lam} outside 0..{top} for family {self.family}")
        if self.family in ("Vn", "Vtn") and self.n < 0:
            raise FamilyParameterError(f"n must be >= 0 for {self.family}, got {self.n}")
        if self.family in ("Wn", "Wtn", "T", "Tt") and self.n < 1:
            raise FamilyParameterError(f"n must be >= 1 for {self.family}, got {self.n}")
        if self.family in ("T", "Tt") and any(int(value) % p == 0 for value in self.s):
            raise FamilyParameterError(f"s must have non-zero entries mod {p}, got {self.s}")

    @property
    def label(self) -> str:
        names = {
            "V": "V^{lam}",
            "W": "W^{lam}",
            "Wt": "W̃^{lam}",
            "P": "P^{lam}",
            "Vn": "V^{lam}({n})",
            "Vtn": "Ṽ^{lam}({n})",
            "Wn": "W^{lam}({n})",
            "Wtn": "W̃^{lam}({n})",
            "T": "T^{lam}({s},{n})",
            "Tt": "T̃^{lam}({s},{n})",
            "V0": "V₀^{lam}",
            "P0": "P₀^{lam}",
        }
        return names[self.family].format(lam=self.lam, n=self.n, s=f"{self.s[0]},{self.s[1]}")


class _ActionBuilder:
    """Collects action coefficients on labelled basis vectors."""

    def __init__(self, algebra: PBWAlgebra, labels: list[Label], parity: Optional[list[int]]):
        self.algebra = algebra
        self.field: PrimeField = algebra.field
        self.labels = labels
        self.index = {label: position for position, label in enumerate(labels)}
        if len(self.index) != len(labels):
            raise ModuleError("Duplicate basis labels")
        self.parity = parity
        self.aliases: dict[Label, tuple[Label, int]] = {}
        size = len(labels)
        self.matrices = {name: self.field.zeros(size, size) for name in algebra.names}

    def alias(self, label: Label, target: Label, coeff: int = 1):
        self.aliases[label] = (target, coeff)

    def add(self, gen: str, source: Label, target: Label, coeff: int):
        """ρ(gen)·source += coeff·target."""
        if target not in self.index:
            if target not in self.aliases:
                return
            target, factor = self.aliases[target]
            if target not in self.index:
                return
            coeff *= factor
        coeff = self.field.scalar(coeff)
        if coeff:
            matrix = self.matrices[gen]
            row, col = self.index[target], self.index[source]
            matrix[row, col] = (matrix[row, col] + coeff) % self.field.p

    def weight(self, gen: str, label: Label, value: int):
        self.add(gen, label, label, value)

    def build(self, label: str) -> Module:
        action = tuple(self.matrices[name] for name in self.algebra.names)
        parity = tuple(self.parity) if self.parity is not None else None
        return Module(self.algebra, action, parity, label)


def _v_coeff(field: PrimeField, lam: int, i: int) -> int:
    """E·v_i = c_i·v_{i-1} in V^λ and W^λ."""
    if i % 2 == 0:
        return field.half(-i)
    return field.scalar(lam - (i - 1) * field.half())


def _wt_coeff(field: PrimeField, lam: int, i: int) -> int:
    """F·v_i = d_i·v_{i-1} in W̃^λ."""
    if i % 2 == 0:
        return field.half(i)
    return field.scalar((i - 1) * field.half() - lam)


def _v_chain(builder: _ActionBuilder, symbol: str, lam: int, top: int, copy: int = 0):
    """h v_i = (λ-i)v_i, F v_i = v_{i+1}, E v_i = c_i v_{i-1} for i = 0..top."""
    for i in range(top + 1):
        label = (symbol, i, copy)
        builder.weight("h", label, lam - i)
        builder.add("F", label, (symbol, i + 1, copy), 1)
        if i:
            builder.add("E", label, (symbol, i - 1, copy), _v_coeff(builder.field, lam, i))


def _wt_chain(
    builder: _ActionBuilder, symbol: str, lam: int, top: int, copy: int = 0, weight_sign: int = 1
):
    """h v_i = (i-λ)v_i, E v_i = v_{i+1}, F v_i = d_i v_{i-1} for i = 0..top."""
    for i in range(top + 1):
        label = (symbol, i, copy)
        builder.weight("h", label, weight_sign * (i - lam))
        builder.add("E", label, (symbol, i + 1, copy), 1)
        if i:
            builder.add("F", label, (symbol, i - 1, copy), _wt_coeff(builder.field, lam, i))


def _v0_chain(builder: _ActionBuilder, symbol: str, lam: int):
    """h v_i = (λ-2i)v_i, e v_i = -i(λ+1-i)v_{i-1}, f v_i = -v_{i+1} for i = 0..λ."""
    for i in range(lam + 1):
        label = (symbol, i, 0)
        builder.weight("h", label, lam - 2 * i)
        builder.add("f", label, (symbol, i + 1, 0), -1)
        if i:
            builder.add("e", label, (symbol, i - 1, 0), -i * (lam + 1 - i))


def _labels(symbol: str, top: int, copy: int = 0) -> list[Label]:
    return [(symbol, i, copy) for i in range(top + 1)]


def _bits(top: int, shift: int = 0) -> list[int]:
    return [(i + shift) % 2 for i in range(top + 1)]


# ---- u(sl2) ----------------------------------------------------------------------------------


def _build_v0(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    lam = params.lam
    builder = _ActionBuilder(algebra, _labels("v", lam), [0] * (lam + 1))
    _v0_chain(builder, "v", lam)
    return builder.build(params.label)


def _build_p0(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    nu = params.lam
    other = algebra.p - 2 - nu
    labels = _labels("b", nu) + _labels("a", nu) + _labels("x", other) + _labels("y", other)
    builder = _ActionBuilder(algebra, labels, [0] * len(labels))
    builder.alias(("b", nu + 1, 0), ("y", other, 0))
    builder.alias(("x", other + 1, 0), ("a", 0, 0))
    builder.alias(("y", other + 1, 0), ("a", nu, 0))
    _v0_chain(builder, "b", nu)
    _v0_chain(builder, "a", nu)
    _v0_chain(builder, "x", other)
    builder.add("e", ("b", 0, 0), ("x", other, 0), 1)
    for i in range(1, nu + 1):
        builder.add("e", ("b", i, 0), ("a", i - 1, 0), 1)
    for j in range(other + 1):
        label = ("y", j, 0)
        builder.weight("h", label, 2 * j - other)
        builder.add("e", label, ("y", j + 1, 0), 1)
        if j:
            builder.add("f", label, ("y", j - 1, 0), -j * (j - other - 1))
    return builder.build(params.label)


# ---- u(osp(1|2)) -----------------------------------------------------------------------------


def _build_v(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    top = 2 * params.lam
    builder = _ActionBuilder(algebra, _labels("v", top), _bits(top))
    _v_chain(builder, "v", params.lam, top)
    return builder.build(params.label)


def _build_w(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    top = 2 * algebra.p - 1
    builder = _ActionBuilder(algebra, _labels("v", top), _bits(top))
    _v_chain(builder, "v", params.lam, top)
    return builder.build(params.label)


def _build_wt(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    top = 2 * algebra.p - 1
    builder = _ActionBuilder(algebra, _labels("v", top), _bits(top))
    _wt_chain(builder, "v", params.lam, top)
    return builder.build(params.label)


def _build_p(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    mu = params.lam
    other = algebra.p - 1 - mu
    labels = _labels("b", 2 * mu) + _labels("a", 2 * mu)
    labels += _labels("x", 2 * other) + _labels("y", 2 * other)
    parity = _bits(2 * mu) * 2 + _bits(2 * other, 1) * 2
    builder = _ActionBuilder(algebra, labels, parity)
    builder.alias(("b", 2 * mu + 1, 0), ("y", 2 * other, 0))
    builder.alias(("x", 2 * other + 1, 0), ("a", 0, 0))
    builder.alias(("y", 2 * other + 1, 0), ("a", 2 * mu, 0), -1)
    _v_chain(builder, "b", mu, 2 * mu)
    _v_chain(builder, "a", mu, 2 * mu)
    _v_chain(builder, "x", other, 2 * other)
    _wt_chain(builder, "y", other, 2 * other)
    builder.add("E", ("b", 0, 0), ("x", 2 * other, 0), 1)
    for i in range(1, 2 * mu + 1):
        builder.add("E", ("b", i, 0), ("a", i - 1, 0), 1 if i % 2 == 0 else -1)
    return builder.build(params.label)


def _string_sizes(p: int, lam: int) -> tuple[int, int]:
    """Last indices of the e-chains (V^λ) and a-chains (V^{p-1-λ})."""
    return 2 * lam, 2 * p - 2 * lam - 2


def _build_vn(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    lam, n = params.lam, params.n
    e_top, a_top = _string_sizes(algebra.p, lam)
    labels: list[Label] = []
    parity: list[int] = []
    for m in range(n + 1):
        labels += _labels("e", e_top, m)
        parity += _bits(e_top)
    for k in range(n):
        labels += _labels("a", a_top, k)
        parity += _bits(a_top, 1)
    builder = _ActionBuilder(algebra, labels, parity)
    for m in range(n + 1):
        builder.alias(("e", e_top + 1, m), ("a", 0, m - 1))
        _v_chain(builder, "e", lam, e_top, m)
        builder.add("E", ("e", 0, m), ("a", a_top, m), 1)
    for k in range(n):
        _v_chain(builder, "a", algebra.p - 1 - lam, a_top, k)
    return builder.build(params.label)


def _build_vtn(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    lam, n = params.lam, params.n
    e_top, a_top = _string_sizes(algebra.p, lam)
    labels: list[Label] = []
    parity: list[int] = []
    for m in range(n + 1):
        labels += _labels("e", e_top, m)
        parity += _bits(e_top)
    for k in range(n):
        labels += _labels("a", a_top, k)
        parity += _bits(a_top, 1)
    builder = _ActionBuilder(algebra, labels, parity)
    for m in range(n + 1):
        _v_chain(builder, "e", lam, e_top, m)
    for k in range(n):
        builder.alias(("a", a_top + 1, k), ("e", 0, k))
        _v_chain(builder, "a", algebra.p - 1 - lam, a_top, k)
        builder.add("E", ("a", 0, k), ("e", e_top, k + 1), 1)
    return builder.build(params.label)


def _build_wn(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    top = 2 * algebra.p - 1
    labels: list[Label] = []
    for m in range(1, params.n + 1):
        labels += _labels("e", top, m)
    builder = _ActionBuilder(algebra, labels, _bits(top) * params.n)
    for m in range(1, params.n + 1):
        _v_chain(builder, "e", params.lam, top, m)
        builder.add("E", ("e", 0, m), ("e", top, m + 1), 1)
    return builder.build(params.label)


def _build_wtn(algebra: PBWAlgebra, params: FamilyParams, weight_sign: int) -> Module:
    top = 2 * algebra.p - 1
    labels: list[Label] = []
    for m in range(1, params.n + 1):
        labels += _labels("f", top, m)
    builder = _ActionBuilder(algebra, labels, _bits(top) * params.n)
    for m in range(1, params.n + 1):
        _wt_chain(builder, "f", params.lam, top, m, weight_sign)
        builder.add("F", ("f", 0, m), ("f", top, m - 1), 1)
    return builder.build(params.label)


def _build_band(algebra: PBWAlgebra, params: FamilyParams, tilde: bool) -> Module:
    top = 2 * algebra.p - 1
    first, second = ("f", "f̂") if tilde else ("e", "ê")
    labels: list[Label] = []
    for symbol in (first, second):
        for m in range(1, params.n + 1):
            labels += _labels(symbol, top, m)
    builder = _ActionBuilder(algebra, labels, _bits(top) * (2 * params.n))
    gluing_gen = "F" if tilde else "E"
    s1, s2 = params.s
    for m in range(1, params.n + 1):
        for symbol in (first, second):
            if tilde:
                _wt_chain(builder, symbol, params.lam, top, m)
            else:
                _v_chain(builder, symbol, params.lam, top, m)
        for symbol, partner, scalar in ((first, second, s1), (second, first, s2)):
            builder.add(gluing_gen, (symbol, 0, m), (partner, top, m), scalar)
            builder.add(gluing_gen, (symbol, 0, m), (partner, top, m - 1), 1)
    return builder.build(params.label)


_BUILDERS: dict[str, Callable[[PBWAlgebra, FamilyParams], Module]] = {
    "V0": _build_v0,
    "P0": _build_p0,
    "V": _build_v,
    "W": _build_w,
    "Wt": _build_wt,
    "P": _build_p,
    "Vn": _build_vn,
    "Vtn": _build_vtn,
    "Wn": _build_wn,
    "T": lambda algebra, params: _build_band(algebra, params, tilde=False),
    "Tt": lambda algebra, params: _build_band(algebra, params, tilde=True),
}

# The printed weight of W̃^λ(n) is tried first; the first variant satisfying all relations wins.
WTN_WEIGHT_CANDIDATES = ((-1, "h f_u(m) = (λ-u) f_u(m)"), (1, "h f_u(m) = (u-λ) f_u(m)"))


def _build_wtn_checked(algebra: PBWAlgebra, params: FamilyParams) -> Module:
    for weight_sign, formula in WTN_WEIGHT_CANDIDATES:
        module = _build_wtn(algebra, params, weight_sign)
        check = check_relations(module)
        if check.passed:
            logger.debug("W̃(n) weight variant accepted: %s", formula)
            return module
        logger.debug("W̃(n) weight variant %s rejected: %s", formula, check.relation)
    raise ModuleError(f"No weight variant of {params.label} satisfies the relations")


def make_module(params: FamilyParams, p: Union[int, PrimeField]) -> Module:
    """Builds the family member described by `params` over u(osp(1|2)) or u(sl2)."""
    field = as_field(p)
    params.validate(field.p)
    algebra = build_preset("sl2" if params.family in SL2_FAMILIES else "osp12", field)
    if params.family == "Wtn":
        return _build_wtn_checked(algebra, params)
    return _BUILDERS[params.family](algebra, params)


def module_of(family: str, lam: int, p: Union[int, PrimeField], n: int = 0, s=(1, 1)) -> Module:
    return make_module(FamilyParams(family, lam, n, tuple(s)), p)


def osp_simples(p: Union[int, PrimeField]) -> list[Module]:
    field = as_field(p)
    return [module_of("V", lam, field) for lam in range(field.p)]


def osp_projectives(p: Union[int, PrimeField]) -> list[Module]:
    field = as_field(p)
    return [module_of("P", lam, field) for lam in range(field.p)]


def sl2_simples(p: Union[int, PrimeField]) -> list[Module]:
    field = as_field(p)
    return [module_of("V0", lam, field) for lam in range(field.p)]


def sl2_projectives(p: Union[int, PrimeField]) -> list[Module]:
    """P₀^λ for λ <= p-2 and the Steinberg module V₀^{p-1}, indexed by the head weight."""
    field = as_field(p)
    return [module_of("P0", lam, field) for lam in range(field.p - 1)] + [
        module_of("V0", field.p - 1, field)
    ]


@dataclass(frozen=True)
class CatalogueRow:
    family: str
    lam: int
    n: int
    c: Optional[int]
    dim: int
    parity_changed: bool
    label: str


def family_catalogue(p: Union[int, PrimeField], n_max: int = 1) -> list[CatalogueRow]:
    """All indecomposable supermodule classes up to length n_max, with their Π-shifts.

    The band modules T_c(n) are listed once per c ∈ F_p^*, represented by s = (c, 1).
    """
    field = as_field(p)
    entries: list[tuple[FamilyParams, Optional[int]]] = []
    for lam in range(field.p):
        entries.append((FamilyParams("V", lam), None))
        entries.append((FamilyParams("P", lam), None))
        for n in range(1, n_max + 1):
            entries.append((FamilyParams("Vn", lam, n), None))
            entries.append((FamilyParams("Vtn", lam, n), None))
            entries.append((FamilyParams("Wn", lam, n), None))
            entries.append((FamilyParams("Wtn", lam, n), None))
            for c in range(1, field.p):
                entries.append((FamilyParams("T", lam, n, (c, 1)), c))
    rows = []
    for params, c in entries:
        module = make_module(params, field)
        for shifted in (False, True):
            label = parity_change(module).label if shifted else module.label
            rows.append(
                CatalogueRow(params.family, params.lam, params.n, c, module.dim, shifted, label)
            )
    return rows


def eigenvalues_of_h(module: Module) -> list[int]:
    """Diagonal of the h-matrix, the family constructors build h diagonal."""
    return [int(value) for value in np.diag(module.matrix("h"))]
