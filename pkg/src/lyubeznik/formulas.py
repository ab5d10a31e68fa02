"""Indicator-matrix tests for out, inner, boundary and exchangeable points.

Every product is evaluated literally over the integers, with empty
products equal to 1.  The enumeration in :mod:`lyubeznik.covers` is the
authoritative classifier; these formulas are a cross-check surface.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import prod
from typing import Iterable, TextIO

from .core import ArgumentError, GeneratorSet, Monomial, bits, mask_of
from .covers import classify_points


@dataclass(frozen=True)
class IndicatorMatrix:
    """``d[r][j] == 1`` iff member ``members[r]`` attains exponent j of ``multidegree``."""

    members: tuple[int, ...]
    multidegree: Monomial
    d: tuple[tuple[int, ...], ...]

    def row(self, i: int) -> tuple[int, ...]:
        return self.d[self.members.index(i)]

    @property
    def n(self) -> int:
        return len(self.multidegree)


def indicator_matrix(g: GeneratorSet, c: int) -> IndicatorMatrix:
    if c == 0:
        raise ArgumentError("indicator matrix of an empty subset")
    top = g.lcm(c)
    members = tuple(bits(c))
    d = tuple(tuple(int(g.gens[i][j] == top[j]) for j in range(g.n)) for i in members)
    return IndicatorMatrix(members, top, d)


def _miss(m: IndicatorMatrix, group: Iterable[int], j: int) -> int:
    """prod over k in group of (1 - d_kj): 1 iff nobody in the group attains column j."""
    return prod(1 - m.row(k)[j] for k in group)


def out_point_by_formula(m: IndicatorMatrix, i: int) -> bool:
    if i not in m.members:
        raise ArgumentError(f"generator {i} is not a member of the cover")
    others = [k for k in m.members if k != i]
    value = prod(1 - _miss(m, others, j) for j in range(m.n))
    return value == 0


@dataclass(frozen=True)
class FormulaContext:
    matrix: IndicatorMatrix
    out: frozenset[int]
    B: frozenset[int]
    B_of: dict
    A_of: dict

    @property
    def boundary(self) -> frozenset[int]:
        return frozenset(i for i in self.matrix.members if i not in self.out and boundary_point_by_formula(self, i))


def formula_context(m: IndicatorMatrix) -> FormulaContext:
    out = frozenset(i for i in m.members if out_point_by_formula(m, i))
    B = frozenset(j for j in range(m.n) if all(m.row(i)[j] == 0 for i in out))
    B_of = {i: frozenset(j for j in B if m.row(i)[j] == 1) for i in m.members}
    A_of = {}
    for i in m.members:
        pool = [k for k in m.members if k not in out and k != i]
        rest = sorted(B - B_of[i])
        family = []
        for sub in range(1 << len(pool)):
            A = tuple(pool[t] for t in range(len(pool)) if sub >> t & 1)
            if prod(1 - _miss(m, A, j) for j in rest) == 1:
                family.append(A)
        A_of[i] = family
    return FormulaContext(m, out, B, B_of, A_of)


def _inner_product(ctx: FormulaContext, i: int) -> int:
    m = ctx.matrix
    return prod(1 - _miss(m, A, j) for A in ctx.A_of[i] for j in sorted(ctx.B_of[i]))


def _require_non_out(ctx: FormulaContext, i: int) -> None:
    if i not in ctx.matrix.members:
        raise ArgumentError(f"generator {i} is not a member of the cover")
    if i in ctx.out:
        raise ArgumentError(f"generator {i} is an out point; the formula covers non-out members only")


def inner_point_by_formula(ctx: FormulaContext, i: int) -> bool:
    _require_non_out(ctx, i)
    return _inner_product(ctx, i) == 1


def boundary_point_by_formula(ctx: FormulaContext, i: int) -> bool:
    _require_non_out(ctx, i)
    return _inner_product(ctx, i) == 0


def exchangeable_by_formula(ctx: FormulaContext, i: int) -> bool:
    if not (i in ctx.matrix.members and i not in ctx.out and boundary_point_by_formula(ctx, i)):
        raise ArgumentError(f"generator {i} is not a boundary point")
    m = ctx.matrix
    boundary = ctx.boundary
    value = prod(
        1 - _miss(m, A + (l,), j)
        for A in ctx.A_of[i]
        for l in sorted(boundary - set(A))
        for j in sorted(ctx.B_of[i])
    )
    return value == 1


@dataclass(frozen=True)
class FormulaClassification:
    out: int
    inner: int
    boundary: int
    exchangeable: int


def classify_by_formula(g: GeneratorSet, c: int) -> FormulaClassification:
    ctx = formula_context(indicator_matrix(g, c))
    inner = [i for i in ctx.matrix.members if i not in ctx.out and inner_point_by_formula(ctx, i)]
    boundary = sorted(ctx.boundary)
    exch = [i for i in boundary if exchangeable_by_formula(ctx, i)]
    return FormulaClassification(mask_of(ctx.out), mask_of(inner), mask_of(boundary), mask_of(exch))


@dataclass(frozen=True)
class Discrepancy:
    variables: list
    generators: list
    cover: list
    member: int
    predicate: str
    formula: bool
    enumeration: bool


def compare_with_enumeration(g: GeneratorSet, c: int) -> list[Discrepancy]:
    """Members on which the formula verdicts and the enumeration verdicts differ."""
    enum = classify_points(g, c)
    form = classify_by_formula(g, c)
    found = []
    checks = [("out", enum.out, form.out), ("inner", enum.inner, form.inner), ("boundary", enum.boundary, form.boundary)]
    for i in bits(c):
        for name, a, b in checks:
            ea, fb = bool(a >> i & 1), bool(b >> i & 1)
            if ea != fb:
                found.append(_record(g, c, i, name, fb, ea))
        # exchangeability is compared on members both sides call boundary
        if enum.boundary >> i & 1 and form.boundary >> i & 1:
            ea, fb = bool(enum.exchangeable >> i & 1), bool(form.exchangeable >> i & 1)
            if ea != fb:
                found.append(_record(g, c, i, "exchangeable", fb, ea))
    return found


def _record(g: GeneratorSet, c: int, i: int, predicate: str, formula: bool, enumeration: bool) -> Discrepancy:
    return Discrepancy(
        variables=list(g.names),
        generators=[list(x) for x in g.gens],
        cover=bits(c),
        member=i,
        predicate=predicate,
        formula=formula,
        enumeration=enumeration,
    )


def write_report(records: Iterable[Discrepancy], fh: TextIO) -> int:
    """One JSON object per line; returns the number written."""
    count = 0
    for r in records:
        fh.write(json.dumps(asdict(r), sort_keys=True) + "\n")
        count += 1
    return count
