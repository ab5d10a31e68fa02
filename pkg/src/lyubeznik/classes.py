"""Cone, M-cone, generic, mean and tame ideals, with their guaranteed witness orders."""
from __future__ import annotations

from dataclasses import dataclass

from .core import GeneratorSet, InvariantViolation, bits
from .covers import absolutely_inner_points, c_inner_points, m_minimal_complete_covers
from .decide import check_order
from .orders import InconsistencyError, PrecedenceConstraints, TotalOrder, refine_to_total


@dataclass(frozen=True)
class ClassResult:
    holds: bool
    witnesses: int = 0
    suggested_order: TotalOrder | None = None

    def __bool__(self):
        return self.holds


def _checked(g: GeneratorSet, o: TotalOrder, what: str) -> TotalOrder:
    if not check_order(g, o):
        raise InvariantViolation(f"{what} order {o.sequence} fails check_order")
    return o


def _front_loaded(g: GeneratorSet, first: list[int]) -> TotalOrder:
    rest = [i for i in range(g.s) if i not in first]
    return TotalOrder(tuple(first) + tuple(rest))


def is_cone(g: GeneratorSet, limit: int | None = None) -> ClassResult:
    """Some generator is an inner point of every complete cover.

    The suggested order puts the first such generator in front.
    """
    a = absolutely_inner_points(g, limit)
    if not a:
        return ClassResult(False)
    order = _checked(g, _front_loaded(g, bits(a)[:1]), "cone")
    return ClassResult(True, a, order)


def is_m_cone(g: GeneratorSet, limit: int | None = None) -> ClassResult:
    """Every M-minimal complete cover contains a c-inner point.

    Vacuously true without covers.  The suggested order puts all c-inner
    points first.
    """
    ci = c_inner_points(g, limit)
    holds = all(cover & ci for cover, _ in m_minimal_complete_covers(g))
    if not holds:
        return ClassResult(False, ci)
    order = _checked(g, _front_loaded(g, bits(ci)), "M-cone")
    return ClassResult(True, ci, order)


def is_generic(g: GeneratorSet, strict: bool = False) -> bool:
    """No two generators share a nonzero exponent in any variable.

    ``strict`` also forbids shared zero exponents (the literal reading).
    """
    for k in range(g.n):
        seen = set()
        for u in g.gens:
            e = u[k]
            if e in seen and (strict or e != 0):
                return False
            seen.add(e)
    return True


def mean_relation(g: GeneratorSet) -> set[tuple[int, int]]:
    """Pairs (i, j) with 0 < b_ik < b_jk for some variable k."""
    rel = set()
    for i, a in enumerate(g.gens):
        for j, b in enumerate(g.gens):
            if i != j and any(0 < x < y for x, y in zip(a, b)):
                rel.add((i, j))
    return rel


@dataclass(frozen=True)
class MeanResult:
    holds: bool
    relation: PrecedenceConstraints | None = None

    def __bool__(self):
        return self.holds


def is_mean(g: GeneratorSet, strict: bool = False) -> MeanResult:
    if not is_generic(g, strict):
        return MeanResult(False)
    rel = mean_relation(g)
    for i, j in rel:
        a, b = g.gens[i], g.gens[j]
        if not all(x < y or y == 0 for x, y in zip(a, b)):
            return MeanResult(False)
    return MeanResult(True, PrecedenceConstraints(frozenset(rel)))


def is_tame(g: GeneratorSet, strict: bool = False) -> ClassResult:
    """Mean, with an acyclic relation; the suggested order is its stable linear extension."""
    mean = is_mean(g, strict)
    if not mean:
        return ClassResult(False)
    try:
        order = refine_to_total(mean.relation, g.s)
    except InconsistencyError:
        return ClassResult(False)
    return ClassResult(True, 0, _checked(g, order, "tame"))


@dataclass(frozen=True)
class ClassReport:
    cone: ClassResult
    m_cone: ClassResult
    generic: bool
    mean: MeanResult
    tame: ClassResult

    @property
    def suggested_order(self) -> TotalOrder | None:
        for r in (self.cone, self.m_cone, self.tame):
            if r.suggested_order is not None:
                return r.suggested_order
        return None


def classify_ideal(g: GeneratorSet, strict_generic: bool = False, limit: int | None = None) -> ClassReport:
    return ClassReport(
        cone=is_cone(g, limit),
        m_cone=is_m_cone(g, limit),
        generic=is_generic(g, strict_generic),
        mean=is_mean(g, strict_generic),
        tame=is_tame(g, strict_generic),
    )
