"""Deciding whether a monomial ideal is Lyubeznik.

A total order is a witness when every E-minimal cover fails to be preserved
under it.  :func:`decide` searches orders that put the out points of G(I)
last, prunes with the necessary precedence constraints coming from the
M-minimal complete covers, and validates every completed order in full.
:func:`oracle_decide` tries all ``s!`` orders and shares nothing with the
search beyond :func:`check_order`.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .core import (
    CapacityError,
    GeneratorSet,
    InvariantViolation,
    Monomial,
    bits,
    env_limit,
    submasks,
)
from .covers import (
    Cover,
    all_e_minimal_covers,
    classify_points,
    e_minimal_covers,
    m_minimal_complete_covers,
    sole_attainers,
)
from .orders import (
    Clause,
    PrecedenceConstraints,
    TotalOrder,
    find_cycle,
    preserved_under,
)

DEFAULT_SEARCH_LIMIT = 14
DEFAULT_ORACLE_LIMIT = 8

WITNESS_VERIFIED = "witness-verified"
CONSTRAINT_CONTRADICTION = "constraint-contradiction"
EXHAUSTED_SEARCH = "exhausted-search"


@dataclass(frozen=True)
class OrderCheck:
    passed: bool
    preserved_cover: Cover | None = None

    def __bool__(self):
        return self.passed


def _first_preserved(g: GeneratorSet, rank, covers: list[Cover]) -> Cover | None:
    for c in covers:
        if preserved_under(g, rank, c.members):
            return c
    return None


def check_order(g: GeneratorSet, o: TotalOrder, covers: list[Cover] | None = None) -> OrderCheck:
    """Pass iff no E-minimal cover of any generator is preserved under ``o``."""
    if covers is None:
        covers = all_e_minimal_covers(g)
    bad = _first_preserved(g, o.rank, covers)
    return OrderCheck(bad is None, bad)


def satisfies_condition_three(g: GeneratorSet, o: TotalOrder) -> bool:
    """Every E-minimal cover C contains some D, with D + {v} an E-minimal cover
    of some v outside D, such that the least generator dividing m(D) outside
    D precedes every member of D.

    Kept only as a cross-check of :func:`check_order`.
    """
    e_min = {(c.members, c.covered) for c in all_e_minimal_covers(g)}
    for c in all_e_minimal_covers(g):
        ok = False
        for d in submasks(c.members):
            outside = g.closure(d) & ~d
            if not outside:
                continue
            if not any((d | 1 << v, v) in e_min for v in bits(outside)):
                continue
            least_out = min(o.rank[i] for i in bits(outside))
            if least_out < min(o.rank[i] for i in bits(d)):
                ok = True
                break
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class Contradiction:
    """Why no order can satisfy the necessary constraints.

    ``kind`` is ``"cycle"`` (mandatory pairs form ``cycle``) or
    ``"no-inner-or-exchangeable"`` (``cover`` has neither kind of point).
    """

    kind: str
    cycle: tuple[int, ...] = ()
    cover: int = 0


@dataclass(frozen=True)
class ConstraintSource:
    cover: int
    multidegree: Monomial
    kind: str  # "inner" or "exchangeable"
    witnesses: int


@dataclass(frozen=True)
class Constraints:
    constraints: PrecedenceConstraints
    sources: tuple[ConstraintSource, ...]
    contradiction: Contradiction | None = None


def extract_constraints(g: GeneratorSet) -> Constraints:
    """Necessary precedence relations from the M-minimal complete covers.

    For each such cover the least member must be an inner point if there
    are any, otherwise an exchangeable point; a cover with neither rules
    every order out.  Single-witness clauses become mandatory pairs.
    """
    pairs: set[tuple[int, int]] = set()
    clauses: list[Clause] = []
    sources: list[ConstraintSource] = []
    for cover, mdeg in m_minimal_complete_covers(g):
        pc = classify_points(g, cover)
        if pc.inner:
            kind, wit = "inner", pc.inner
        elif pc.exchangeable:
            kind, wit = "exchangeable", pc.exchangeable
        else:
            return Constraints(
                PrecedenceConstraints(frozenset(pairs), tuple(clauses)),
                tuple(sources),
                Contradiction("no-inner-or-exchangeable", cover=cover),
            )
        sources.append(ConstraintSource(cover, mdeg, kind, wit))
        dominated = cover & ~wit
        if not dominated:
            continue
        ws = bits(wit)
        if len(ws) == 1:
            pairs.update((ws[0], d) for d in bits(dominated))
        else:
            clause = Clause(wit, dominated)
            if clause not in clauses:
                clauses.append(clause)
    pc_all = PrecedenceConstraints(frozenset(pairs), tuple(clauses))
    cycle = find_cycle(g.s, pairs)
    if cycle is not None:
        return Constraints(pc_all, tuple(sources), Contradiction("cycle", cycle=cycle))
    return Constraints(pc_all, tuple(sources))


@dataclass
class SearchStats:
    orders_examined: int = 0
    nodes: int = 0
    prunes: int = 0
    elapsed: float = 0.0

    def as_dict(self, timing: bool = False) -> dict:
        d = {"orders_examined": self.orders_examined, "nodes": self.nodes, "prunes": self.prunes}
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 6)
        return d


@dataclass(frozen=True)
class Verdict:
    is_lyubeznik: bool
    witness_order: TotalOrder | None
    certificate: str
    contradiction: Contradiction | None = None
    stats: SearchStats = field(default_factory=SearchStats, compare=False)


def _verified(g: GeneratorSet, o: TotalOrder, covers: list[Cover], stats: SearchStats) -> Verdict:
    if not check_order(g, o, covers):
        raise InvariantViolation(f"witness order {o.sequence} fails check_order")
    return Verdict(True, o, WITNESS_VERIFIED, stats=stats)


def _limit(name: str, default: int, limit: int | None) -> int:
    return limit if limit is not None else env_limit(name, default)


def decide(g: GeneratorSet, limit: int | None = None, force: bool = False) -> Verdict:
    """Sound and complete decision with a reproducible witness order."""
    cap = _limit("LYUBEZNIK_SEARCH_LIMIT", DEFAULT_SEARCH_LIMIT, limit)
    if g.s > cap and not force:
        raise CapacityError(f"{g.s} generators exceeds search limit {cap}; use force")
    t0 = time.perf_counter()
    stats = SearchStats()
    covers = all_e_minimal_covers(g)
    if not covers:
        stats.orders_examined = 1
        stats.elapsed = time.perf_counter() - t0
        return _verified(g, TotalOrder.canonical(g.s), covers, stats)

    cons = extract_constraints(g)
    if cons.contradiction is not None:
        stats.elapsed = time.perf_counter() - t0
        return Verdict(False, None, CONSTRAINT_CONTRADICTION, cons.contradiction, stats)

    out = sole_attainers(g)
    prefix_pool = [i for i in range(g.s) if not out >> i & 1]
    suffix = bits(out)
    a = len(prefix_pool)
    unplaced = g.s  # rank sentinel; never consulted before a cover is complete
    rank = [unplaced] * g.s
    for k, i in enumerate(suffix):
        rank[i] = a + k
    nonout = g.full & ~out

    # each cover is decided once every non-out generator dividing m(C) is placed
    pending: dict[int, list[Cover]] = {}
    for c in covers:
        need = g.closure(c.members) & nonout
        if need == 0:
            if preserved_under(g, rank, c.members):
                stats.elapsed = time.perf_counter() - t0
                return Verdict(False, None, EXHAUSTED_SEARCH, stats=stats)
            continue
        pending.setdefault(need, []).append(c)

    clauses = [(cl.scope, cl.witnesses) for cl in cons.constraints.clauses]
    clauses += [((1 << x) | (1 << y), 1 << x) for x, y in cons.constraints.pairs]
    for scope, wit in clauses:
        if scope & nonout == 0:
            first = min(bits(scope), key=rank.__getitem__)
            if not wit >> first & 1:
                stats.elapsed = time.perf_counter() - t0
                return Verdict(False, None, EXHAUSTED_SEARCH, stats=stats)

    seq: list[int] = []

    def place_ok(x: int, placed: int) -> bool:
        for scope, wit in clauses:
            if scope >> x & 1 and not scope & placed and not wit >> x & 1:
                return False
        now = placed | 1 << x
        for need, cs in pending.items():
            if need >> x & 1 and need & now == need:
                for c in cs:
                    if preserved_under(g, rank, c.members):
                        return False
        return True

    def search(placed: int) -> TotalOrder | None:
        depth = len(seq)
        if depth == a:
            stats.orders_examined += 1
            o = TotalOrder(tuple(seq) + tuple(suffix))
            if check_order(g, o, covers):
                return o
            return None
        for x in prefix_pool:
            if placed >> x & 1:
                continue
            stats.nodes += 1
            rank[x] = depth
            if not place_ok(x, placed):
                stats.prunes += 1
                rank[x] = unplaced
                continue
            seq.append(x)
            found = search(placed | 1 << x)
            seq.pop()
            rank[x] = unplaced
            if found is not None:
                return found
        return None

    witness = search(0)
    stats.elapsed = time.perf_counter() - t0
    if witness is None:
        return Verdict(False, None, EXHAUSTED_SEARCH, stats=stats)
    return _verified(g, witness, covers, stats)


def oracle_decide(g: GeneratorSet, limit: int | None = None) -> Verdict:
    """Brute force over all ``s!`` orders in lexicographic order, no pruning."""
    cap = _limit("LYUBEZNIK_ORACLE_LIMIT", DEFAULT_ORACLE_LIMIT, limit)
    if g.s > cap:
        raise CapacityError(f"{g.s} generators exceeds oracle limit {cap}")
    t0 = time.perf_counter()
    stats = SearchStats()
    covers = all_e_minimal_covers(g)
    for perm in itertools.permutations(range(g.s)):
        stats.orders_examined += 1
        o = TotalOrder(perm)
        if check_order(g, o, covers):
            stats.elapsed = time.perf_counter() - t0
            return Verdict(True, o, WITNESS_VERIFIED, stats=stats)
    stats.elapsed = time.perf_counter() - t0
    return Verdict(False, None, EXHAUSTED_SEARCH, stats=stats)


def preserved_e_minimal_covers(g: GeneratorSet, o: TotalOrder) -> list[Cover]:
    """All E-minimal covers preserved under ``o`` (the failures of check_order)."""
    return [c for u in range(g.s) for c in e_minimal_covers(g, u) if preserved_under(g, o.rank, c.members)]

