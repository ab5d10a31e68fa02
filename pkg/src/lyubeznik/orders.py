"""Total orders on generators, precedence constraints, broken and preserved sets."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import ArgumentError, GeneratorSet, InvariantViolation, LyubeznikError, bits, submasks


class InconsistencyError(LyubeznikError):
    """Precedence constraints admit no total order; ``cycle`` certifies it."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        super().__init__(f"precedence cycle {self.cycle}")


@dataclass(frozen=True)
class TotalOrder:
    """``sequence[r]`` is the generator at rank ``r``; ``rank[i]`` its inverse."""

    sequence: tuple[int, ...]
    rank: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        seq = tuple(self.sequence)
        if sorted(seq) != list(range(len(seq))):
            raise ArgumentError(f"{seq} is not a permutation of 0..{len(seq) - 1}")
        rank = [0] * len(seq)
        for r, i in enumerate(seq):
            rank[i] = r
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def canonical(cls, s: int) -> "TotalOrder":
        return cls(tuple(range(s)))

    def __len__(self):
        return len(self.sequence)


@dataclass(frozen=True)
class Clause:
    """Some generator of ``witnesses`` must precede every one of ``dominated``.

    Equivalently the least element of ``witnesses | dominated`` is a witness.
    """

    witnesses: int
    dominated: int

    @property
    def scope(self) -> int:
        return self.witnesses | self.dominated


@dataclass(frozen=True)
class PrecedenceConstraints:
    pairs: frozenset[tuple[int, int]] = frozenset()
    clauses: tuple[Clause, ...] = ()

    def satisfied_by(self, o: TotalOrder) -> bool:
        if any(o.rank[a] >= o.rank[b] for a, b in self.pairs):
            return False
        return all(c.witnesses >> min_of(o, c.scope) & 1 for c in self.clauses)


def min_of(o: TotalOrder, a: int) -> int:
    if a == 0:
        raise ArgumentError("min of an empty set")
    return min(bits(a), key=o.rank.__getitem__)


def breaker(g: GeneratorSet, rank: Sequence[int], d: int) -> int | None:
    """Least-ranked generator breaking ``d`` under the rank map, or None."""
    first = min(rank[i] for i in bits(d))
    best = None
    for u in bits(g.closure(d) & ~d):
        r = rank[u]
        if r < first and (best is None or r < rank[best]):
            best = u
    return best


def is_broken(g: GeneratorSet, o: TotalOrder, d: int) -> int | None:
    """Least-ranked generator breaking ``d``, or None.

    A breaker divides ``m(d)`` and precedes every member of ``d``, so it is
    never a member itself.
    """
    if d == 0:
        raise ArgumentError("broken-ness of the empty set is undefined")
    return breaker(g, o.rank, d)


def preserved_under(g: GeneratorSet, rank: Sequence[int], e: int) -> bool:
    return all(breaker(g, rank, d) is None for d in submasks(e))


def is_preserved(g: GeneratorSet, o: TotalOrder, e: int) -> bool:
    return preserved_under(g, o.rank, e)


def broken_subset(g: GeneratorSet, o: TotalOrder, e: int) -> tuple[int, int] | None:
    """Some (subset, breaker) pair witnessing that ``e`` is not preserved."""
    for d in submasks(e):
        w = is_broken(g, o, d)
        if w is not None:
            return d, w
    return None


def find_cycle(s: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...] | None:
    """A shortest directed cycle among the pairs, or None if acyclic."""
    succ: dict[int, list[int]] = {i: [] for i in range(s)}
    for a, b in sorted(set(pairs)):
        succ[a].append(b)
    best = None
    for start in range(s):
        parent = {start: None}
        queue = deque([start])
        found = None
        while queue and found is None:
            x = queue.popleft()
            for y in succ[x]:
                if y == start:
                    found = x
                    break
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        if found is None:
            continue
        path = []
        x = found
        while x is not None:
            path.append(x)
            x = parent[x]
        cycle = tuple(reversed(path))
        if best is None or len(cycle) < len(best):
            best = cycle
    return best


def refine_to_total(c: PrecedenceConstraints | Iterable[tuple[int, int]], s: int) -> TotalOrder:
    """Stable topological sort: lowest index among the available elements goes next.

    Only the mandatory pairs are honoured; clauses are the caller's business.
    """
    pairs = c.pairs if isinstance(c, PrecedenceConstraints) else frozenset(c)
    for a, b in pairs:
        if not (0 <= a < s and 0 <= b < s):
            raise ArgumentError(f"pair {(a, b)} out of range for {s} elements")
    indeg = [0] * s
    succ: list[list[int]] = [[] for _ in range(s)]
    for a, b in set(pairs):
        succ[a].append(b)
        indeg[b] += 1
    ready = [i for i in range(s) if indeg[i] == 0]
    heapq.heapify(ready)
    seq = []
    while ready:
        x = heapq.heappop(ready)
        seq.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(ready, y)
    if len(seq) < s:
        raise InconsistencyError(find_cycle(s, pairs) or ())
    order = TotalOrder(tuple(seq))
    if any(order.rank[a] >= order.rank[b] for a, b in pairs):
        raise InvariantViolation("refined order violates a mandatory pair")
    return order


def order_from_suffix(base: Sequence[int], suffix: int | Iterable[int], s: int | None = None) -> TotalOrder:
    """``base`` in the given sequence, then ``suffix`` in ascending index order."""
    tail = bits(suffix) if isinstance(suffix, int) else sorted(suffix)
    seq = tuple(base) + tuple(tail)
    if len(set(seq)) != len(seq):
        raise ArgumentError("base and suffix overlap")
    total = len(seq) if s is None else s
    if sorted(seq) != list(range(total)):
        raise ArgumentError("base and suffix do not partition the generators")
    return TotalOrder(seq)
