"""Covers, E-/M-minimal covers, complete covers and point classification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    ArgumentError,
    CapacityError,
    GeneratorSet,
    Monomial,
    bits,
    divides,
    env_limit,
    popcount,
    submasks,
)

DEFAULT_EXHAUSTIVE_LIMIT = 15


def exhaustive_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    return env_limit("LYUBEZNIK_EXHAUSTIVE_LIMIT", DEFAULT_EXHAUSTIVE_LIMIT)


def _guard(g: GeneratorSet, limit: int | None) -> None:
    cap = exhaustive_limit(limit)
    if g.s > cap:
        raise CapacityError(f"{g.s} generators exceeds exhaustive limit {cap}")


def canonical_key(mask: int) -> tuple[int, list[int]]:
    """Sort key: size first, then the ascending index list."""
    return popcount(mask), bits(mask)


@dataclass(frozen=True)
class Cover:
    members: int
    covered: int

    def __post_init__(self):
        if not self.members >> self.covered & 1:
            raise ArgumentError("covered element must be a member of the cover")


@dataclass(frozen=True)
class PointClassification:
    members: int
    out: int
    inner: int
    boundary: int
    exchangeable: int
    out_sets: tuple[int, ...]

    @property
    def exchangeable_outside_boundary(self) -> int:
        """Members that are exchangeable yet not boundary points.

        Empty for every cover; a non-cover subset that is its own out set
        makes all its members vacuously exchangeable out points.
        """
        return self.exchangeable & ~self.boundary


def is_cover(g: GeneratorSet, c: int, u: int) -> bool:
    if not c >> u & 1:
        raise ArgumentError(f"generator {u} is not in the subset")
    return divides(g.gens[u], g.lcm(c & ~(1 << u)))


def e_minimal_covers(g: GeneratorSet, u: int) -> list[Cover]:
    """E-minimal covers of generator ``u``, smallest first.

    Breadth-first over subsets ``S`` of the other generators; a subset is
    kept when ``u`` divides ``m(S)`` and no smaller kept subset lies in it.
    """
    if not 0 <= u < g.s:
        raise IndexError(f"generator index {u} out of range")
    target = g.gens[u]
    others = g.full & ~(1 << u)
    found: list[int] = []
    by_size: dict[int, list[int]] = {}
    for sub in submasks(others):
        by_size.setdefault(popcount(sub), []).append(sub)
    for size in sorted(by_size):
        for sub in sorted(by_size[size], key=bits):
            if any(f & sub == f for f in found):
                continue
            if divides(target, g.lcm(sub)):
                found.append(sub)
    return [Cover(f | 1 << u, u) for f in found]


def all_e_minimal_covers(g: GeneratorSet) -> list[Cover]:
    return [c for u in range(g.s) for c in e_minimal_covers(g, u)]


def all_covers(g: GeneratorSet, limit: int | None = None) -> Iterator[Cover]:
    """Every pair (C, u) with C a cover of u, by ascending subset mask."""
    _guard(g, limit)
    for mask in range(1, g.full + 1):
        for u in bits(mask):
            if divides(g.gens[u], g.lcm(mask & ~(1 << u))):
                yield Cover(mask, u)


def cover_masks(g: GeneratorSet, limit: int | None = None) -> list[int]:
    """Distinct subsets that cover at least one of their members."""
    seen: list[int] = []
    last = -1
    for c in all_covers(g, limit):
        if c.members != last:
            seen.append(c.members)
            last = c.members
    return seen


def complete_cover(g: GeneratorSet, c: int) -> int:
    return g.closure(c)


def _divisibility_minimal(monos: set[Monomial]) -> list[Monomial]:
    out = [m for m in monos if not any(o != m and divides(o, m) for o in monos)]
    return sorted(out, key=lambda m: tuple(-e for e in m))


def m_minimal_cover_multidegrees(g: GeneratorSet) -> list[Monomial]:
    """Divisibility-minimal multidegrees among all covers.

    Every cover contains an E-minimal cover whose multidegree divides its
    own, so scanning E-minimal covers suffices.
    """
    return _divisibility_minimal({g.lcm(c.members) for c in all_e_minimal_covers(g)})


def m_minimal_complete_covers(g: GeneratorSet) -> list[tuple[int, Monomial]]:
    out = []
    for m in m_minimal_cover_multidegrees(g):
        out.append((g.divisors_of(m), m))
    return out


def out_sets(g: GeneratorSet, c: int) -> list[int]:
    """Inclusion-minimal subsets of ``c`` with the same multidegree as ``c``."""
    if c == 0:
        raise ArgumentError("empty subset has no out sets")
    target = g.lcm(c)
    attaining = [d for d in submasks(c) if g.lcm(d) == target]
    attaining.sort(key=canonical_key)
    minimal: list[int] = []
    for d in attaining:
        if not any(m & d == m for m in minimal):
            minimal.append(d)
    return minimal


def classify_points(g: GeneratorSet, c: int) -> PointClassification:
    osets = out_sets(g, c)
    union = 0
    inter = c
    for d in osets:
        union |= d
        inter &= d
    inner = c & ~union
    boundary = c & ~inner & ~inter
    target = g.lcm(c)
    exchangeable = 0
    for u in bits(c & ~inner):
        ok = True
        for d in osets:
            if not d >> u & 1:
                continue
            base = d & ~(1 << u)
            for v in bits(c & ~d):
                if g.lcm(base | 1 << v) != target:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            exchangeable |= 1 << u
    return PointClassification(c, inter, inner, boundary, exchangeable, tuple(osets))


def non_inner_mask(g: GeneratorSet, c: int) -> int:
    """Members of ``c`` lying in at least one out set, without enumerating them.

    Out sets are the minimal transversals of the hypergraph whose edges are,
    per variable in the support of ``m(c)``, the members attaining the
    maximal exponent.  A member ``w`` lies in a minimal transversal iff
    some edge ``e`` containing it contains no edge that avoids ``w``.
    """
    target = g.lcm(c)
    members = bits(c)
    edges = set()
    for j, top in enumerate(target):
        if top == 0:
            continue
        e = 0
        for i in members:
            if g.gens[i][j] == top:
                e |= 1 << i
        edges.add(e)
    result = 0
    for w in members:
        wbit = 1 << w
        avoiding = [f for f in edges if not f & wbit]
        for e in edges:
            if e & wbit and not any(f & ~e == 0 for f in avoiding):
                result |= wbit
                break
    return result


def _complete_covers(g: GeneratorSet, limit: int | None) -> list[int]:
    seen = {}
    for mask in cover_masks(g, limit):
        m = g.lcm(mask)
        if m not in seen:
            seen[m] = g.divisors_of(m)
    return sorted(seen.values(), key=canonical_key)


def complete_covers(g: GeneratorSet, limit: int | None = None) -> list[int]:
    """Distinct complete covers, deduplicated by multidegree."""
    return _complete_covers(g, limit)


def absolutely_inner_points(g: GeneratorSet, limit: int | None = None) -> int:
    """Generators that lie in, and are inner points of, every complete cover."""
    covers = _complete_covers(g, limit)
    if not covers:
        return 0
    result = g.full
    for c in covers:
        result &= c & ~non_inner_mask(g, c)
        if not result:
            break
    return result


def c_inner_points(g: GeneratorSet, limit: int | None = None, over_all_covers: bool = False) -> int:
    """Generators in some E-minimal cover and inner in every E-minimal cover containing them.

    E-minimal covers are the sets the minimality test looks at, and that is
    all the M-cone order needs.  ``over_all_covers`` quantifies over every
    cover instead, which is strictly stronger and empty far more often.
    """
    _guard(g, limit)
    if over_all_covers:
        family = cover_masks(g, limit)
    else:
        family = sorted({c.members for c in all_e_minimal_covers(g)})
    member_of_some = 0
    fails = 0
    for mask in family:
        member_of_some |= mask
        fails |= non_inner_mask(g, mask)
    return member_of_some & ~fails


def sole_attainers(g: GeneratorSet, c: int | None = None) -> int:
    """Members of ``c`` that alone attain the maximal exponent of some variable.

    These are exactly the out points of ``c``.  Defaults to all of G(I).
    """
    if c is None:
        c = g.full
    target = g.lcm(c)
    result = 0
    for j, top in enumerate(target):
        if top == 0:
            continue
        hits = [i for i in bits(c) if g.gens[i][j] == top]
        if len(hits) == 1:
            result |= 1 << hits[0]
    return result
