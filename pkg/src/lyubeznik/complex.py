"""The Lyubeznik simplicial complex, the Taylor simplex, and the signed differential."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from .core import ArgumentError, GeneratorSet, Monomial, bits, popcount, quotient, submasks
from .covers import _guard
from .orders import TotalOrder, is_broken


@dataclass(frozen=True)
class SimplicialComplexOnGens:
    """Downward-closed family of generator subsets, ``levels[k]`` holding the faces of size k."""

    gens: GeneratorSet
    levels: tuple[tuple[int, ...], ...]
    order: TotalOrder | None = None

    @cached_property
    def faces(self) -> frozenset[int]:
        return frozenset(f for level in self.levels for f in level)

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def face_counts(self) -> list[int]:
        return [len(level) for level in self.levels]

    def sorted_members(self, face: int) -> list[int]:
        """Members of ``face`` ascending by the complex's order (index order for Taylor)."""
        members = bits(face)
        if self.order is not None:
            members.sort(key=self.order.rank.__getitem__)
        return members


@dataclass(frozen=True)
class DifferentialEntry:
    from_face: int
    to_face: int
    removed: int
    sign: int
    monomial: Monomial


@dataclass(frozen=True)
class MinimalityVerdict:
    is_minimal: bool
    witnesses: tuple[tuple[int, int], ...] = ()

    @property
    def witness(self) -> tuple[int, int] | None:
        return self.witnesses[0] if self.witnesses else None

    def __bool__(self):
        return self.is_minimal


def _levels(faces_by_size: dict[int, list[int]]) -> tuple[tuple[int, ...], ...]:
    top = max(faces_by_size)
    return tuple(tuple(sorted(faces_by_size.get(k, []), key=bits)) for k in range(top + 1))


def lyubeznik_complex(g: GeneratorSet, o: TotalOrder, limit: int | None = None) -> SimplicialComplexOnGens:
    """Faces are the preserved subsets, built one cardinality at a time.

    A k-subset is a face when all its (k-1)-subsets are faces and it is not
    itself broken.
    """
    _guard(g, limit)
    if len(o) != g.s:
        raise ArgumentError("order size does not match generator count")
    levels: dict[int, list[int]] = {0: [0]}
    current = {0}
    k = 0
    while current:
        k += 1
        nxt = set()
        for f in current:
            start = f.bit_length()
            for j in range(start, g.s):
                cand = f | 1 << j
                if any((cand & ~(1 << i)) not in current for i in bits(cand)):
                    continue
                if is_broken(g, o, cand) is None:
                    nxt.add(cand)
        if nxt:
            levels[k] = list(nxt)
        current = nxt
    return SimplicialComplexOnGens(g, _levels(levels), o)


def taylor_simplex(g: GeneratorSet, limit: int | None = None) -> SimplicialComplexOnGens:
    _guard(g, limit)
    levels: dict[int, list[int]] = defaultdict(list)
    for mask in range(g.full + 1):
        levels[popcount(mask)].append(mask)
    return SimplicialComplexOnGens(g, _levels(levels), None)


def differential(cx: SimplicialComplexOnGens, f: int) -> list[DifferentialEntry]:
    """phi(F) = sum_k (-1)^(k+1) m(F)/m(F - k-th member) (F - k-th member)."""
    if f == 0 or f not in cx:
        raise ArgumentError(f"{cx.gens.format_subset(f)} is not a non-empty face")
    g = cx.gens
    mf = g.lcm(f)
    out = []
    for k, u in enumerate(cx.sorted_members(f), start=1):
        to = f & ~(1 << u)
        out.append(DifferentialEntry(f, to, u, 1 if k % 2 else -1, quotient(mf, g.lcm(to))))
    return out


def boundary_of_boundary(cx: SimplicialComplexOnGens, f: int) -> dict[tuple[int, Monomial], int]:
    """Nonzero terms of phi(phi(F)); empty when the composite vanishes on F."""
    acc: dict[tuple[int, Monomial], int] = defaultdict(int)
    for e1 in differential(cx, f):
        if e1.to_face == 0:
            continue
        for e2 in differential(cx, e1.to_face):
            mono = tuple(a + b for a, b in zip(e1.monomial, e2.monomial))
            acc[(e2.to_face, mono)] += e1.sign * e2.sign
    return {key: v for key, v in acc.items() if v}


def is_minimal_resolution(cx: SimplicialComplexOnGens) -> MinimalityVerdict:
    """Minimal iff no face F and member u have m(F - u) = m(F).

    All offending (face, removed member) pairs are reported, smallest face first.
    """
    g = cx.gens
    bad = []
    for level in cx.levels[1:]:
        for f in level:
            mf = g.lcm(f)
            for u in cx.sorted_members(f):
                if g.lcm(f & ~(1 << u)) == mf:
                    bad.append((f, u))
    return MinimalityVerdict(not bad, tuple(bad))


def is_face_by_definition(g: GeneratorSet, o: TotalOrder, f: int) -> bool:
    """Direct membership test: for every non-empty G in F, the least divisor of m(G) lies in G."""
    for sub in submasks(f):
        divs = bits(g.closure(sub))
        least = min(divs, key=o.rank.__getitem__)
        if not sub >> least & 1:
            return False
    return True
