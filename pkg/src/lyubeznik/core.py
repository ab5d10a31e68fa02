"""Monomials as exponent vectors, minimal generating sets, and multidegrees.

Subsets of generators are plain ``int`` bitmasks over generator indices:
bit ``i`` set means generator ``i`` is a member.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

DEFAULT_MAX_EXPONENT = 10**6


class LyubeznikError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(LyubeznikError, ValueError):
    pass


class ArgumentError(LyubeznikError, ValueError):
    pass


class CapacityError(LyubeznikError):
    """An exhaustive computation was asked to run beyond its size limit."""


class InvariantViolation(LyubeznikError):
    """A guaranteed property failed at runtime."""


def env_limit(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


# ---------------------------------------------------------------- bitmasks

def bits(mask: int) -> list[int]:
    """Indices set in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int, proper: bool = False) -> Iterable[int]:
    """All non-empty submasks of ``mask`` (descending numeric order)."""
    sub = mask
    if proper:
        sub = (sub - 1) & mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


# -------------------------------------------------------------- monomials

def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x if x >= y else y for x, y in zip(a, b))


def quotient(a: Sequence[int], b: Sequence[int]) -> Monomial:
    """``a / b``; requires ``b | a``."""
    if not divides(b, a):
        raise ArgumentError(f"{tuple(b)} does not divide {tuple(a)}")
    return tuple(x - y for x, y in zip(a, b))


def _lex_key(exps: Monomial) -> tuple[int, ...]:
    # descending lex: x^3 before x^2y before y^3
    return tuple(-e for e in exps)


@dataclass(frozen=True)
class GeneratorSet:
    """The minimal monomial generating set G(I), in canonical order.

    Generators are sorted lexicographically by exponent vector, largest
    first.  ``input_positions[i]`` is the 1-based position at which
    canonical generator ``i`` appeared in the caller's input.
    """

    n: int
    gens: tuple[Monomial, ...]
    names: tuple[str, ...] = ()
    input_positions: tuple[int, ...] = ()
    _lcm_cache: dict = field(default_factory=dict, compare=False, repr=False)
    _closure_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", default_names(self.n))
        if len(self.names) != self.n:
            raise DimensionError(f"{len(self.names)} names for {self.n} variables")
        if not self.input_positions:
            object.__setattr__(self, "input_positions", tuple(range(1, len(self.gens) + 1)))
        for g in self.gens:
            if len(g) != self.n:
                raise DimensionError(f"generator {g} has length {len(g)}, expected {self.n}")
        for i, a in enumerate(self.gens):
            for j, b in enumerate(self.gens):
                if i != j and divides(a, b):
                    raise ArgumentError(f"generator {a} divides {b}; not a minimal generating set")

    @property
    def s(self) -> int:
        return len(self.gens)

    @property
    def full(self) -> int:
        return (1 << len(self.gens)) - 1

    def lcm(self, mask: int) -> Monomial:
        """Multidegree of the subset ``mask`` (cached)."""
        cache = self._lcm_cache
        hit = cache.get(mask)
        if hit is not None:
            return hit
        if mask == 0:
            result = (0,) * self.n
        else:
            low = mask & -mask
            i = low.bit_length() - 1
            if i >= len(self.gens) or mask >> len(self.gens):
                raise IndexError(f"subset {bin(mask)} out of range for {len(self.gens)} generators")
            rest = mask ^ low
            result = self.gens[i] if rest == 0 else lcm(self.lcm(rest), self.gens[i])
        cache[mask] = result
        return result

    def divisors_of(self, mono: Sequence[int]) -> int:
        """Mask of generators dividing ``mono``."""
        mask = 0
        for i, g in enumerate(self.gens):
            if all(x <= y for x, y in zip(g, mono)):
                mask |= 1 << i
        return mask

    def closure(self, mask: int) -> int:
        """Mask of generators dividing the multidegree of ``mask``."""
        hit = self._closure_cache.get(mask)
        if hit is None:
            hit = self.divisors_of(self.lcm(mask))
            self._closure_cache[mask] = hit
        return hit

    def format(self, i: int) -> str:
        return format_monomial(self.gens[i], self.names)

    def format_subset(self, mask: int) -> list[str]:
        return [self.format(i) for i in bits(mask)]


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return tuple("xyz"[:n])
    if n == 4:
        return ("x", "y", "z", "t")
    return tuple(f"x{i}" for i in range(1, n + 1))


def format_monomial(exps: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def multidegree(g: GeneratorSet, a: int | Iterable[int]) -> Monomial:
    """Componentwise maximum of the exponents of the generators in ``a``."""
    mask = a if isinstance(a, int) else mask_of(a)
    if mask < 0 or mask >> g.s:
        raise IndexError(f"subset out of range for {g.s} generators")
    return g.lcm(mask)


def minimalize(
    monomials: Sequence[Sequence[int]],
    names: Sequence[str] = (),
    max_exponent: int | None = None,
) -> GeneratorSet:
    """Keep the monomials not strictly divisible by another one, dropping duplicates.

    Survivors keep first-occurrence order in ``input_positions``; the
    returned set itself is in canonical order.
    """
    if not monomials:
        raise ArgumentError("empty monomial list")
    if max_exponent is None:
        max_exponent = env_limit("LYUBEZNIK_MAX_EXPONENT", DEFAULT_MAX_EXPONENT)
    n = len(monomials[0])
    if n == 0:
        raise DimensionError("zero-length exponent vectors")
    vecs = []
    for m in monomials:
        m = tuple(int(e) for e in m)
        if len(m) != n:
            raise DimensionError(f"monomial {m} has length {len(m)}, expected {n}")
        if any(e < 0 for e in m):
            raise ArgumentError(f"negative exponent in {m}")
        if any(e > max_exponent for e in m):
            raise ArgumentError(f"exponent in {m} exceeds bound {max_exponent}")
        if not any(m):
            raise ArgumentError("the constant monomial 1 is not allowed as a generator")
        vecs.append(m)

    survivors: list[tuple[Monomial, int]] = []
    seen = set()
    for pos, m in enumerate(vecs, start=1):
        if m in seen:
            continue
        seen.add(m)
        if any(o != m and divides(o, m) for o in vecs):
            continue
        survivors.append((m, pos))
    survivors.sort(key=lambda t: _lex_key(t[0]))
    return GeneratorSet(
        n=n,
        gens=tuple(m for m, _ in survivors),
        names=tuple(names),
        input_positions=tuple(p for _, p in survivors),
    )

