"""Seeded random ideals and the cross-check properties run over them."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classes import classify_ideal
from .complex import boundary_of_boundary, is_minimal_resolution, lyubeznik_complex
from .core import ArgumentError, CapacityError, GeneratorSet, InvariantViolation, LyubeznikError, divides, minimalize
from .covers import cover_masks
from .decide import CONSTRAINT_CONTRADICTION, check_order, decide, oracle_decide
from .formulas import Discrepancy, compare_with_enumeration
from .orders import TotalOrder

RETRIES_PER_GENERATOR = 200


def random_ideal(s: int, n: int, max_exp: int, seed: int) -> GeneratorSet:
    """``s`` pairwise incomparable exponent vectors drawn uniformly from [0, max_exp]^n."""
    if s < 1 or n < 1 or max_exp < 1:
        raise ArgumentError("s, n and max_exp must be positive")
    rng = random.Random(seed)
    chosen: list[tuple[int, ...]] = []
    budget = RETRIES_PER_GENERATOR * s
    while len(chosen) < s and budget > 0:
        budget -= 1
        v = tuple(rng.randint(0, max_exp) for _ in range(n))
        if not any(v):
            continue
        if any(divides(c, v) or divides(v, c) for c in chosen):
            continue
        chosen.append(v)
    if len(chosen) < s:
        raise CapacityError(f"could not draw {s} incomparable monomials in {n} variables up to degree {max_exp}")
    return minimalize(chosen)


@dataclass
class PropertyTally:
    checked: int = 0
    failures: list = field(default_factory=list)


PROPERTIES = {
    "a": "decide agrees with the brute-force oracle",
    "b": "check_order agrees with minimality of the Lyubeznik complex",
    "c": "indicator formulas agree with enumeration",
    "d": "the differential squares to zero",
    "e": "class-detector orders pass check_order",
    "f": "constraint contradictions imply oracle no",
}


@dataclass
class FuzzReport:
    trials: int = 0
    tallies: dict[str, PropertyTally] = field(default_factory=lambda: {k: PropertyTally() for k in PROPERTIES})
    formula_discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not t.failures for t in self.tallies.values())


def draw_parameters(rng: random.Random, max_s: int = 6, max_n: int = 4, max_exp: int = 4) -> tuple[int, int, int]:
    return rng.randint(2, max_s), rng.randint(1, max_n), rng.randint(1, max_exp)


def trial_ideal(seed: int, max_s: int = 6, max_n: int = 4, max_exp: int = 4) -> GeneratorSet:
    """A random ideal for one trial; parameters are redrawn until attainable."""
    rng = random.Random(seed)
    while True:
        s, n, e = draw_parameters(rng, max_s, max_n, max_exp)
        try:
            return random_ideal(s, n, e, rng.randrange(2**32))
        except CapacityError:
            continue


def _describe(g: GeneratorSet) -> list[str]:
    return [g.format(i) for i in range(g.s)]


def check_ideal(g: GeneratorSet, report: FuzzReport, orders_per_ideal: int = 4, rng: random.Random | None = None,
                cover_size_limit: int = 7) -> None:
    """Run every property on ``g`` and record failures in ``report``."""
    rng = rng or random.Random(0)
    t = report.tallies
    ident = _describe(g)

    fast = decide(g)
    slow = oracle_decide(g)
    t["a"].checked += 1
    if fast.is_lyubeznik != slow.is_lyubeznik:
        t["a"].failures.append({"ideal": ident, "decide": fast.is_lyubeznik, "oracle": slow.is_lyubeznik})
    t["f"].checked += 1
    if fast.certificate == CONSTRAINT_CONTRADICTION and slow.is_lyubeznik:
        t["f"].failures.append({"ideal": ident, "contradiction": repr(fast.contradiction)})

    orders = [TotalOrder.canonical(g.s)]
    for _ in range(orders_per_ideal - 1):
        perm = list(range(g.s))
        rng.shuffle(perm)
        orders.append(TotalOrder(tuple(perm)))
    if fast.witness_order is not None:
        orders.append(fast.witness_order)
    for o in orders:
        cx = lyubeznik_complex(g, o)
        t["b"].checked += 1
        if bool(check_order(g, o)) != bool(is_minimal_resolution(cx)):
            t["b"].failures.append({"ideal": ident, "order": list(o.sequence)})
        t["d"].checked += 1
        for level in cx.levels[1:]:
            for f in level:
                residue = boundary_of_boundary(cx, f)
                if residue:
                    t["d"].failures.append({"ideal": ident, "order": list(o.sequence), "face": f})

    t["e"].checked += 1
    try:
        classify_ideal(g)
    except InvariantViolation as exc:
        t["e"].failures.append({"ideal": ident, "error": str(exc)})

    for c in cover_masks(g):
        if bin(c).count("1") > cover_size_limit:
            continue
        t["c"].checked += 1
        found = compare_with_enumeration(g, c)
        if found:
            report.formula_discrepancies.extend(found)
            t["c"].failures.append({"ideal": ident, "cover": c, "count": len(found)})


def run_fuzz(trials: int, seed: int, max_s: int = 6, max_n: int = 4, max_exp: int = 4) -> FuzzReport:
    report = FuzzReport()
    for k in range(trials):
        g = trial_ideal(seed * 1_000_003 + k, max_s, max_n, max_exp)
        try:
            check_ideal(g, report, rng=random.Random(seed + k))
        except LyubeznikError as exc:
            report.tallies["a"].failures.append({"ideal": _describe(g), "error": repr(exc)})
        report.trials += 1
    return report
