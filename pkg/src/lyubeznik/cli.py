"""Command-line interface.  JSON results go to stdout, a short summary to stderr.

Exit codes: 0 success (including negative verdicts), 2 parse error,
3 capacity limit, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import covers as cv
from .classes import classify_ideal
from .complex import boundary_of_boundary, differential, is_minimal_resolution, lyubeznik_complex
from .core import ArgumentError, CapacityError, GeneratorSet, InvariantViolation, format_monomial, mask_of
from .decide import check_order, decide, oracle_decide
from .formulas import classify_by_formula, compare_with_enumeration, write_report
from .fuzz import PROPERTIES, random_ideal, run_fuzz
from .ideal_io import ParseError, parse_ideal, parse_order_spec, parse_subset_spec
from .orders import TotalOrder

EXIT_OK, EXIT_PARSE, EXIT_CAPACITY, EXIT_INVARIANT = 0, 2, 3, 4


def _subset(g: GeneratorSet, mask: int) -> list[str]:
    return g.format_subset(mask)


def _order(g: GeneratorSet, o: TotalOrder | None) -> list[str] | None:
    return None if o is None else [g.format(i) for i in o.sequence]


def _mono(g: GeneratorSet, m) -> str:
    return format_monomial(m, g.names)


def _load(args) -> GeneratorSet:
    if args.expr is not None:
        text = args.expr
    elif args.ideal in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.ideal, encoding="utf-8") as fh:
            text = fh.read()
    return parse_ideal(text).generator_set()


def _emit(obj, summary: str | None = None) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    if summary:
        sys.stderr.write(summary + "\n")


# ------------------------------------------------------------------ commands

def cmd_gens(args) -> int:
    g = _load(args)
    _emit(
        {
            "variables": list(g.names),
            "generators": [
                {"monomial": g.format(i), "exponents": list(g.gens[i]), "input_position": g.input_positions[i]}
                for i in range(g.s)
            ],
        },
        f"{g.s} minimal generators in {g.n} variables",
    )
    return EXIT_OK


def cmd_covers(args) -> int:
    g = _load(args)
    if args.mode == "m-minimal":
        rows = [{"cover": _subset(g, c), "multidegree": _mono(g, m)} for c, m in cv.m_minimal_complete_covers(g)]
    elif args.mode == "complete":
        rows = [{"cover": _subset(g, c), "multidegree": _mono(g, g.lcm(c))} for c in cv.complete_covers(g, args.limit)]
    elif args.mode == "all":
        rows = [
            {"covered": g.format(c.covered), "cover": _subset(g, c.members), "multidegree": _mono(g, g.lcm(c.members))}
            for c in cv.all_covers(g, args.limit)
        ]
    else:
        rows = [
            {"covered": g.format(c.covered), "cover": _subset(g, c.members), "multidegree": _mono(g, g.lcm(c.members))}
            for c in cv.all_e_minimal_covers(g)
        ]
    _emit({"mode": args.mode, "covers": rows}, f"{len(rows)} {args.mode} covers")
    return EXIT_OK


def _enum_points(g: GeneratorSet, c: int) -> dict:
    pc = cv.classify_points(g, c)
    return {
        "out": _subset(g, pc.out),
        "inner": _subset(g, pc.inner),
        "boundary": _subset(g, pc.boundary),
        "exchangeable": _subset(g, pc.exchangeable),
        "out_sets": [_subset(g, d) for d in pc.out_sets],
    }


def _formula_points(g: GeneratorSet, c: int) -> dict:
    fc = classify_by_formula(g, c)
    return {
        "out": _subset(g, fc.out),
        "inner": _subset(g, fc.inner),
        "boundary": _subset(g, fc.boundary),
        "exchangeable": _subset(g, fc.exchangeable),
    }


def cmd_points(args) -> int:
    g = _load(args)
    c = mask_of(parse_subset_spec(g, args.cover))
    result: dict = {"cover": _subset(g, c), "multidegree": _mono(g, g.lcm(c))}
    if args.via in ("enum", "both"):
        result["enumeration"] = _enum_points(g, c)
    if args.via in ("formula", "both"):
        result["formula"] = _formula_points(g, c)
    if args.via == "both":
        result["discrepancies"] = [
            {"member": g.format(d.member), "predicate": d.predicate, "formula": d.formula, "enumeration": d.enumeration}
            for d in compare_with_enumeration(g, c)
        ]
    _emit(result)
    return EXIT_OK


def _non_minimal(g: GeneratorSet, verdict) -> list[dict]:
    return [
        {"face": _subset(g, f), "removed": g.format(u), "multidegree": _mono(g, g.lcm(f))}
        for f, u in verdict.witnesses
    ]


def cmd_complex(args) -> int:
    g = _load(args)
    o = parse_order_spec(g, args.order)
    cx = lyubeznik_complex(g, o, args.limit)
    verdict = is_minimal_resolution(cx)
    result: dict = {
        "order": _order(g, o),
        "face_counts": cx.face_counts(),
        "is_minimal": verdict.is_minimal,
        "non_minimal_faces": _non_minimal(g, verdict),
    }
    if args.export:
        result["faces"] = [
            {"dimension": k - 1, "faces": [_subset(g, f) for f in level]} for k, level in enumerate(cx.levels)
        ]
        entries = []
        for level in cx.levels[1:]:
            for f in level:
                for e in differential(cx, f):
                    entries.append(
                        {"face": _subset(g, f), "removed": g.format(e.removed), "sign": e.sign,
                         "monomial": _mono(g, e.monomial)}
                    )
        result["differential"] = entries
        bad = [f for level in cx.levels[2:] for f in level if boundary_of_boundary(cx, f)]
        if bad:
            raise InvariantViolation("differential does not square to zero")
    _emit(result, f"{sum(cx.face_counts())} faces; minimal={verdict.is_minimal}")
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load(args)
    o = parse_order_spec(g, args.order)
    chk = check_order(g, o)
    verdict = is_minimal_resolution(lyubeznik_complex(g, o, args.limit))
    if chk.passed != verdict.is_minimal:
        raise InvariantViolation("cover criterion and complex minimality disagree")
    pc = chk.preserved_cover
    _emit(
        {
            "order": _order(g, o),
            "minimal": chk.passed,
            "preserved_cover": None if pc is None else {"covered": g.format(pc.covered), "cover": _subset(g, pc.members)},
            "non_minimal_faces": _non_minimal(g, verdict),
        },
        "minimal" if chk.passed else "NOT minimal",
    )
    return EXIT_OK


def cmd_decide(args) -> int:
    g = _load(args)
    v = oracle_decide(g, args.limit) if args.oracle else decide(g, args.limit, force=args.force)
    contradiction = None
    if v.contradiction is not None:
        c = v.contradiction
        contradiction = {"kind": c.kind}
        if c.kind == "cycle":
            contradiction["cycle"] = [g.format(i) for i in c.cycle]
        else:
            contradiction["cover"] = _subset(g, c.cover)
    _emit(
        {
            "is_lyubeznik": v.is_lyubeznik,
            "witness": _order(g, v.witness_order),
            "certificate": v.certificate,
            "contradiction": contradiction,
            "stats": v.stats.as_dict(timing=args.timing),
        },
        f"{'Lyubeznik' if v.is_lyubeznik else 'not Lyubeznik'} ({v.certificate}, {v.stats.elapsed:.3f}s)",
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load(args)
    r = classify_ideal(g, strict_generic=args.strict_generic, limit=args.limit)
    _emit(
        {
            "cone": {"holds": r.cone.holds, "absolutely_inner": _subset(g, r.cone.witnesses),
                     "suggested_order": _order(g, r.cone.suggested_order)},
            "m_cone": {"holds": r.m_cone.holds, "c_inner": _subset(g, r.m_cone.witnesses),
                       "suggested_order": _order(g, r.m_cone.suggested_order)},
            "generic": r.generic,
            "mean": {"holds": r.mean.holds,
                     "relation": None if r.mean.relation is None else
                     [[g.format(a), g.format(b)] for a, b in sorted(r.mean.relation.pairs)]},
            "tame": {"holds": r.tame.holds, "suggested_order": _order(g, r.tame.suggested_order)},
        },
        f"cone={r.cone.holds} m_cone={r.m_cone.holds} generic={r.generic} mean={r.mean.holds} tame={r.tame.holds}",
    )
    return EXIT_OK


def cmd_random(args) -> int:
    g = random_ideal(args.gens, args.vars, args.max_exp, args.seed)
    _emit({"variables": list(g.names), "generators": [list(u) for u in g.gens],
           "text": ", ".join(g.format(i) for i in range(g.s))})
    return EXIT_OK


def cmd_fuzz(args) -> int:
    report = run_fuzz(args.trials, args.seed, args.max_gens, args.max_vars, args.max_exp)
    written = 0
    if report.formula_discrepancies:
        with open(args.report, "w", encoding="utf-8") as fh:
            written = write_report(report.formula_discrepancies, fh)
    props = {
        key: {"description": PROPERTIES[key], "checked": t.checked, "failures": len(t.failures)}
        for key, t in report.tallies.items()
    }
    _emit(
        {"trials": report.trials, "seed": args.seed, "properties": props,
         "formula_report": args.report if written else None, "formula_discrepancies": written},
        "all properties hold" if report.ok else "discrepancies found",
    )
    hard = any(t.failures for k, t in report.tallies.items() if k != "c")
    if hard or (report.tallies["c"].failures and not args.allow_formula_discrepancies):
        return EXIT_INVARIANT
    return EXIT_OK


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lyubeznik", description="Lyubeznik ideal analysis for monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_ideal(sp):
        sp.add_argument("ideal", nargs="?", help="ideal file ('-' or omitted: stdin)")
        sp.add_argument("-e", "--expr", help="ideal given inline, e.g. 'x^3, x^2*y, y^3'")
        sp.add_argument("--limit", type=int, default=None, help="override the exhaustive size limit")
        return sp

    with_ideal(sub.add_parser("gens", help="minimal generators")).set_defaults(func=cmd_gens)

    sp = with_ideal(sub.add_parser("covers", help="list covers"))
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--e-minimal", dest="mode", action="store_const", const="e-minimal")
    mode.add_argument("--m-minimal", dest="mode", action="store_const", const="m-minimal")
    mode.add_argument("--complete", dest="mode", action="store_const", const="complete")
    mode.add_argument("--all", dest="mode", action="store_const", const="all")
    sp.set_defaults(func=cmd_covers, mode="e-minimal")

    sp = with_ideal(sub.add_parser("points", help="classify the points of a subset"))
    sp.add_argument("--cover", required=True, help="comma-separated generators or 1-based input positions")
    sp.add_argument("--via", choices=("formula", "enum", "both"), default="enum")
    sp.set_defaults(func=cmd_points)

    sp = with_ideal(sub.add_parser("complex", help="Lyubeznik complex under an order"))
    sp.add_argument("--order", required=True)
    sp.add_argument("--export", action="store_true", help="include faces and differential entries")
    sp.set_defaults(func=cmd_complex)

    sp = with_ideal(sub.add_parser("check", help="is the resolution minimal under an order"))
    sp.add_argument("--order", required=True)
    sp.set_defaults(func=cmd_check)

    sp = with_ideal(sub.add_parser("decide", help="is the ideal Lyubeznik"))
    sp.add_argument("--oracle", action="store_true", help="brute force over all orders")
    sp.add_argument("--force", action="store_true", help="ignore the search size limit")
    sp.add_argument("--timing", action="store_true", help="include elapsed time in stats")
    sp.set_defaults(func=cmd_decide)

    sp = with_ideal(sub.add_parser("classify", help="cone / M-cone / generic / mean / tame"))
    sp.add_argument("--strict-generic", action="store_true", help="forbid shared zero exponents too")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("random", help="seeded random ideal")
    sp.add_argument("--gens", type=int, required=True)
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("--max-exp", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("fuzz", help="run the cross-check properties on random ideals")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-gens", type=int, default=6)
    sp.add_argument("--max-vars", type=int, default=4)
    sp.add_argument("--max-exp", type=int, default=4)
    sp.add_argument("--report", default="formula-discrepancies.jsonl")
    sp.add_argument("--allow-formula-discrepancies", action="store_true",
                    help="report formula mismatches without failing")
    sp.set_defaults(func=cmd_fuzz)
    return p


def run_command(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ArgumentError) as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"cannot read input: {exc}\n")
        return EXIT_PARSE
    except CapacityError as exc:
        sys.stderr.write(f"capacity: {exc}\n")
        return EXIT_CAPACITY
    except InvariantViolation as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
