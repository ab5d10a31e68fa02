"""Run the cross-check properties over seeded random ideals and print a tally.

    python scripts/run_fuzz.py --trials 500 --seed 3 --report discrepancies.jsonl
"""
import argparse
import time

from lyubeznik.formulas import write_report
from lyubeznik.fuzz import PROPERTIES, run_fuzz


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-gens", type=int, default=6)
    ap.add_argument("--max-vars", type=int, default=4)
    ap.add_argument("--max-exp", type=int, default=4)
    ap.add_argument("--report", default="formula-discrepancies.jsonl")
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_fuzz(args.trials, args.seed, args.max_gens, args.max_vars, args.max_exp)
    elapsed = time.perf_counter() - t0
    for key, desc in PROPERTIES.items():
        t = report.tallies[key]
        print(f"({key}) {desc:<62} {t.checked:>6} checked {len(t.failures):>5} failing")
    with open(args.report, "w", encoding="utf-8") as fh:
        n = write_report(report.formula_discrepancies, fh)
    print(f"{report.trials} trials in {elapsed:.1f}s; {n} formula records -> {args.report}")


if __name__ == "__main__":
    main()
