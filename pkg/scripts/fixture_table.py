"""Verdicts and class memberships for every ideal in fixtures/."""
from pathlib import Path

from lyubeznik.classes import classify_ideal
from lyubeznik.decide import decide, oracle_decide
from lyubeznik.ideal_io import parse_ideal

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    print(f"{'fixture':<16}{'s':>3}  {'decide':<7}{'oracle':<7}{'certificate':<26}classes / witness")
    for path in sorted(FIXTURES.glob("*.txt")):
        g = parse_ideal(path.read_text()).generator_set()
        v = decide(g)
        w = oracle_decide(g)
        rep = classify_ideal(g)
        tags = [name for name, r in (("cone", rep.cone), ("m-cone", rep.m_cone), ("generic", rep.generic),
                                     ("mean", rep.mean), ("tame", rep.tame)) if r]
        witness = "" if v.witness_order is None else " < ".join(g.format(i) for i in v.witness_order.sequence)
        print(f"{path.stem:<16}{g.s:>3}  {str(v.is_lyubeznik):<7}{str(w.is_lyubeznik):<7}{v.certificate:<26}"
              f"{','.join(tags) or '-'}  {witness}")


if __name__ == "__main__":
    main()
