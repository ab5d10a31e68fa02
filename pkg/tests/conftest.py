import os
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lyubeznik.core import minimalize
from lyubeznik.ideal_io import parse_ideal

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def load(name):
    return parse_ideal((FIXTURES / f"{name}.txt").read_text()).generator_set()


def by_text(g, *monos):
    """Canonical indices of the named generators."""
    from lyubeznik.ideal_io import parse_monomial
    return [g.gens.index(parse_monomial(g, m)) for m in monos]


def mask(g, *monos):
    return sum(1 << i for i in by_text(g, *monos))


@st.composite
def ideals(draw, max_s=6, max_n=4, max_exp=4, min_s=1):
    """Minimal generating sets built from random incomparable vectors."""
    n = draw(st.integers(1, max_n))
    vec = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    raw = draw(st.lists(vec, min_size=min_s, max_size=max_s, unique=True))
    return minimalize(raw)


# acceptance lines, printed once at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
