import pytest

from lyubeznik.core import ArgumentError, CapacityError
from lyubeznik.fuzz import random_ideal, run_fuzz, trial_ideal


def test_random_ideal_examples():
    assert random_ideal(1, 1, 1, seed=123).gens == ((1,),)
    with pytest.raises(CapacityError):
        random_ideal(10, 1, 3, seed=0)
    with pytest.raises(ArgumentError):
        random_ideal(0, 2, 2, seed=0)


def test_random_ideal_seed7_frozen():
    g = random_ideal(5, 3, 4, seed=7)
    assert [g.format(i) for i in range(g.s)] == ["x^3*z", "x^2*y*z^3", "x*y^4", "y^4*z", "z^4"]


def test_random_ideal_deterministic():
    assert random_ideal(6, 4, 4, seed=11) == random_ideal(6, 4, 4, seed=11)
    assert trial_ideal(5) == trial_ideal(5)


def test_small_fuzz_run_hard_properties():
    report = run_fuzz(20, seed=9)
    assert report.trials == 20
    for key in "abdef":
        assert report.tallies[key].failures == []
        assert report.tallies[key].checked > 0
