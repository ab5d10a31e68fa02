from itertools import combinations

import pytest
from hypothesis import given

from lyubeznik.core import ArgumentError, CapacityError, bits, divides, minimalize
from lyubeznik.covers import (
    absolutely_inner_points,
    all_covers,
    all_e_minimal_covers,
    c_inner_points,
    classify_points,
    complete_cover,
    complete_covers,
    cover_masks,
    e_minimal_covers,
    is_cover,
    m_minimal_complete_covers,
    m_minimal_cover_multidegrees,
    non_inner_mask,
    out_sets,
    sole_attainers,
)
from conftest import by_text, ideals, load, mask


# independent brute-force oracles over plain exponent tuples

def _lcm(vs, n):
    return tuple(max((v[k] for v in vs), default=0) for k in range(n))


def brute_covers(gens):
    n = len(gens[0])
    found = []
    for r in range(2, len(gens) + 1):
        for c in combinations(range(len(gens)), r):
            for u in c:
                if divides(gens[u], _lcm([gens[i] for i in c if i != u], n)):
                    found.append(c)
                    break
    return found


def brute_m_minimal(gens):
    n = len(gens[0])
    degs = {_lcm([gens[i] for i in c], n) for c in brute_covers(gens)}
    return {m for m in degs if not any(o != m and divides(o, m) for o in degs)}


def brute_classify(gens, c):
    n = len(gens[0])
    top = _lcm([gens[i] for i in c], n)
    attaining = [set(d) for r in range(1, len(c) + 1) for d in combinations(c, r)
                 if _lcm([gens[i] for i in d], n) == top]
    osets = [d for d in attaining if not any(e < d for e in attaining)]
    out = set(c).intersection(*osets)
    inner = set(c) - set().union(*osets)
    return out, inner, set(c) - out - inner


FIVE = "xy_five"


def test_is_cover_examples():
    g = load(FIVE)
    assert is_cover(g, mask(g, "x^4", "y^4", "x^2y^2"), by_text(g, "x^2y^2")[0])
    for u in range(g.s):
        assert not is_cover(g, 1 << u, u)
    g = load("chain5")
    assert is_cover(g, mask(g, "x^3", "x^2y", "y^2z"), by_text(g, "x^2y")[0])
    with pytest.raises(ArgumentError):
        is_cover(g, 0b1, 1)


def test_e_minimal_covers_examples():
    g = load("chain5")
    [u] = by_text(g, "x^2y")
    got = {c.members for c in e_minimal_covers(g, u)}
    assert got == {mask(g, "x^3", "x^2y", "y^2z"), mask(g, "x^3", "x^2y", "y^3")}
    g = load("no_cover")
    assert all(e_minimal_covers(g, u) == [] for u in range(g.s))


def test_e_minimal_covers_of_x2y2():
    g = load(FIVE)
    [u] = by_text(g, "x^2y^2")
    got = {c.members for c in e_minimal_covers(g, u)}
    pairs = [("x^4", "y^4"), ("x^3y", "xy^3"), ("x^4", "xy^3"), ("x^3y", "y^4")]
    assert got == {mask(g, a, b, "x^2y^2") for a, b in pairs}


def test_all_covers_examples():
    assert list(all_covers(load("no_cover"))) == []
    tri = load("triangle")
    covers = list(all_covers(tri))
    assert len(covers) == 3
    assert {c.members for c in covers} == {tri.full}
    # frozen from the brute-force enumeration below
    g = load(FIVE)
    assert len(list(all_covers(g))) == 23
    assert len(cover_masks(g)) == len(brute_covers(g.gens)) == 16


def test_all_covers_capacity():
    g = minimalize([tuple(int(i == k) for k in range(16)) for i in range(16)])
    with pytest.raises(CapacityError):
        next(all_covers(g))
    assert next(all_covers(g, limit=16), None) is None


def test_complete_cover_examples():
    g = load(FIVE)
    assert complete_cover(g, mask(g, "x^3y", "xy^3")) == mask(g, "x^3y", "xy^3", "x^2y^2")
    assert complete_cover(g, g.full) == g.full
    assert all(complete_cover(g, 1 << u) == 1 << u for u in range(g.s))


def test_m_minimal_multidegrees_examples():
    assert set(m_minimal_cover_multidegrees(load(FIVE))) == {(3, 3), (4, 2), (2, 4)}
    assert set(m_minimal_cover_multidegrees(load("chain5"))) == {(3, 2, 1), (3, 3, 0), (0, 3, 3)}
    assert m_minimal_complete_covers(load("no_cover")) == []


def test_m_minimal_complete_covers_two_m_covers7():
    g = load("two_m_covers7")
    got = {c for c, _ in m_minimal_complete_covers(g)}
    assert got == {mask(g, "x3^2 x4^2", "x3^2 x5^2", "x3 x4 x5"), mask(g, "x1^3 x3^3", "x1^4", "x3^4")}


def test_m_minimal_complete_covers_conflict5():
    g = load("conflict5")
    got = {c for c, _ in m_minimal_complete_covers(g)}
    assert mask(g, "x^3", "x^2y", "yz^2") in got
    assert mask(g, "x^2y", "yz^2", "z^3") in got


def test_m_minimal_complete_covers_m_cone7():
    g = load("m_cone7")
    got = {m for _, m in m_minimal_complete_covers(g)}
    # x1^3 x2^2 x3^3 x6^3 and x3^2 x4^2 x5^2
    assert got == {(3, 2, 3, 0, 0, 3), (0, 0, 2, 2, 2, 0)}


def test_out_sets_examples():
    tri = load("triangle")
    assert sorted(out_sets(tri, tri.full)) == sorted(m for m in range(8) if bin(m).count("1") == 2)
    g = load("conflict5")
    c = mask(g, "x^3", "x^2y", "yz^2")
    assert out_sets(g, c) == [mask(g, "x^3", "yz^2")]
    assert out_sets(g, 0b100) == [0b100]
    with pytest.raises(ArgumentError):
        out_sets(g, 0)


def test_classify_points_examples():
    tri = load("triangle")
    p = classify_points(tri, tri.full)
    assert (p.out, p.inner, p.boundary, p.exchangeable) == (0, 0, tri.full, tri.full)
    g = load("conflict5")
    p = classify_points(g, mask(g, "x^3", "x^2y", "yz^2"))
    assert p.out == mask(g, "x^3", "yz^2")
    assert p.inner == mask(g, "x^2y")
    g = load("chain5")
    assert classify_points(g, g.full).out == mask(g, "x^3", "y^3", "z^3")


def test_exchangeable_requires_boundary_only_for_covers():
    # every member of a lone generator is vacuously exchangeable
    g = load("chain5")
    p = classify_points(g, 0b1)
    assert p.exchangeable_outside_boundary == 0b1


@given(ideals(max_s=6))
def test_classification_partitions_and_matches_brute_force(g):
    for c in range(1, g.full + 1):
        p = classify_points(g, c)
        assert p.out | p.inner | p.boundary == c
        assert not (p.out & p.inner or p.out & p.boundary or p.inner & p.boundary)
        for d in p.out_sets:
            assert g.lcm(d) == g.lcm(c)
        out, inner, boundary = brute_classify(g.gens, bits(c))
        assert (set(bits(p.out)), set(bits(p.inner)), set(bits(p.boundary))) == (out, inner, boundary)


@given(ideals(max_s=6))
def test_exchangeable_inside_boundary_for_covers(g):
    for c in cover_masks(g):
        assert classify_points(g, c).exchangeable_outside_boundary == 0


@given(ideals(max_s=7))
def test_fast_tests_match_enumeration(g):
    for c in range(1, g.full + 1):
        p = classify_points(g, c)
        assert non_inner_mask(g, c) == c & ~p.inner
        assert sole_attainers(g, c) == p.out


@given(ideals(max_s=6))
def test_e_minimal_covers_are_minimal(g):
    for cov in all_e_minimal_covers(g):
        assert is_cover(g, cov.members, cov.covered)
        for v in bits(cov.members):
            if v != cov.covered:
                assert not is_cover(g, cov.members & ~(1 << v), cov.covered)


@given(ideals(max_s=6))
def test_complete_cover_idempotent(g):
    for c in cover_masks(g):
        cc = complete_cover(g, c)
        assert complete_cover(g, cc) == cc
        assert g.lcm(cc) == g.lcm(c)


@given(ideals(max_s=8, max_exp=3))
def test_m_minimal_equals_brute_force(g):
    assert set(m_minimal_cover_multidegrees(g)) == brute_m_minimal(g.gens)


@given(ideals(max_s=6))
def test_no_cover_multidegree_below_m_minimal(g):
    degs = [g.lcm(c) for c in cover_masks(g)]
    for _, m in m_minimal_complete_covers(g):
        assert not any(d != m and divides(d, m) for d in degs)


def test_absolutely_inner_examples():
    assert absolutely_inner_points(load("no_cover")) == 0
    g = load("squares4_xyzt")
    assert absolutely_inner_points(g) == mask(g, "xyzt")
    assert absolutely_inner_points(load("squares4")) == 0


def test_xyzt6_xyzt_is_an_out_point_of_some_complete_cover():
    # xyzt alone attains the z-exponent of this cover's multidegree x^4y^4zt
    g = load("xyzt6")
    c = mask(g, "x^4y^4", "x^2y^2t", "xyzt")
    assert c in complete_covers(g)
    assert classify_points(g, c).out == mask(g, "x^4y^4", "xyzt")
    assert absolutely_inner_points(g) == 0


@given(ideals(max_s=7))
def test_one_non_out_point_is_absolutely_inner(g):
    non_out = g.full & ~sole_attainers(g)
    if bin(non_out).count("1") == 1 and cover_masks(g):
        assert absolutely_inner_points(g) == non_out


def test_c_inner_examples():
    g = load("m_cone7")
    assert c_inner_points(g) == mask(g, "x1 x2 x6", "x3 x4 x5")
    assert c_inner_points(load("triangle")) == 0
    assert c_inner_points(load("no_cover")) == 0


def test_c_inner_over_all_covers_is_stricter():
    g = load("m_cone7")
    # x1x2x6 is the only member attaining x1 here, so it is an out point
    c = mask(g, "x1 x2 x6", "x2^3 x4^3 x5^3", "x3^2 x4^2", "x3^2 x5^2")
    assert c in cover_masks(g)
    assert classify_points(g, c).out & mask(g, "x1 x2 x6")
    assert c_inner_points(g, over_all_covers=True) == 0


@given(ideals(max_s=6))
def test_all_cover_c_inner_is_a_subset(g):
    assert c_inner_points(g, over_all_covers=True) & ~c_inner_points(g) == 0
