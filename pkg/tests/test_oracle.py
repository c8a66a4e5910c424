"""Oracle behavior: enumeration, exact coverage, chambers, min guards."""

import itertools
import random
from fractions import Fraction

import pytest

from uniguard.geom import (
    PointSet,
    PolygonCycle,
    is_simple,
    monotone_polygonalization,
    orient,
    point_in_polygon,
    sees,
)
from uniguard.oracle import (
    BudgetExceeded,
    Chamber,
    all_chambers,
    complete_polygonalization,
    coverage,
    coverage_fast_sufficient,
    crosscheck_registry,
    enumerate_polygonalizations,
    find_chambers,
    is_universal,
    min_k_universal_guards,
    min_universal_guards,
)

L_SHAPE = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def _count(ps):
    return sum(1 for _ in enumerate_polygonalizations(ps))


def test_enumerate_triangle():
    ps = PointSet([(0, 0), (3, 0), (1, 2)])
    polys = list(enumerate_polygonalizations(ps))
    assert len(polys) == 1
    assert polys[0].order[0] == 0


def test_enumerate_convex_positions_unique():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    assert _count(ps) == 1


def test_enumerate_triangle_plus_interior():
    ps = PointSet([(0, 0), (6, 0), (0, 6), (1, 1)])
    polys = list(enumerate_polygonalizations(ps))
    assert len(polys) == 3
    for P in polys:
        assert is_simple(ps, P)


def test_enumerate_budget_refusal():
    ps = PointSet([(i, i * i) for i in range(13)])
    with pytest.raises(BudgetExceeded) as err:
        enumerate_polygonalizations(ps)
    assert err.value.estimate > 10 ** 8


def test_enumerate_budget_env(monkeypatch):
    monkeypatch.setenv("UNIGUARD_BUDGET", "5")
    ps = PointSet([(0, 0), (1, 0), (2, 1), (1, 3), (0, 2), (1, 1)])
    with pytest.raises(BudgetExceeded):
        enumerate_polygonalizations(ps)
    monkeypatch.delenv("UNIGUARD_BUDGET")
    assert _count(ps) >= 1


def test_enumeration_count_rigid_motion_invariant():
    pts = [(0, 0), (4, 0), (3, 3), (1, 4), (2, 2), (3, 1)]
    base = _count(PointSet(pts))
    rotated = PointSet([(-y, x) for x, y in pts])
    mirrored = PointSet([(-x, y) for x, y in pts])
    shifted = PointSet([(x + 7, y - 11) for x, y in pts])
    assert _count(rotated) == base
    assert _count(mirrored) == base
    assert _count(shifted) == base


def test_coverage_convex_single_guard():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    P = PolygonCycle(ps, range(5))
    for g in range(5):
        rep = coverage(P, {g})
        assert rep.covered
        assert rep.uncovered_witness is None
        assert rep.faces_per_guard[g] >= 1


def test_coverage_lshape_pocket():
    ps = PointSet(L_SHAPE)
    P = PolygonCycle(ps, range(6))
    rep = coverage(P, {1})  # guard at (2,0); pocket above the x+y=2 window
    assert not rep.covered
    wx, wy = rep.uncovered_witness
    assert point_in_polygon(P, (wx, wy)) == "inside"
    assert wx + wy > 2
    assert not sees(P, ps.point(1), (wx, wy))


def test_coverage_lshape_reflex_guard_covers():
    ps = PointSet(L_SHAPE)
    P = PolygonCycle(ps, range(6))
    assert coverage(P, {3}).covered


def test_coverage_all_guarded_random():
    rng = random.Random(101)
    for _ in range(12):
        pts = set()
        while len(pts) < 8:
            pts.add((rng.randint(0, 9), rng.randint(0, 9)))
        ps = PointSet(sorted(pts))
        try:
            P = monotone_polygonalization(ps)
        except ValueError:
            continue
        assert coverage(P, set(range(8))).covered


def test_fast_sufficient_fan_and_empty():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    P = PolygonCycle(ps, range(5))
    assert coverage_fast_sufficient(P, {0}) == "covered"
    assert coverage_fast_sufficient(P, set()) == "unknown"


def test_fast_sufficient_never_contradicts_exact():
    rng = random.Random(202)
    agree = 0
    for _ in range(25):
        pts = set()
        while len(pts) < 7:
            pts.add((rng.randint(0, 8), rng.randint(0, 8)))
        ps = PointSet(sorted(pts))
        try:
            P = monotone_polygonalization(ps)
        except ValueError:
            continue
        guards = {g for g in range(7) if rng.random() < 0.5}
        if coverage_fast_sufficient(P, guards) == "covered":
            assert coverage(P, guards).covered
            agree += 1
    assert agree > 0


def test_is_universal_convex_single_guard():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    rep = is_universal(ps, {2})
    assert rep.ok
    assert rep.checked == 1


def test_is_universal_empty_guards_witness():
    ps = PointSet([(0, 0), (6, 0), (0, 6), (1, 1)])
    rep = is_universal(ps, set())
    assert not rep.ok
    assert rep.witness_polygon is not None
    assert rep.witness_point is not None
    assert point_in_polygon(rep.witness_polygon, rep.witness_point) == "inside"


def _brute_chambers(ps, guarded):
    """Oracle twin: direct condition checks over all ordered 4-tuples."""
    out = []
    n = len(ps)
    pts = [ps.point(i) for i in range(n)]
    for p1, p2, p3, p4 in itertools.permutations(range(n), 4):
        if p2 in guarded or p3 in guarded or p4 in guarded:
            continue
        s1 = orient(pts[p3], pts[p4], pts[p1])
        s2 = orient(pts[p3], pts[p4], pts[p2])
        if s1 == 0 or s2 == 0 or s1 == s2:
            continue
        t3 = orient(pts[p1], pts[p2], pts[p3])
        t4 = orient(pts[p1], pts[p2], pts[p4])
        if t3 == 0 or t4 == 0 or t3 != t4:
            continue
        cyc = [p1, p2, p3, p4]
        if not is_simple(ps, cyc):
            continue
        sub = PointSet([pts[v] for v in cyc])
        Q = PolygonCycle(sub, range(4))
        if any(point_in_polygon(Q, pts[v]) == "inside"
               for v in range(n) if v not in cyc):
            continue
        out.append((p1, p2, p3, p4))
    return out


def test_find_chambers_matches_brute_force():
    rng = random.Random(303)
    for trial in range(10):
        pts = set()
        while len(pts) < 7:
            pts.add((rng.randint(0, 9), rng.randint(0, 9)))
        ps = PointSet(sorted(pts))
        guarded = {g for g in range(7) if rng.random() < 0.4}
        got = {(c.p1, c.p2, c.p3, c.p4) for c in find_chambers(ps, guarded)}
        want = set(_brute_chambers(ps, guarded))
        assert got == want


def test_find_chambers_all_guarded_empty():
    ps = PointSet([(0, 0), (5, 0), (5, 5), (0, 5), (2, 1), (3, 4)])
    assert find_chambers(ps, set(range(6))) == []


def test_chamber_accessors():
    c = Chamber(0, 1, 2, 3)
    assert c.chain_edges() == [(0, 1), (1, 2), (2, 3)]
    assert c.is_empty_for({0})
    assert not c.is_empty_for({1})


def test_complete_polygonalization_convex_hull_edge():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    P = complete_polygonalization(ps, [(1, 2)])
    assert P is not None
    assert frozenset((1, 2)) in {frozenset(e) for e in P.edges()}
    assert is_simple(ps, P)


def test_complete_polygonalization_crossing_required_edges():
    ps = PointSet([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])
    assert complete_polygonalization(ps, [(0, 2), (1, 3)]) is None


def test_complete_polygonalization_chain_embedding():
    ps = PointSet([(0, 0), (6, 0), (6, 6), (0, 6), (2, 2), (4, 3)])
    P = complete_polygonalization(ps, [(0, 4), (4, 5)])
    assert P is not None
    edges = {frozenset(e) for e in P.edges()}
    assert frozenset((0, 4)) in edges and frozenset((4, 5)) in edges
    assert is_simple(ps, P)


def test_complete_polygonalization_full_cycle_given():
    ps = PointSet([(0, 0), (4, 0), (4, 4), (0, 4)])
    cyc = [(0, 1), (1, 2), (2, 3), (3, 0)]
    P = complete_polygonalization(ps, cyc)
    assert P is not None
    bow = [(0, 2), (2, 1), (1, 3), (3, 0)]
    assert complete_polygonalization(ps, bow) is None


def _naive_min_universal(ps):
    polys = list(enumerate_polygonalizations(ps))
    n = len(ps)
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            if all(coverage(P, set(combo)).covered for P in polys):
                return size, set(combo)
    return n, set(range(n))


def test_min_universal_convex_six():
    ps = PointSet([(0, 0), (4, 0), (6, 3), (4, 6), (0, 6), (-2, 3)])
    size, guards = min_universal_guards(ps)
    assert size == 1
    assert len(guards) == 1


def test_min_universal_triangle_plus_interior():
    ps = PointSet([(0, 0), (6, 0), (0, 6), (1, 1)])
    size, guards = min_universal_guards(ps)
    nsize, _ = _naive_min_universal(ps)
    assert size == nsize
    assert is_universal(ps, guards).ok


def test_min_universal_2x3_grid():
    ps = PointSet([(x, y) for y in range(3) for x in range(2)])
    size, guards = min_universal_guards(ps)
    assert size <= 3
    nsize, _ = _naive_min_universal(ps)
    assert size == nsize
    assert is_universal(ps, guards).ok


def test_min_k_universal_single_convex():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    P = PolygonCycle(ps, range(5))
    size, guards = min_k_universal_guards([P])
    assert size == 1


def test_crosscheck_registry_clean():
    reg = crosscheck_registry()
    assert reg["mismatches"] == []
