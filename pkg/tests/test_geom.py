"""Core geometry: hulls, layers, simplicity, containment, visibility."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uniguard.geom import (
    PointSet,
    PolygonCycle,
    area,
    convex_hull,
    convex_layers,
    is_simple,
    monotone_polygonalization,
    orient,
    point_in_polygon,
    sees,
    sees_indices,
    signed_area2,
    triangulate,
    valid_diagonal,
)

L_SHAPE = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def _lshape():
    ps = PointSet(L_SHAPE)
    return ps, PolygonCycle(ps, range(6))


def _brute_layers(ps):
    """Independent peel oracle: a point is on the hull boundary of the
    remaining set iff some line through it and another remaining point has
    everything on one closed side."""

    def on_boundary(p, rem):
        if len(rem) <= 2:
            return True
        px, py = ps.ipoint(p)
        for q in rem:
            if q == p:
                continue
            qx, qy = ps.ipoint(q)
            signs = set()
            for r in rem:
                rx, ry = ps.ipoint(r)
                d = (qx - px) * (ry - py) - (qy - py) * (rx - px)
                signs.add((d > 0) - (d < 0))
            if not (1 in signs and -1 in signs):
                return True
        return False

    remaining = set(range(len(ps)))
    outer_first = []
    while remaining:
        shell = {p for p in remaining if on_boundary(p, remaining)}
        outer_first.append(shell)
        remaining -= shell
    return list(reversed(outer_first))


def test_orient_signs_and_antisymmetry():
    a, b, c = (0, 0), (4, 0), (1, 3)
    assert orient(a, b, c) == 1
    assert orient(a, c, b) == -1
    assert orient(a, b, (8, 0)) == 0
    rng = random.Random(11)
    for _ in range(300):
        p, q, r = ((rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3))
        assert orient(p, q, r) == -orient(q, p, r) == -orient(p, r, q)


def test_pointset_rejects_duplicates():
    with pytest.raises(ValueError):
        PointSet([(0, 0), (1, 1), (0, 0)])


def test_pointset_rational_rescaling():
    ps = PointSet([(Fraction(1, 2), 0), (Fraction(1, 3), 1)])
    assert ps.scale == 6
    assert ps.point(0) == (Fraction(1, 2), Fraction(0))
    assert ps.ipoint(0) == (3, 0)


def test_hull_keeps_midedge_collinear_points():
    ps = PointSet([(0, 0), (2, 0), (1, 0), (1, 1)])
    hull = convex_hull(ps)
    assert set(hull) == {0, 1, 2, 3}
    layers = convex_layers(ps)
    assert layers.m == 1


def test_convex_layers_nested_squares():
    pts = [(0, 0), (6, 0), (6, 6), (0, 6),
           (2, 2), (4, 2), (4, 4), (2, 4),
           (3, 3)]
    ps = PointSet(pts)
    layers = convex_layers(ps)
    assert [set(s) for s in layers.shells] == [{8}, {4, 5, 6, 7}, {0, 1, 2, 3}]
    # Shells come out counterclockwise.
    assert signed_area2(ps, layers.shells[1]) > 0
    assert signed_area2(ps, layers.shells[2]) > 0


def test_convex_layers_matches_brute_peeling():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 18)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(0, 12), rng.randint(0, 12)))
        ps = PointSet(sorted(pts))
        got = [set(s) for s in convex_layers(ps).shells]
        assert got == _brute_layers(ps)


def test_is_simple_square_and_bowtie():
    ps = PointSet([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert is_simple(ps, PolygonCycle(ps, (0, 1, 2, 3)))
    assert not is_simple(ps, PolygonCycle(ps, (0, 2, 1, 3)))


def test_is_simple_allows_straight_vertices():
    # 3x3 grid snake with straight-angle vertices but no overlapping edges.
    pts = [(x, y) for y in range(3) for x in range(3)]
    ps = PointSet(pts)
    order = (0, 1, 2, 5, 4, 3, 6, 7, 8)
    assert not is_simple(ps, PolygonCycle(ps, order))  # edge 8->0 cuts through
    snake = (0, 1, 2, 5, 8, 7, 4, 3, 6)
    assert not is_simple(ps, PolygonCycle(ps, snake))  # 3->6->0 doubles back
    ok = (0, 1, 2, 5, 8, 7, 6, 4, 3)
    assert is_simple(ps, PolygonCycle(ps, ok))


def test_point_in_polygon_unit_square():
    ps = PointSet([(0, 0), (1, 0), (1, 1), (0, 1)])
    P = PolygonCycle(ps, (0, 1, 2, 3))
    assert point_in_polygon(P, (Fraction(1, 2), Fraction(1, 2))) == "inside"
    assert point_in_polygon(P, (Fraction(1, 2), 0)) == "boundary"
    assert point_in_polygon(P, (2, 2)) == "outside"
    assert point_in_polygon(P, (1, 1)) == "boundary"


def test_point_in_polygon_orientation_independent():
    ps = PointSet([(0, 0), (1, 0), (1, 1), (0, 1)])
    for order in [(0, 1, 2, 3), (3, 2, 1, 0)]:
        P = PolygonCycle(ps, order)
        assert point_in_polygon(P, (Fraction(1, 2), Fraction(1, 2))) == "inside"


def test_sees_convex_vertices():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    P = PolygonCycle(ps, range(5))
    for i in range(5):
        for j in range(5):
            assert sees_indices(P, i, j)


def test_sees_lshape_reflex_vertex_sees_all():
    ps, P = _lshape()
    for j in range(6):
        assert sees_indices(P, 3, j)
        assert sees_indices(P, j, 3)


def test_sees_lshape_notch_blocks():
    ps, P = _lshape()
    assert not sees_indices(P, 2, 4)
    assert not sees_indices(P, 4, 2)


def test_sees_adjacent_vertices_and_symmetry():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(4, 9)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(0, 9), rng.randint(0, 9)))
        ps = PointSet(sorted(pts))
        try:
            P = monotone_polygonalization(ps)
        except ValueError:
            continue
        assert is_simple(ps, P)
        order = P.order
        for k in range(n):
            assert sees_indices(P, order[k], order[(k + 1) % n])
        for _ in range(8):
            i, j = rng.randrange(n), rng.randrange(n)
            assert sees_indices(P, i, j) == sees_indices(P, j, i)


def test_sees_grazing_contact_counts():
    ps, P = _lshape()
    # (0,2)-(2,0) passes through the reflex corner (1,1), staying inside.
    assert sees(P, (0, 2), (2, 0))


def test_triangulate_convex_fan():
    ps = PointSet([(0, 0), (4, 0), (5, 3), (2, 5), (-1, 2)])
    P = PolygonCycle(ps, range(5))
    tris = triangulate(P)
    assert len(tris) == 3


def test_triangulate_lshape():
    ps, P = _lshape()
    tris = triangulate(P)
    assert len(tris) == 4
    total = sum(abs(signed_area2(ps, t)) for t in tris)
    assert Fraction(total, 2) == area(P) == 3


def test_triangulate_area_sum_random_monotone():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(4, 12)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(0, 10), rng.randint(0, 10)))
        ps = PointSet(sorted(pts))
        try:
            P = monotone_polygonalization(ps)
        except ValueError:
            continue
        tris = triangulate(P)
        total = sum(abs(signed_area2(ps, t)) for t in tris)
        assert total == abs(signed_area2(ps, P.order))
        for t in tris:
            assert abs(signed_area2(ps, t)) > 0


def test_valid_diagonal_lshape():
    ps, P = _lshape()
    order = list(P.order)
    # (0,0)-(1,1) crosses the interior; (2,1)-(1,2) leaves the polygon.
    assert valid_diagonal(ps, order, 0, 3)
    assert not valid_diagonal(ps, order, 2, 4)
    assert valid_diagonal(ps, order, 0, 1)  # an edge counts


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)),
                min_size=4, max_size=8, unique=True))
def test_monotone_polygonalization_simple(pts):
    ps = PointSet(pts)
    try:
        P = monotone_polygonalization(ps)
    except ValueError:
        return
    assert is_simple(ps, P)
    assert area(P) > 0
