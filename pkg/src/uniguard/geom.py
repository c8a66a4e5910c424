"""Exact planar geometry: points, convex layers, polygon cycles, visibility.

All coordinates are exact rationals. Point sets internally rescale to a
common integer grid so the predicate kernels run on plain ints; witness
points coming back out are Fractions in the original coordinate frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from uniguard import _kernels as K

Scalar = Fraction


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact scalar: {v!r}")


class PointSet:
    """Ordered list of distinct exact points, indexed 0..n-1.

    xs/ys hold integer coordinates on a common grid; scale maps back to the
    original rationals: original_i = (xs[i]/scale, ys[i]/scale).
    """

    __slots__ = ("xs", "ys", "scale")

    def __init__(self, points):
        pts = [(_to_fraction(x), _to_fraction(y)) for x, y in points]
        scale = 1
        for x, y in pts:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
            scale = scale * y.denominator // math.gcd(scale, y.denominator)
        self.scale = scale
        self.xs = [int(x * scale) for x, y in pts]
        self.ys = [int(y * scale) for x, y in pts]
        if len(set(zip(self.xs, self.ys))) != len(self.xs):
            raise ValueError("point set contains duplicate points")

    def __len__(self):
        return len(self.xs)

    @property
    def n(self):
        return len(self.xs)

    def point(self, i):
        """Original rational coordinates of point i."""
        return (Fraction(self.xs[i], self.scale), Fraction(self.ys[i], self.scale))

    def ipoint(self, i):
        """Integer grid coordinates of point i."""
        return (self.xs[i], self.ys[i])

    def points(self):
        return [self.point(i) for i in range(len(self))]

    def __eq__(self, other):
        return (isinstance(other, PointSet)
                and self.points() == other.points())

    def __repr__(self):
        return f"PointSet(n={len(self)}, scale={self.scale})"


@dataclass(frozen=True)
class PolygonCycle:
    """Cyclic vertex order over a PointSet; every index appears exactly once."""

    ps: PointSet
    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.ps))):
            raise ValueError("cycle must visit every point index exactly once")

    def __len__(self):
        return len(self.order)

    def edges(self):
        o = self.order
        return [(o[i], o[(i + 1) % len(o)]) for i in range(len(o))]


@dataclass(frozen=True)
class ShellDecomposition:
    """Convex layers, innermost first; each shell a CCW index list."""

    shells: tuple

    def __post_init__(self):
        object.__setattr__(self, "shells", tuple(tuple(s) for s in self.shells))

    @property
    def m(self):
        return len(self.shells)

    def shell_of(self, i):
        for level, shell in enumerate(self.shells):
            if i in shell:
                return level + 1
        raise KeyError(i)

    def level_map(self):
        lv = {}
        for level, shell in enumerate(self.shells):
            for i in shell:
                lv[i] = level + 1
        return lv


def orient(p, q, r):
    """+1 if r is strictly left of directed line pq, 0 collinear, -1 right."""
    px, py = _to_fraction(p[0]), _to_fraction(p[1])
    qx, qy = _to_fraction(q[0]), _to_fraction(q[1])
    rx, ry = _to_fraction(r[0]), _to_fraction(r[1])
    d = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    return (d > 0) - (d < 0)


def _hull_indices(ps: PointSet, idxs):
    """CCW convex hull of the given indices, keeping collinear boundary points.

    Returns the boundary cycle; for fully collinear input returns the points
    sorted along the line (degenerate hull).
    """
    xs, ys = ps.xs, ps.ys
    pts = sorted(idxs, key=lambda i: (xs[i], ys[i]))
    if len(pts) <= 2:
        return list(pts)
    a, b = pts[0], pts[-1]
    if all(K.orient(xs[a], ys[a], xs[b], ys[b], xs[i], ys[i]) == 0 for i in pts):
        return list(pts)

    def chain(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and K.orient(
                    xs[out[-2]], ys[out[-2]], xs[out[-1]], ys[out[-1]],
                    xs[i], ys[i]) < 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def convex_hull(ps: PointSet, idxs=None):
    """CCW hull cycle of the whole set (or a subset of indices)."""
    if idxs is None:
        idxs = range(len(ps))
    return _hull_indices(ps, list(idxs))


def convex_layers(ps: PointSet) -> ShellDecomposition:
    """Onion decomposition by repeated hull peeling; mid-edge collinear points
    belong to the shell whose hull boundary they lie on."""
    remaining = list(range(len(ps)))
    outer_first = []
    while remaining:
        hull = _hull_indices(ps, remaining)
        outer_first.append(hull)
        hull_set = set(hull)
        remaining = [i for i in remaining if i not in hull_set]
    return ShellDecomposition(tuple(reversed(outer_first)))


def monotone_polygonalization(ps: PointSet) -> PolygonCycle:
    """A canonical simple polygonalization: x-monotone lower/upper chains.

    Points collinear with the extreme pair go to the lower chain as straight
    vertices. Fails only if all points are collinear.
    """
    n = len(ps)
    if n < 3:
        raise ValueError("need at least 3 points")
    xs, ys = ps.xs, ps.ys
    idx = sorted(range(n), key=lambda i: (xs[i], ys[i]))
    a, b = idx[0], idx[-1]
    lower, upper, on_line = [], [], []
    for i in idx[1:-1]:
        side = K.orient(xs[a], ys[a], xs[b], ys[b], xs[i], ys[i])
        if side > 0:
            upper.append(i)
        elif side < 0:
            lower.append(i)
        else:
            on_line.append(i)
    if not lower and not upper:
        raise ValueError("all points are collinear")
    # Collinear points ride along whichever chain faces a nonempty opposite
    # chain, so they never sit on the closing edge.
    if not upper:
        upper = on_line
    else:
        lower = sorted(lower + on_line, key=lambda i: (xs[i], ys[i]))
    order = [a] + lower + [b] + list(reversed(upper))
    return PolygonCycle(ps, tuple(order))


def is_simple(ps: PointSet, cycle) -> bool:
    order = list(cycle.order if isinstance(cycle, PolygonCycle) else cycle)
    return K.cycle_is_simple(ps.xs, ps.ys, order)


def signed_area2(ps: PointSet, order) -> int:
    """Twice the signed area in the integer grid frame (positive if CCW)."""
    s = 0
    xs, ys = ps.xs, ps.ys
    for i in range(len(order)):
        a, b = order[i], order[(i + 1) % len(order)]
        s += xs[a] * ys[b] - xs[b] * ys[a]
    return s


def area(P: PolygonCycle) -> Fraction:
    """Exact area in original coordinates."""
    return Fraction(abs(signed_area2(P.ps, P.order)), 2 * P.ps.scale * P.ps.scale)


def ccw_order(P: PolygonCycle) -> tuple:
    """Vertex order normalized counterclockwise, anchored at its first entry."""
    o = list(P.order)
    if signed_area2(P.ps, o) < 0:
        o = [o[0]] + list(reversed(o[1:]))
    return tuple(o)


def _grid_frame(ps: PointSet, qpoints):
    """Common integer frame for the set plus extra rational points (original
    coordinates). Returns (XS, YS, scaled extra points)."""
    d = 1
    sc = ps.scale
    qs = []
    for qx, qy in qpoints:
        qx, qy = _to_fraction(qx) * sc, _to_fraction(qy) * sc
        qs.append((qx, qy))
        d = d * qx.denominator // math.gcd(d, qx.denominator)
        d = d * qy.denominator // math.gcd(d, qy.denominator)
    if d == 1:
        return ps.xs, ps.ys, [(int(qx), int(qy)) for qx, qy in qs]
    XS = [x * d for x in ps.xs]
    YS = [y * d for y in ps.ys]
    return XS, YS, [(int(qx * d), int(qy * d)) for qx, qy in qs]


def point_in_polygon(P: PolygonCycle, q) -> str:
    """'inside' / 'boundary' / 'outside' for a rational point q, exactly."""
    XS, YS, (qi,) = _grid_frame(P.ps, [q])
    code = K.point_in_polygon(XS, YS, list(P.order), qi[0], qi[1])
    return ("outside", "inside", "boundary")[code]


def sees(P: PolygonCycle, a, b) -> bool:
    """True iff the closed segment ab stays inside the closed polygon.

    a and b are rational points (original frame), typically vertices or
    witness points already known to lie in P. Grazing along the boundary
    counts as seeing.
    """
    ax, ay = _to_fraction(a[0]), _to_fraction(a[1])
    bx, by = _to_fraction(b[0]), _to_fraction(b[1])
    if (ax, ay) == (bx, by):
        return point_in_polygon(P, a) != "outside"
    XS, YS, (ai, bi) = _grid_frame(P.ps, [(ax, ay), (bx, by)])
    AX, AY = ai
    BX, BY = bi
    order = list(P.order)
    n = len(order)
    dx, dy = BX - AX, BY - AY

    ts = {Fraction(0), Fraction(1)}
    for i in range(n):
        u, w = order[i], order[(i + 1) % n]
        UX, UY, WX, WY = XS[u], YS[u], XS[w], YS[w]
        if K.segs_cross_properly(AX, AY, BX, BY, UX, UY, WX, WY):
            return False
        if not K.segs_intersect(AX, AY, BX, BY, UX, UY, WX, WY):
            continue
        ex, ey = WX - UX, WY - UY
        denom = dx * ey - dy * ex
        if denom != 0:
            t = Fraction((UX - AX) * ey - (UY - AY) * ex, denom)
            if 0 <= t <= 1:
                ts.add(t)
        else:
            # Collinear contact: project the edge endpoints onto ab.
            for PX, PY in ((UX, UY), (WX, WY)):
                if K.on_segment(AX, AY, BX, BY, PX, PY):
                    if dx != 0:
                        ts.add(Fraction(PX - AX, dx))
                    else:
                        ts.add(Fraction(PY - AY, dy))

    cuts = sorted(ts)
    for t0, t1 in zip(cuts, cuts[1:]):
        tm = (t0 + t1) / 2
        mx = Fraction(AX) + tm * dx
        my = Fraction(AY) + tm * dy
        dq = (mx.denominator * my.denominator
              // math.gcd(mx.denominator, my.denominator))
        code = K.point_in_polygon([x * dq for x in XS], [y * dq for y in YS],
                                  order, int(mx * dq), int(my * dq))
        if code == 0:
            return False
    return True


def sees_indices(P: PolygonCycle, i, j) -> bool:
    return sees(P, P.ps.point(i), P.ps.point(j))


def _diag_overlaps_incident_edge(xs, ys, order, pos, j):
    n = len(order)
    i = order[pos]
    for nb in (order[pos - 1], order[(pos + 1) % n]):
        if nb == j:
            continue
        if K.orient(xs[nb], ys[nb], xs[i], ys[i], xs[j], ys[j]) == 0:
            dot = (xs[nb] - xs[i]) * (xs[j] - xs[i]) + (ys[nb] - ys[i]) * (ys[j] - ys[i])
            if dot > 0:
                return True
    return False


def valid_diagonal(ps: PointSet, order, pi, pj) -> bool:
    """True iff the chord between cycle positions pi and pj is an interior
    diagonal of the simple polygon given by order (or one of its edges)."""
    n = len(order)
    if pi == pj:
        return False
    if (pi + 1) % n == pj or (pj + 1) % n == pi:
        return True
    i, j = order[pi], order[pj]
    xs, ys = ps.xs, ps.ys
    for p in range(n):
        a, b = order[p], order[(p + 1) % n]
        if a in (i, j) or b in (i, j):
            continue
        if K.segs_intersect(xs[a], ys[a], xs[b], ys[b], xs[i], ys[i], xs[j], ys[j]):
            return False
    if _diag_overlaps_incident_edge(xs, ys, order, pi, j):
        return False
    if _diag_overlaps_incident_edge(xs, ys, order, pj, i):
        return False
    # Touches the boundary only at its endpoints; inside iff its midpoint is.
    code = K.point_in_polygon([2 * x for x in xs], [2 * y for y in ys],
                              list(order), xs[i] + xs[j], ys[i] + ys[j])
    return code != 0


def _strictly_inside_or_on_triangle(xs, ys, a, b, c, p):
    o1 = K.orient(xs[a], ys[a], xs[b], ys[b], xs[p], ys[p])
    o2 = K.orient(xs[b], ys[b], xs[c], ys[c], xs[p], ys[p])
    o3 = K.orient(xs[c], ys[c], xs[a], ys[a], xs[p], ys[p])
    if o1 >= 0 and o2 >= 0 and o3 >= 0:
        return True
    if o1 <= 0 and o2 <= 0 and o3 <= 0:
        return True
    return False


def triangulate(P: PolygonCycle):
    """Exact triangulation; returns index triples, no degenerate triangles.

    Ear clipping with a diagonal-split fallback so collinear (straight angle)
    vertices and blocked ears are handled robustly.
    """
    if not is_simple(P.ps, P):
        raise ValueError("polygon is not simple")
    return triangulate_subpolygon(P.ps, list(ccw_order(P)))


def triangulate_subpolygon(ps: PointSet, order):
    """Triangulate a simple CCW subpolygon given as an index cycle."""
    xs, ys = ps.xs, ps.ys
    out = []
    stack = [list(order)]
    while stack:
        cyc = stack.pop()
        n = len(cyc)
        if n < 3:
            continue
        if n == 3:
            out.append(tuple(cyc))
            continue
        clipped = False
        for pos in range(n):
            a, b, c = cyc[pos - 1], cyc[pos], cyc[(pos + 1) % n]
            if K.orient(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]) <= 0:
                continue
            blockers = [v for v in cyc
                        if v not in (a, b, c)
                        and _strictly_inside_or_on_triangle(xs, ys, a, b, c, v)]
            if not blockers:
                out.append((a, b, c))
                nxt = list(cyc)
                del nxt[pos]
                stack.append(nxt)
                clipped = True
                break
            # Split toward the blocker farthest from the candidate diagonal,
            # nearest to b on ties; (b, blocker) is then a valid diagonal.
            def badness(v):
                d = abs((xs[c] - xs[a]) * (ys[v] - ys[a])
                        - (ys[c] - ys[a]) * (xs[v] - xs[a]))
                near = -((xs[v] - xs[b]) ** 2 + (ys[v] - ys[b]) ** 2)
                return (d, near)
            q = max(blockers, key=badness)
            pb, pq = cyc.index(b), cyc.index(q)
            lo, hi = min(pb, pq), max(pb, pq)
            stack.append(cyc[lo:hi + 1])
            stack.append(cyc[hi:] + cyc[:lo + 1])
            clipped = True
            break
        if not clipped:
            raise ValueError("no convex vertex found; polygon not simple?")
    return [t for t in out
            if K.orient(xs[t[0]], ys[t[0]], xs[t[1]], ys[t[1]], xs[t[2]], ys[t[2]]) != 0]
