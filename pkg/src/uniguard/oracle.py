"""Exact polygonalization oracle.

Enumerates every simple polygonalization of a small point set, decides
visibility coverage exactly via a segment arrangement, finds chambers,
completes constrained polygonalizations, and solves minimum (k-)universal
guard instances by brute force.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

from uniguard import _kernels as K
from uniguard.geom import (
    PointSet,
    PolygonCycle,
    ccw_order,
    point_in_polygon,
    sees,
    sees_indices,
    signed_area2,
    valid_diagonal,
)

DEFAULT_ENUM_BUDGET = 12
COMPLETE_EXHAUSTIVE_LIMIT = 14


class BudgetExceeded(Exception):
    """Raised when a brute-force operation would exceed its size budget."""

    def __init__(self, n, budget, estimate):
        self.n = n
        self.budget = budget
        self.estimate = estimate
        super().__init__(
            f"point set of size {n} exceeds the enumeration budget {budget}; "
            f"roughly {estimate} cyclic orders would need checking")


def _enum_budget(budget):
    if budget is not None:
        return budget
    env = os.environ.get("UNIGUARD_BUDGET")
    if env:
        return int(env)
    return DEFAULT_ENUM_BUDGET


class PolygonalizationStream:
    """Iterable over every simple polygonalization of a point set.

    Each polygonalization is yielded exactly once as its canonical form:
    anchored at index 0, oriented counterclockwise; rotations and
    reflections are identified. Deterministic DFS order.
    """

    def __init__(self, ps: PointSet, budget=None):
        n = len(ps)
        limit = _enum_budget(budget)
        if n < 3 or n > limit:
            estimate = math.factorial(max(n - 1, 1)) // 2
            raise BudgetExceeded(n, limit, estimate)
        self.ps = ps

    def __iter__(self):
        ps = self.ps
        xs, ys = ps.xs, ps.ys
        n = len(ps)
        chain = [0]
        used = [False] * n
        used[0] = True

        def rec():
            if len(chain) == n:
                if K.chain_can_close(xs, ys, chain):
                    if signed_area2(ps, chain) > 0:
                        yield PolygonCycle(ps, tuple(chain))
                return
            for v in range(1, n):
                if used[v]:
                    continue
                if K.chain_can_extend(xs, ys, chain, v):
                    used[v] = True
                    chain.append(v)
                    yield from rec()
                    chain.pop()
                    used[v] = False

        yield from rec()


def enumerate_polygonalizations(ps: PointSet, budget=None) -> PolygonalizationStream:
    return PolygonalizationStream(ps, budget)


@dataclass
class CoverageReport:
    covered: bool
    uncovered_witness: tuple | None
    faces_per_guard: dict


@dataclass
class UniversalityReport:
    ok: bool
    witness_polygon: PolygonCycle | None
    witness_point: tuple | None
    checked: int


def reflex_vertices(P: PolygonCycle):
    """Vertex indices with a reflex interior angle (straight angles excluded)."""
    ps = P.ps
    xs, ys = ps.xs, ps.ys
    order = ccw_order(P)
    n = len(order)
    out = []
    for i in range(n):
        a, b, c = order[i - 1], order[i], order[(i + 1) % n]
        if K.orient(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]) < 0:
            out.append(b)
    return out


def _pip_code(P: PolygonCycle, qx: Fraction, qy: Fraction) -> int:
    """point_in_polygon for a rational point in the scaled integer frame:
    0 outside, 1 inside, 2 boundary."""
    ps = P.ps
    d = qx.denominator * qy.denominator // math.gcd(qx.denominator, qy.denominator)
    return K.point_in_polygon([x * d for x in ps.xs], [y * d for y in ps.ys],
                              list(P.order), int(qx * d), int(qy * d))


def _window_segments(P: PolygonCycle, guards):
    """All window segments: for each guard g and reflex vertex r visible from
    g, the extension of ray g->r from r to its last boundary contact before
    leaving the polygon. Coordinates in the scaled integer frame."""
    ps = P.ps
    xs, ys = ps.xs, ps.ys
    order = ccw_order(P)
    n = len(order)
    reflex = reflex_vertices(P)
    windows = []
    for g in guards:
        gx, gy = xs[g], ys[g]
        for r in reflex:
            if r == g or not sees_indices(P, g, r):
                continue
            rx, ry = xs[r], ys[r]
            dx, dy = rx - gx, ry - gy
            ts = set()
            for i in range(n):
                u, w = order[i], order[(i + 1) % n]
                ux, uy, ex, ey = xs[u], ys[u], xs[w] - xs[u], ys[w] - ys[u]
                den = dx * ey - dy * ex
                if den != 0:
                    t = Fraction((ux - rx) * ey - (uy - ry) * ex, den)
                    s = Fraction((ux - rx) * dy - (uy - ry) * dx, den)
                    if t > 0 and 0 <= s <= 1:
                        ts.add(t)
                elif dx * (uy - ry) - dy * (ux - rx) == 0:
                    dd = dx * dx + dy * dy
                    for px, py in ((xs[u], ys[u]), (xs[w], ys[w])):
                        t = Fraction((px - rx) * dx + (py - ry) * dy, dd)
                        if t > 0:
                            ts.add(t)
            end = Fraction(0)
            prev = Fraction(0)
            for t in sorted(ts):
                tm = (prev + t) / 2
                if _pip_code(P, Fraction(rx) + tm * dx, Fraction(ry) + tm * dy) == 0:
                    break
                end = t
                prev = t
            if end > 0:
                windows.append(((Fraction(rx), Fraction(ry)),
                                (Fraction(rx) + end * dx, Fraction(ry) + end * dy)))
    return windows


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _angle_quadrant(dx, dy):
    if dx > 0 and dy >= 0:
        return 0
    if dx <= 0 and dy > 0:
        return 1
    if dx < 0 and dy <= 0:
        return 2
    return 3


def _direction_cmp(d1, d2):
    q1, q2 = _angle_quadrant(*d1), _angle_quadrant(*d2)
    if q1 != q2:
        return -1 if q1 < q2 else 1
    cr = _cross(d1[0], d1[1], d2[0], d2[1])
    return 0 if cr == 0 else (-1 if cr > 0 else 1)


def _arrangement_faces(segments):
    """Bounded faces of a connected segment arrangement.

    segments: list of ((x,y),(x,y)) Fraction pairs. Returns each bounded
    face as its CCW vertex walk.
    """
    cuts = [set() for _ in segments]
    dirs = []
    for (a, b) in segments:
        dirs.append((b[0] - a[0], b[1] - a[1]))
    for i, (a, b) in enumerate(segments):
        cuts[i].update((Fraction(0), Fraction(1)))
    for i in range(len(segments)):
        ai, _ = segments[i]
        di = dirs[i]
        for j in range(i + 1, len(segments)):
            aj, bj = segments[j]
            dj = dirs[j]
            den = _cross(di[0], di[1], dj[0], dj[1])
            off = (aj[0] - ai[0], aj[1] - ai[1])
            if den != 0:
                t = Fraction(_cross(off[0], off[1], dj[0], dj[1]), den)
                s = Fraction(_cross(off[0], off[1], di[0], di[1]), den)
                if 0 <= t <= 1 and 0 <= s <= 1:
                    cuts[i].add(t)
                    cuts[j].add(s)
            elif _cross(di[0], di[1], off[0], off[1]) == 0:
                dd = di[0] * di[0] + di[1] * di[1]
                for p in (aj, bj):
                    t = Fraction((p[0] - ai[0]) * di[0] + (p[1] - ai[1]) * di[1], dd)
                    if 0 <= t <= 1:
                        cuts[i].add(t)
                ee = dj[0] * dj[0] + dj[1] * dj[1]
                for p in (ai, segments[i][1]):
                    s = Fraction((p[0] - aj[0]) * dj[0] + (p[1] - aj[1]) * dj[1], ee)
                    if 0 <= s <= 1:
                        cuts[j].add(s)

    edges = set()
    for i, (a, b) in enumerate(segments):
        di = dirs[i]
        pts = [(a[0] + t * di[0], a[1] + t * di[1]) for t in sorted(cuts[i])]
        for u, v in zip(pts, pts[1:]):
            if u != v:
                edges.add((u, v) if u <= v else (v, u))

    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    cmp = functools.cmp_to_key(
        lambda p, q: _direction_cmp((p[2], p[3]), (q[2], q[3])))
    nxt = {}
    for v, nbrs in adj.items():
        decorated = sorted(
            ((w[0], w[1], w[0] - v[0], w[1] - v[1]) for w in nbrs), key=cmp)
        ordered = [(d[0], d[1]) for d in decorated]
        k = len(ordered)
        for idx, w in enumerate(ordered):
            # Face-left traversal: from edge (w -> v), continue to the
            # neighbor just clockwise of w around v.
            nxt[(w, v)] = ordered[idx - 1] if idx else ordered[k - 1]

    faces = []
    seen = set()
    for u, v in edges:
        for start in ((u, v), (v, u)):
            if start in seen:
                continue
            walk = []
            e = start
            while True:
                seen.add(e)
                walk.append(e[0])
                e = (e[1], nxt[e])
                if e == start:
                    break
            area2 = Fraction(0)
            for i in range(len(walk)):
                x1, y1 = walk[i]
                x2, y2 = walk[(i + 1) % len(walk)]
                area2 += x1 * y2 - x2 * y1
            if area2 > 0:
                faces.append(walk)
    return faces


def _face_rep_point(walk):
    """An exact interior point of a face: the centroid of one of its ears."""
    n = len(walk)
    if n == 3:
        return ((walk[0][0] + walk[1][0] + walk[2][0]) / 3,
                (walk[0][1] + walk[1][1] + walk[2][1]) / 3)
    for i in range(n):
        a, b, c = walk[i - 1], walk[i], walk[(i + 1) % n]
        if _cross(b[0] - a[0], b[1] - a[1], c[0] - b[0], c[1] - b[1]) <= 0:
            continue
        ok = True
        for p in walk:
            if p in (a, b, c):
                continue
            o1 = _cross(b[0] - a[0], b[1] - a[1], p[0] - a[0], p[1] - a[1])
            o2 = _cross(c[0] - b[0], c[1] - b[1], p[0] - b[0], p[1] - b[1])
            o3 = _cross(a[0] - c[0], a[1] - c[1], p[0] - c[0], p[1] - c[1])
            if o1 >= 0 and o2 >= 0 and o3 >= 0:
                ok = False
                break
        if ok:
            return ((a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3)
    raise ValueError("no ear found in arrangement face")


def _coverage_face_reps(P: PolygonCycle, guards):
    """Interior representative points, one per arrangement face, in the
    scaled integer frame."""
    ps = P.ps
    xs, ys = ps.xs, ps.ys
    order = ccw_order(P)
    n = len(order)
    segments = []
    for i in range(n):
        u, w = order[i], order[(i + 1) % n]
        segments.append(((Fraction(xs[u]), Fraction(ys[u])),
                         (Fraction(xs[w]), Fraction(ys[w]))))
    segments.extend(_window_segments(P, guards))
    return [_face_rep_point(walk) for walk in _arrangement_faces(segments)]


def coverage(P: PolygonCycle, guarded) -> CoverageReport:
    """Exact visibility-coverage decision for one polygonalization.

    Builds the arrangement of the boundary plus all guard windows; every
    face is uniformly visible or invisible per guard, so testing one
    representative point per face decides coverage. On failure the witness
    is the first uncovered face representative (original coordinates);
    faces_per_guard then reflects only the faces examined up to it.
    """
    ps = P.ps
    guards = sorted(set(guarded))
    scale = ps.scale
    reps = _coverage_face_reps(P, guards)
    gpts = {g: ps.point(g) for g in guards}
    counts = {g: 0 for g in guards}
    for (qx, qy) in reps:
        q = (qx / scale, qy / scale)
        hit = False
        for g in guards:
            if sees(P, gpts[g], q):
                counts[g] += 1
                hit = True
        if not hit:
            return CoverageReport(False, q, counts)
    return CoverageReport(True, None, counts)


def _diag_table(P: PolygonCycle):
    order = list(ccw_order(P))
    n = len(order)
    diag = [[False] * n for _ in range(n)]
    for i in range(n):
        diag[i][(i + 1) % n] = True
        diag[(i + 1) % n][i] = True
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if valid_diagonal(P.ps, order, i, j):
                diag[i][j] = diag[j][i] = True
    return order, diag


def coverage_fast_sufficient(P: PolygonCycle, guarded) -> str:
    """'covered' if some triangulation puts a guard on a corner of every
    triangle, else 'unknown'. Sufficient only; interval DP over the cycle."""
    guards = set(guarded)
    if not guards:
        return "unknown"
    order, diag = _diag_table(P)
    n = len(order)
    memo = {}

    def solve(i, j):
        if j - i == 1:
            return True
        key = (i, j)
        if key in memo:
            return memo[key]
        res = False
        for k in range(i + 1, j):
            if not (diag[i][k] and diag[k][j]):
                continue
            if order[i] not in guards and order[k] not in guards \
                    and order[j] not in guards:
                continue
            if solve(i, k) and solve(k, j):
                res = True
                break
        memo[key] = res
        return res

    return "covered" if solve(0, n - 1) else "unknown"


_CROSSCHECK = {"fast_covered": 0, "rechecked": 0, "mismatches": []}
_CROSSCHECK_EVERY = 17


def crosscheck_registry():
    """Running tally of fast-path results re-verified by the exact checker."""
    return _CROSSCHECK


def _fast_then_exact(P: PolygonCycle, guarded):
    """Coverage with the fast sufficient path, cross-checked by sampling."""
    fast = coverage_fast_sufficient(P, guarded)
    if fast == "covered":
        _CROSSCHECK["fast_covered"] += 1
        if _CROSSCHECK["fast_covered"] % _CROSSCHECK_EVERY == 0:
            _CROSSCHECK["rechecked"] += 1
            rep = coverage(P, guarded)
            if not rep.covered:
                _CROSSCHECK["mismatches"].append((tuple(P.order), frozenset(guarded)))
            return rep
        return CoverageReport(True, None, {})
    return coverage(P, guarded)


def is_universal(ps: PointSet, guarded, budget=None) -> UniversalityReport:
    """Check every polygonalization; first failure yields the witness."""
    checked = 0
    for P in enumerate_polygonalizations(ps, budget):
        checked += 1
        rep = _fast_then_exact(P, guarded)
        if not rep.covered:
            return UniversalityReport(False, P, rep.uncovered_witness, checked)
    return UniversalityReport(True, None, None, checked)


@dataclass(frozen=True)
class Chamber:
    """Ordered 4-tuple of point indices with the two sidedness conditions
    and an empty region; empty w.r.t. G when p2, p3, p4 are unguarded."""

    p1: int
    p2: int
    p3: int
    p4: int

    def chain_edges(self):
        return [(self.p1, self.p2), (self.p2, self.p3), (self.p3, self.p4)]

    def region_cycle(self):
        return (self.p1, self.p2, self.p3, self.p4)

    def is_empty_for(self, guarded):
        return (self.p2 not in guarded and self.p3 not in guarded
                and self.p4 not in guarded)

    def is_part_of(self, P: PolygonCycle):
        edges = {frozenset(e) for e in P.edges()}
        return all(frozenset(e) in edges for e in self.chain_edges())


_CHAMBER_CACHE = {}


def _pointset_key(ps: PointSet):
    return tuple(zip(ps.xs, ps.ys))


def all_chambers(ps: PointSet):
    """Every ordered 4-tuple satisfying the chamber conditions, regardless
    of guards. Cached per point set."""
    key = _pointset_key(ps)
    hit = _CHAMBER_CACHE.get(key)
    if hit is not None:
        return hit
    xs, ys = ps.xs, ps.ys
    n = len(ps)
    out = []
    idx = range(n)
    for p3 in idx:
        for p4 in idx:
            if p4 == p3:
                continue
            sides = [K.orient(xs[p3], ys[p3], xs[p4], ys[p4], xs[v], ys[v])
                     for v in idx]
            for p1 in idx:
                if p1 in (p3, p4) or sides[p1] == 0:
                    continue
                for p2 in idx:
                    if p2 in (p1, p3, p4):
                        continue
                    if sides[p2] == 0 or sides[p2] == sides[p1]:
                        continue
                    o3 = K.orient(xs[p1], ys[p1], xs[p2], ys[p2], xs[p3], ys[p3])
                    o4 = K.orient(xs[p1], ys[p1], xs[p2], ys[p2], xs[p4], ys[p4])
                    if o3 == 0 or o3 != o4:
                        continue
                    quad = [p1, p2, p3, p4]
                    if not K.cycle_is_simple(xs, ys, quad):
                        continue
                    if any(K.point_in_polygon(xs, ys, quad, xs[v], ys[v]) == 1
                           for v in idx if v not in quad):
                        continue
                    out.append(Chamber(p1, p2, p3, p4))
    _CHAMBER_CACHE[key] = out
    return out


def find_chambers(ps: PointSet, guarded):
    """All chambers that are empty with respect to the guard set."""
    return [c for c in all_chambers(ps) if c.is_empty_for(guarded)]


def _required_edges_consistent(ps: PointSet, edges):
    xs, ys = ps.xs, ps.ys
    n = len(ps)
    uniq = []
    seen = set()
    for (a, b) in edges:
        if a == b or not (0 <= a < n and 0 <= b < n):
            return None
        key = frozenset((a, b))
        if key in seen:
            continue
        seen.add(key)
        uniq.append((a, b))
    deg = {}
    for (a, b) in uniq:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
        if deg[a] > 2 or deg[b] > 2:
            return None
    for (a, b) in uniq:
        for v in range(n):
            if v in (a, b):
                continue
            if K.on_segment(xs[a], ys[a], xs[b], ys[b], xs[v], ys[v]):
                return None
    for i in range(len(uniq)):
        a, b = uniq[i]
        for j in range(i + 1, len(uniq)):
            c, d = uniq[j]
            shared = {a, b} & {c, d}
            if not shared:
                if K.segs_intersect(xs[a], ys[a], xs[b], ys[b],
                                    xs[c], ys[c], xs[d], ys[d]):
                    return None
            else:
                v = shared.pop()
                o1 = ({a, b} - {v}).pop()
                o2 = ({c, d} - {v}).pop()
                if K.orient(xs[v], ys[v], xs[o1], ys[o1], xs[o2], ys[o2]) == 0:
                    dot = ((xs[o1] - xs[v]) * (xs[o2] - xs[v])
                           + (ys[o1] - ys[v]) * (ys[o2] - ys[v]))
                    if dot > 0:
                        return None
    return uniq


def _edge_paths(n, edges):
    """Decompose required edges into maximal simple paths. Returns the list
    of paths (each a vertex list) plus untouched vertices, or None if the
    edges contain a cycle shorter than n or a branching vertex."""
    adjacent = {v: [] for v in range(n)}
    for a, b in edges:
        adjacent[a].append(b)
        adjacent[b].append(a)
    if edges and len(edges) == n and all(len(v) == 2 for v in adjacent.values()):
        return "hamiltonian", adjacent
    visited = set()
    paths = []
    for v in range(n):
        if v in visited or not adjacent[v]:
            continue
        if len(adjacent[v]) != 1:
            continue
        path = [v]
        visited.add(v)
        cur, prev = adjacent[v][0], v
        while True:
            path.append(cur)
            visited.add(cur)
            nbrs = [w for w in adjacent[cur] if w != prev]
            if not nbrs:
                break
            prev, cur = cur, nbrs[0]
        paths.append(path)
    for v in range(n):
        if adjacent[v] and v not in visited:
            return None  # component with no degree-1 vertex: a proper cycle
    singles = [v for v in range(n) if not adjacent[v]]
    return paths, singles


def complete_polygonalization(ps: PointSet, required_edges, hint=None,
                              node_budget=400_000):
    """A simple polygonalization whose boundary contains every required
    edge, or None.

    Exhaustive and complete up to |S| = 14; larger sets use depth-first
    search with nearest-first move ordering (optionally steered by hint, a
    preferred vertex order) under a node budget, which may miss solutions.
    """
    n = len(ps)
    xs, ys = ps.xs, ps.ys
    edges = _required_edges_consistent(ps, list(required_edges))
    if edges is None:
        return None
    decomp = _edge_paths(n, edges)
    if decomp is None:
        return None
    if decomp[0] == "hamiltonian":
        adjacent = decomp[1]
        order = [0, adjacent[0][0]]
        while len(order) < n:
            a, b = adjacent[order[-1]]
            step = b if a == order[-2] else a
            if step in (0, order[-2]):
                return None  # disconnected union of shorter cycles
            order.append(step)
        if not K.cycle_is_simple(xs, ys, order):
            return None
        return PolygonCycle(ps, tuple(order))
    paths, singles = decomp
    units = [tuple(p) for p in paths] + [(v,) for v in singles]
    if not units:
        return None
    exhaustive = n <= COMPLETE_EXHAUSTIVE_LIMIT
    rank = {}
    if hint is not None:
        rank = {v: i for i, v in enumerate(hint)}

    def unit_orientations(u):
        return (u, u[::-1]) if len(u) > 1 else (u,)

    def move_key(tail, u):
        head = u[0]
        if rank:
            return rank.get(head, len(rank))
        dx = xs[head] - xs[tail]
        dy = ys[head] - ys[tail]
        return dx * dx + dy * dy

    budget = [node_budget]
    chain = []
    used = [False] * len(units)

    def try_append(seq):
        added = 0
        for v in seq:
            if not chain:
                chain.append(v)
                added += 1
                continue
            if not K.chain_can_extend(xs, ys, chain, v):
                del chain[len(chain) - added:]
                return -1
            chain.append(v)
            added += 1
        return added

    def rec():
        if not exhaustive:
            budget[0] -= 1
            if budget[0] < 0:
                return None
        if len(chain) == n:
            if K.chain_can_close(xs, ys, chain):
                return list(chain)
            return None
        tail = chain[-1]
        moves = []
        for ui, u in enumerate(units):
            if used[ui]:
                continue
            for ori in unit_orientations(u):
                moves.append((move_key(tail, ori), ui, ori))
        moves.sort(key=lambda m: m[0])
        for _, ui, ori in moves:
            added = try_append(ori)
            if added < 0:
                continue
            used[ui] = True
            res = rec()
            if res is not None:
                return res
            used[ui] = False
            del chain[len(chain) - added:]
        return None

    first = units[0]
    for ori in unit_orientations(first):
        chain.clear()
        chain.extend(ori)
        used[0] = True
        res = rec()
        used[0] = False
        if res is not None:
            return PolygonCycle(ps, tuple(res))
    return None


_EMBED_CACHE = {}


def chamber_embedding(ps: PointSet, chamber: Chamber):
    """A polygonalization containing the chamber's chain, cached; None if
    the completion search finds none."""
    key = (_pointset_key(ps), chamber)
    if key not in _EMBED_CACHE:
        _EMBED_CACHE[key] = complete_polygonalization(ps, chamber.chain_edges())
    return _EMBED_CACHE[key]


def chamber_region_witness(ps: PointSet, chamber: Chamber):
    """An exact interior point of the chamber region (original frame)."""
    xs, ys = ps.xs, ps.ys
    quad = list(chamber.region_cycle())
    walk = [(Fraction(xs[v]), Fraction(ys[v])) for v in quad]
    s = Fraction(0)
    for i in range(4):
        x1, y1 = walk[i]
        x2, y2 = walk[(i + 1) % 4]
        s += x1 * y2 - x2 * y1
    if s < 0:
        walk.reverse()
    qx, qy = _face_rep_point(walk)
    return (qx / ps.scale, qy / ps.scale)


def _chamber_prune(ps: PointSet, guarded):
    """A (polygon, witness point) pair certifying non-universality via an
    empty embedded chamber, or None. Sound: the witness is confirmed
    unseen inside the embedding before pruning."""
    gset = set(guarded)
    for chamber in all_chambers(ps):
        if not chamber.is_empty_for(gset):
            continue
        P = chamber_embedding(ps, chamber)
        if P is None:
            continue
        w = chamber_region_witness(ps, chamber)
        if point_in_polygon(P, w) != "inside":
            continue
        if any(sees(P, ps.point(g), w) for g in gset):
            continue
        return P, w
    return None


def min_universal_guards(ps: PointSet):
    """Smallest universal guard set by subset search in increasing size.

    Chamber-based pruning rejects subsets that leave an embeddable empty
    chamber (each rejection re-confirmed by the exact point test); the
    survivors run against the full polygonalization enumeration.
    """
    n = len(ps)
    if n > 10:
        raise BudgetExceeded(n, 10, 2 ** n)
    polys = list(enumerate_polygonalizations(ps, budget=10))
    hot = list(range(len(polys)))

    def universal(gset):
        for pos, pi in enumerate(hot):
            P = polys[pi]
            rep = _fast_then_exact(P, gset)
            if not rep.covered:
                hot.insert(0, hot.pop(pos))
                return False
        return True

    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            gset = set(combo)
            if _chamber_prune(ps, gset) is not None:
                continue
            if universal(gset):
                return size, gset
    return n, set(range(n))


def _guard_face_masks(P: PolygonCycle):
    """Per-vertex bitmask of visible arrangement faces, with windows cast
    from every vertex so any guard subset stays face-uniform."""
    ps = P.ps
    scale = ps.scale
    n = len(ps)
    reps = _coverage_face_reps(P, list(range(n)))
    masks = [0] * n
    for fi, (qx, qy) in enumerate(reps):
        q = (qx / scale, qy / scale)
        for g in range(n):
            if sees(P, ps.point(g), q):
                masks[g] |= 1 << fi
    full = (1 << len(reps)) - 1
    return masks, full


def min_k_universal_guards(polygons):
    """Smallest guard set covering every polygon in the list exactly."""
    if not polygons:
        raise ValueError("need at least one polygon")
    ps = polygons[0].ps
    n = len(ps)
    if n > 12:
        raise BudgetExceeded(n, 12, 2 ** n)
    for P in polygons[1:]:
        if P.ps.points() != ps.points():
            raise ValueError("polygons must share one point set")
    per_poly = [_guard_face_masks(P) for P in polygons]
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            if all(functools.reduce(lambda acc, g: acc | masks[g], combo, 0) == full
                   for masks, full in per_poly):
                return size, set(combo)
    return n, set(range(n))
