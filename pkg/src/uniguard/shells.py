"""Guard-set construction from convex-shell structure.

The constructions guard everything except every second vertex of a
tangent-free arc of one chosen shell (or except one whole shell), and the
partition certificate backs the coverage claim region by region: it carves
the polygon shell by shell into convex pieces and reports a guarded corner
for each piece, or the first piece that has none.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from uniguard import _kernels as K

from .geom import (
    PointSet,
    PolygonCycle,
    ShellDecomposition,
    _strictly_inside_or_on_triangle,
    ccw_order,
    convex_layers,
    is_simple,
    triangulate_subpolygon,
    valid_diagonal,
)

__all__ = [
    "GuardSet",
    "TangentPair",
    "Region",
    "PartitionCertificate",
    "tangent_points",
    "guards_one_shell",
    "guards_two_shells",
    "choose_shell",
    "guards_m_shells",
    "two_shell_bound_ok",
    "m_shell_bound_report",
    "partition_certificate",
]


@dataclass(frozen=True)
class GuardSet:
    """A chosen subset of point indices that are guarded."""

    base: PointSet
    guarded: frozenset

    def __post_init__(self):
        g = frozenset(self.guarded)
        object.__setattr__(self, "guarded", g)
        if not all(isinstance(i, int) and 0 <= i < len(self.base) for i in g):
            raise ValueError("guard index out of range")

    def __len__(self):
        return len(self.guarded)


@dataclass(frozen=True)
class TangentPair:
    """Tangent vertices of an inner shell as seen from one outer point.

    The shell lies weakly left of the ray outer->right and weakly right of
    the ray outer->left.
    """

    outer_index: int
    left: int
    right: int


def _tangents_collinear(ps, v, cyc):
    xs, ys = ps.xs, ps.ys
    ordered = sorted(cyc, key=lambda i: (xs[i], ys[i]))
    a, b = ordered[0], ordered[-1]
    px, py = xs[v], ys[v]
    if K.on_segment(xs[a], ys[a], xs[b], ys[b], px, py):
        raise ValueError("outer point lies on the inner shell hull")
    side = K.orient(px, py, xs[a], ys[a], xs[b], ys[b])
    if side == 0:
        # On the supporting line beyond an endpoint: one point of tangency.
        near = min((px - xs[i]) ** 2 + (py - ys[i]) ** 2 for i in (a, b))
        pick = a if (px - xs[a]) ** 2 + (py - ys[a]) ** 2 == near else b
        return TangentPair(v, pick, pick)
    if side > 0:
        return TangentPair(v, left=b, right=a)
    return TangentPair(v, left=a, right=b)


def _tangent_scan(xs, ys, cyc, px, py):
    """Linear tangent finding; shares tie-breaks with the binary search."""
    n = len(cyc)
    fs = []
    for i in range(n):
        a, b = cyc[i], cyc[(i + 1) % n]
        fs.append(K.orient(px, py, xs[a], ys[a], xs[b], ys[b]))
    if all(f >= 0 for f in fs):
        raise ValueError("outer point lies inside or on the inner shell hull")
    right = next(i for i in range(n) if fs[i] > 0 and fs[i - 1] <= 0)
    left = next(i for i in range(n) if fs[i] < 0 and fs[i - 1] >= 0)
    return left, right


def _tangent_search(xs, ys, cyc, r, px, py):
    """O(log n) tangent positions on a counterclockwise convex cycle.

    Locates the hull edges cut by the rays from an interior anchor toward
    and away from the query point; between those seeds the visibility sign
    of the edges is monotone, so both tangents fall to binary searches.
    """
    n = len(cyc)
    cx3 = xs[cyc[0]] + xs[cyc[1]] + xs[cyc[r]]
    cy3 = ys[cyc[0]] + ys[cyc[1]] + ys[cyc[r]]
    px3, py3 = 3 * px, 3 * py
    if (px3, py3) == (cx3, cy3):
        raise ValueError("outer point lies inside or on the inner shell hull")

    def vdir(i):
        k = cyc[i % n]
        return (3 * xs[k] - cx3, 3 * ys[k] - cy3)

    ax, ay = vdir(0)

    def bucket(d):
        cr = ax * d[1] - ay * d[0]
        if cr > 0:
            return 1
        if cr < 0:
            return 3
        return 0 if ax * d[0] + ay * d[1] > 0 else 2

    def dir_cmp(d1, d2):
        b1, b2 = bucket(d1), bucket(d2)
        if b1 != b2:
            return -1 if b1 < b2 else 1
        if b1 in (0, 2):
            return 0
        cr = d1[0] * d2[1] - d1[1] * d2[0]
        return 0 if cr == 0 else (-1 if cr > 0 else 1)

    def locate(d):
        lo, hi = 0, n
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if dir_cmp(vdir(mid), d) <= 0:
                lo = mid
            else:
                hi = mid
        return lo, dir_cmp(vdir(lo), d) == 0

    def f(i):
        a, b = cyc[i % n], cyc[(i + 1) % n]
        return K.orient(px, py, xs[a], ys[a], xs[b], ys[b])

    # Seed s: a strictly visible edge, via the ray from the anchor toward p.
    k, hit = locate((px3 - cx3, py3 - cy3))
    if hit:
        ux, uy = vdir(k)
        if (px3 - cx3) * ux + (py3 - cy3) * uy <= ux * ux + uy * uy:
            raise ValueError("outer point lies inside or on the inner shell hull")
        s = k if f(k) < 0 else (k - 1) % n
        if f(s) >= 0:
            return _tangent_scan(xs, ys, cyc, px, py)
    else:
        s = k
        if f(s) >= 0:
            raise ValueError("outer point lies inside or on the inner shell hull")

    # Seed h: a strictly hidden edge, via the opposite ray.
    kh, hith = locate((cx3 - px3, cy3 - py3))
    if hith:
        h = kh if f(kh) > 0 else (kh - 1) % n
    else:
        h = kh
    if f(h) <= 0:
        return _tangent_scan(xs, ys, cyc, px, py)

    # Right tangent: first strictly hidden edge counterclockwise after s.
    lo, hi = 0, (h - s) % n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f(s + mid) > 0:
            hi = mid
        else:
            lo = mid
    right = (s + hi) % n

    # Left tangent: first strictly visible edge counterclockwise after h.
    lo, hi = 0, (s - h) % n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f(h + mid) < 0:
            hi = mid
        else:
            lo = mid
    left = (h + hi) % n
    return left, right


def tangent_points(ps: PointSet, v: int, inner) -> TangentPair:
    """Tangent vertices of the convex cycle ``inner`` as seen from point v.

    Exact; collinear ties pick the endpoint further along the
    counterclockwise hull order. Raises ValueError when v lies inside or on
    the hull of the inner cycle.
    """
    cyc = list(inner)
    if len(cyc) < 2:
        raise ValueError("inner shell needs at least two points")
    if v in set(cyc):
        raise ValueError("outer point lies on the inner shell hull")
    xs, ys = ps.xs, ps.ys
    a0, a1 = cyc[0], cyc[1]
    ref = None
    for j in range(2, len(cyc)):
        q = cyc[j]
        if K.orient(xs[a0], ys[a0], xs[a1], ys[a1], xs[q], ys[q]) != 0:
            ref = j
            break
    if ref is None:
        return _tangents_collinear(ps, v, cyc)
    left, right = _tangent_search(xs, ys, cyc, ref, xs[v], ys[v])
    return TangentPair(v, left=cyc[left], right=cyc[right])


def _tangent_marks(ps, inner_cycle, outer_points):
    marked = set()
    for v in outer_points:
        pair = tangent_points(ps, v, inner_cycle)
        marked.add(pair.left)
        marked.add(pair.right)
    return marked


def _longest_free_arc(cycle, marked):
    """Longest circular run avoiding marked vertices; earliest start on ties."""
    n = len(cycle)
    free = [cycle[i] not in marked for i in range(n)]
    if all(free):
        return list(cycle)
    best_start, best_len = None, 0
    for start in range(n):
        if free[start] and not free[start - 1]:
            length = 1
            while length < n and free[(start + length) % n]:
                length += 1
            if length > best_len:
                best_start, best_len = start, length
    if best_start is None:
        return []
    return [cycle[(best_start + t) % n] for t in range(best_len)]


def guards_one_shell(ps: PointSet) -> GuardSet:
    """Single guard for a point set in convex position."""
    layers = convex_layers(ps)
    if layers.m != 1:
        raise ValueError(f"expected a single shell, found {layers.m}")
    pick = min(range(len(ps)), key=lambda i: (ps.xs[i], ps.ys[i]))
    return GuardSet(ps, frozenset([pick]))


def guards_two_shells(ps: PointSet):
    """Guard set for a two-shell point set, with the branch taken.

    Branch A guards exactly the inner shell when the outer shell is large
    enough (4|B2|^2 >= |B1|, the integer form of |B2| >= sqrt(|B1|)/2).
    Branch B computes all tangent points on the inner shell, finds the
    longest tangent-free arc, and leaves every second arc vertex unguarded.
    """
    layers = convex_layers(ps)
    if layers.m != 2:
        raise ValueError(f"expected exactly two shells, found {layers.m}")
    inner, outer = layers.shells
    if 4 * len(outer) ** 2 >= len(inner):
        return GuardSet(ps, frozenset(inner)), "A"
    marked = _tangent_marks(ps, inner, outer)
    arc = _longest_free_arc(inner, marked)
    dropped = set(arc[0::2])
    guarded = frozenset(i for i in range(len(ps)) if i not in dropped)
    return GuardSet(ps, guarded), "B"


def choose_shell(sizes) -> int:
    """Index j (1-based, innermost first) maximizing n_j/(2*sum_above) - 1."""
    sizes = list(sizes)
    if len(sizes) < 2:
        raise ValueError("need at least two shells")
    best_j, best = None, None
    for j in range(1, len(sizes)):
        val = Fraction(sizes[j - 1], 2 * sum(sizes[j:])) - 1
        if best is None or val > best:
            best_j, best = j, val
    return best_j


def guards_m_shells(ps: PointSet):
    """Guard set for a point set with at least three shells, plus branch tag.

    With j the shell chosen by choose_shell and lambda = n_j/(2*sum_above)-1:
    branch A guards all shells but the outermost when |B_m| >= lambda,
    branch B unguards every second vertex of the longest tangent-free arc
    of shell j (tangents taken from all points above it).
    """
    layers = convex_layers(ps)
    m = layers.m
    if m < 3:
        raise ValueError(f"expected at least three shells, found {m}")
    sizes = [len(s) for s in layers.shells]
    j = choose_shell(sizes)
    n_j = sizes[j - 1]
    tail = sum(sizes[j:])
    n_m = sizes[-1]
    if 2 * tail * (n_m + 1) >= n_j:
        guarded = frozenset(v for s in layers.shells[:-1] for v in s)
        return GuardSet(ps, guarded), "A"
    inner = layers.shells[j - 1]
    above = [v for s in layers.shells[j:] for v in s]
    marked = _tangent_marks(ps, inner, above)
    arc = _longest_free_arc(inner, marked)
    dropped = set(arc[0::2])
    guarded = frozenset(i for i in range(len(ps)) if i not in dropped)
    return GuardSet(ps, guarded), "B"


def two_shell_bound_ok(n: int, guard_count: int) -> bool:
    """Exact check of |G| <= (1 - 1/sqrt(6n)) n, i.e. 6*(n-|G|)^2 >= n."""
    u = n - guard_count
    return u >= 0 and 6 * u * u >= n


def m_shell_bound_report(n: int, m: int, guard_count: int) -> dict:
    """Exact checks of the unguarded count against both exponent variants.

    The asserted bound is u >= n^(1/(2m))/16; the report also records the
    u >= n^(1/2^m)/16 variant so callers can see which one an instance
    actually meets. Both comparisons are integer-exact.
    """
    u = n - guard_count
    if u < 0:
        return {"unguarded": u, "root_2m": False, "root_pow2m": False}
    return {
        "unguarded": u,
        "root_2m": (16 * u) ** (2 * m) >= n,
        "root_pow2m": (16 * u) ** (2 ** m) >= n,
    }


@dataclass(frozen=True)
class Region:
    """Convex piece of a partition; rtype is the shell level (innermost = 1)
    of its outermost corner, witness a guarded corner index if any."""

    rtype: int
    cycle: tuple
    witness: Optional[int]


@dataclass(frozen=True)
class PartitionCertificate:
    """Partition of a polygon into convex regions with per-region witnesses.

    ok is True when every region has a guarded corner; otherwise failed
    holds the first region without one.
    """

    regions: tuple
    ok: bool
    failed: Optional[Region]


def _mk_region(cyc, level, guarded):
    wit = min((v for v in cyc if v in guarded), default=None)
    return Region(max(level[v] for v in cyc), tuple(cyc), wit)


def _split_candidates(ps, level, C, pos, blockers):
    """Order blockers for a diagonal split from cycle position pos."""
    xs, ys = ps.xs, ps.ys
    n = len(C)
    a, c = C[pos - 1], C[(pos + 1) % n]

    def key(v):
        d = abs((xs[c] - xs[a]) * (ys[v] - ys[a]) - (ys[c] - ys[a]) * (xs[v] - xs[a]))
        return (level[v], -d, v)

    return sorted(blockers, key=key)


def _split_at(ps, level, C, pos, blockers):
    for v in _split_candidates(ps, level, C, pos, blockers):
        pv = C.index(v)
        if valid_diagonal(ps, C, pos, pv):
            return ("split", pos, pv)
    return None


def _stage_step(ps, level, stage, C, guarded):
    """One carving action: clip a triangle off the cycle or split the cycle.

    Prefers clipping stage-level vertices that still touch a lower shell,
    then lower-level vertices, and clips witnessed triangles before
    unwitnessed ones at equal preference.
    """
    xs, ys = ps.xs, ps.ys
    n = len(C)

    def turn(pos):
        a, b, c = C[pos - 1], C[pos], C[(pos + 1) % n]
        return K.orient(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c])

    def blockers(pos):
        a, b, c = C[pos - 1], C[pos], C[(pos + 1) % n]
        return [v for v in C if v not in (a, b, c)
                and _strictly_inside_or_on_triangle(xs, ys, a, b, c, v)]

    cands = []
    for pos in range(n):
        if turn(pos) <= 0:
            continue
        v = C[pos]
        elig = level[v] == stage and (
            level[C[pos - 1]] < stage or level[C[(pos + 1) % n]] < stage)
        low = level[v] < stage
        if not (elig or low):
            continue
        witnessed = any(w in guarded for w in (C[pos - 1], v, C[(pos + 1) % n]))
        rank = (0 if elig else 2) + (0 if witnessed else 1)
        cands.append((rank, pos))
    cands.sort()
    blocked = []
    for rank, pos in cands:
        blk = blockers(pos)
        if not blk:
            return ("clip", pos)
        blocked.append((pos, blk))
    for pos, blk in blocked:
        act = _split_at(ps, level, C, pos, blk)
        if act is not None:
            return act
    # Nothing actionable next to the target shell; act on any convex vertex.
    for pos in range(n):
        if turn(pos) <= 0:
            continue
        blk = blockers(pos)
        if not blk:
            return ("clip", pos)
        act = _split_at(ps, level, C, pos, blk)
        if act is not None:
            return act
    raise ValueError("no convex vertex found; polygon not simple?")


def _carve_stage(ps, level, stage, cyc, guarded, regions):
    """Remove every stage-level vertex from the cycle, emitting triangle
    regions along the way; returns leftover cycles for the next stage."""
    leftovers = []
    work = [list(cyc)]
    while work:
        C = work.pop()
        n = len(C)
        if n < 3:
            continue
        if not any(level[v] == stage for v in C):
            leftovers.append(C)
            continue
        if n == 3:
            regions.append(_mk_region(C, level, guarded))
            continue
        act = _stage_step(ps, level, stage, C, guarded)
        if act[0] == "clip":
            pos = act[1]
            tri = [C[pos - 1], C[pos], C[(pos + 1) % n]]
            regions.append(_mk_region(tri, level, guarded))
            rest = list(C)
            del rest[pos]
            work.append(rest)
        else:
            _, pb, pq = act
            lo, hi = (pb, pq) if pb < pq else (pq, pb)
            work.append(C[lo:hi + 1])
            work.append(C[hi:] + C[:lo + 1])
    return leftovers


def _emit_leftover(ps, level, cyc, guarded, regions):
    xs, ys = ps.xs, ps.ys
    n = len(cyc)
    convex = all(
        K.orient(xs[cyc[t - 1]], ys[cyc[t - 1]], xs[cyc[t]], ys[cyc[t]],
                 xs[cyc[(t + 1) % n]], ys[cyc[(t + 1) % n]]) >= 0
        for t in range(n))
    if convex:
        regions.append(_mk_region(cyc, level, guarded))
        return
    # Leftover faces have all corners on one hull, so they come out convex;
    # triangulating here is a safety net, not an expected path.
    for tri in triangulate_subpolygon(ps, cyc):
        regions.append(_mk_region(list(tri), level, guarded))


def partition_certificate(P: PolygonCycle, shells: ShellDecomposition,
                          G: GuardSet) -> PartitionCertificate:
    """Partition P into convex regions and report a guarded corner for each.

    Carves shells outermost first: stage i cuts triangles until no vertex
    of shell i remains on any boundary cycle, then the faces left inside
    the innermost hull are emitted whole. Region areas add up to the
    polygon area exactly and interiors are disjoint by construction. A
    region with no guarded corner makes ok False and is reported in
    failed; no exception is raised for that.
    """
    ps = P.ps
    if not is_simple(ps, P):
        raise ValueError("polygon is not simple")
    level = shells.level_map()
    if sorted(level) != list(range(len(ps))):
        raise ValueError("shell decomposition does not span the point set")
    guarded = set(G.guarded)
    regions = []
    cycles = [list(ccw_order(P))]
    for stage in range(shells.m, 1, -1):
        nxt = []
        for cyc in cycles:
            nxt.extend(_carve_stage(ps, level, stage, cyc, guarded, regions))
        cycles = nxt
    for cyc in cycles:
        _emit_leftover(ps, level, cyc, guarded, regions)
    failed = next((r for r in regions if r.witness is None), None)
    return PartitionCertificate(tuple(regions), failed is None, failed)
