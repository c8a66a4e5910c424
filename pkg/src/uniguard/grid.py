"""Guard placements on rectangular integer grids.

Half the points, placed as a checkerboard color class or as every second
row, guard every polygonalization of the grid; the certificate reduces to
empty lattice triangles. Conversely, leaving any non-corner point together
with a horizontal and a vertical neighbor unguarded admits a
polygonalization with a pocket no remaining guard sees, and that
polygonalization is constructed explicitly here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geom import PointSet, PolygonCycle, is_simple, point_in_polygon, sees
from .oracle import coverage
from .shells import GuardSet

__all__ = [
    "GridSpec",
    "EmptyGridTriangle",
    "GridSufficiencyReport",
    "GridNecessityWitness",
    "grid_guards",
    "enumerate_empty_grid_triangles",
    "certify_grid_sufficiency",
    "grid_necessity_witness",
]


@dataclass(frozen=True)
class GridSpec:
    """An nx-by-ny axis-aligned integer grid, at least 2 points each way.

    Points live at (x, y) for 0 <= x < nx, 0 <= y < ny and are indexed
    row-major: index(x, y) = y * nx + x.
    """

    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 columns and 2 rows")

    @property
    def n(self) -> int:
        return self.nx * self.ny

    def contains(self, x, y) -> bool:
        return 0 <= x < self.nx and 0 <= y < self.ny

    def is_corner(self, x, y) -> bool:
        return x in (0, self.nx - 1) and y in (0, self.ny - 1)

    def index(self, x, y) -> int:
        if not self.contains(x, y):
            raise ValueError(f"({x}, {y}) lies outside the {self.nx}x{self.ny} grid")
        return y * self.nx + x

    def points(self):
        return [(x, y) for y in range((self.ny)) for x in range(self.nx)]

    def point_set(self) -> PointSet:
        return PointSet(self.points())


def grid_guards(spec: GridSpec, pattern: str = "checkerboard") -> GuardSet:
    """Place floor(n/2) guards in one of the two sufficient patterns.

    checkerboard guards the odd color class (x + y odd), which is never the
    larger one. even_rows guards whole rows y = 1, 3, 5, ...; when the row
    count is odd that leaves floor(nx/2) guards short, and the top row gets
    them at odd x, so no two vertically adjacent points are both far from a
    guarded row and the total still lands exactly on floor(n/2).
    """
    ps = spec.point_set()
    if pattern == "checkerboard":
        chosen = frozenset(
            spec.index(x, y)
            for x, y in spec.points()
            if (x + y) % 2 == 1
        )
    elif pattern in ("even_rows", "even-rows"):
        rows = set(
            spec.index(x, y)
            for y in range(1, spec.ny, 2)
            for x in range(spec.nx)
        )
        if spec.ny % 2 == 1:
            top = spec.ny - 1
            rows.update(spec.index(x, top) for x in range(1, spec.nx, 2))
        chosen = frozenset(rows)
    else:
        raise ValueError(f"unknown guard pattern {pattern!r}")
    assert len(chosen) == spec.n // 2
    return GuardSet(ps, chosen)


def _area2(p, q, r) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


@dataclass(frozen=True)
class EmptyGridTriangle:
    """Lattice triangle containing no grid point besides its three corners.

    A lattice triangle is empty in this sense exactly when its area is 1/2
    (Pick's theorem), so validity is a single doubled-area check.
    """

    p: tuple
    q: tuple
    r: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        object.__setattr__(self, "r", tuple(self.r))
        if abs(_area2(self.p, self.q, self.r)) != 1:
            raise ValueError(
                "triangle is degenerate or has a grid point on or inside it")

    @property
    def vertices(self):
        return (self.p, self.q, self.r)


def _empty_triangles_from(spec: GridSpec, first: int):
    """Empty triangles whose lowest row-major corner index is `first`."""
    pts = spec.points()
    n = len(pts)
    p = pts[first]
    for j in range(first + 1, n):
        q = pts[j]
        for k in range(j + 1, n):
            if abs(_area2(p, q, pts[k])) == 1:
                yield EmptyGridTriangle(p, q, pts[k])


def enumerate_empty_grid_triangles(spec: GridSpec):
    """Yield every empty grid triangle once, corners in row-major index order.

    The stream is grouped by the lowest corner index, so shards of the
    enumeration can run independently per first corner if needed.
    """
    for first in range(spec.n - 2):
        yield from _empty_triangles_from(spec, first)


@dataclass(frozen=True)
class GridSufficiencyReport:
    """Outcome of the exhaustive empty-triangle audit of a guard set."""

    ok: bool
    counterexample: Optional[EmptyGridTriangle]
    checked: int


def certify_grid_sufficiency(spec: GridSpec, guards) -> GridSufficiencyReport:
    """Confirm every empty grid triangle has at least one guarded corner.

    Any polygonalization of the grid triangulates into empty lattice
    triangles, and a guard on a corner of a triangle sees all of it, so a
    guard set passing this audit guards every polygonalization. The first
    fully unguarded empty triangle, if one exists, comes back as the
    counterexample.
    """
    guarded = set(guards.guarded) if isinstance(guards, GuardSet) else set(guards)
    checked = 0
    for tri in enumerate_empty_grid_triangles(spec):
        checked += 1
        if all(spec.index(*v) not in guarded for v in tri.vertices):
            return GridSufficiencyReport(False, tri, checked)
    return GridSufficiencyReport(True, None, checked)


# ---------------------------------------------------------------------------
# Necessity: an unguarded L of three points admits an unseeable pocket.

_SEED_W, _SEED_H = 4, 5

# Hamiltonian cycles of the 4x5 window that leave a region near the L's
# triangle invisible to every guard outside the L, keyed by the window
# offset of the L's corner point a (after reflecting so the neighbors
# point right and up). Each entry stores the role of a triple vertex that
# no guard sees ("a"/"h"/"v", or None when only an interior region is
# hidden), an interior point of the hidden region, and the cycle. Found
# by randomized depth-first search over simple cycles; re-verified by the
# test suite against the coverage checker.
_SPIKE_SEEDS = {
    (1, 1): ("h", (Fraction(3, 2), Fraction(7, 6)),
             ((1, 1), (2, 1), (1, 2), (2, 2), (2, 3), (3, 1), (3, 2),
              (3, 3), (3, 4), (2, 4), (1, 4), (0, 4), (0, 3), (0, 2),
              (0, 1), (1, 3), (0, 0), (1, 0), (2, 0), (3, 0))),
    (2, 0): ("a", (Fraction(13, 6), Fraction(1, 3)),
             ((3, 0), (2, 0), (2, 1), (1, 1), (1, 0), (0, 0), (0, 1),
              (0, 2), (1, 2), (0, 3), (0, 4), (1, 4), (2, 4), (2, 3),
              (3, 4), (3, 3), (3, 2), (3, 1), (2, 2), (1, 3))),
    (2, 1): ("h", (Fraction(5, 2), Fraction(7, 6)),
             ((2, 1), (3, 1), (2, 2), (3, 2), (3, 3), (3, 4), (2, 4),
              (1, 4), (1, 3), (1, 2), (0, 4), (0, 3), (0, 2), (0, 1),
              (0, 0), (1, 1), (2, 3), (1, 0), (2, 0), (3, 0))),
    (2, 2): ("h", (Fraction(5, 2), Fraction(13, 6)),
             ((2, 2), (3, 2), (2, 3), (3, 3), (3, 4), (2, 4), (1, 1),
              (1, 2), (1, 3), (1, 4), (0, 4), (0, 3), (0, 2), (0, 1),
              (0, 0), (1, 0), (2, 0), (3, 0), (3, 1), (2, 1))),
}


class _Frame:
    """Axis flips plus an optional transpose between the caller's grid and
    the working frame, where the horizontal neighbor points right, the
    vertical one points up, and the spike window is 4 wide by 5 tall."""

    def __init__(self, spec: GridSpec, flip_x: bool, flip_y: bool, transpose: bool):
        self.spec = spec
        self.flip_x = flip_x
        self.flip_y = flip_y
        self.transpose = transpose

    @property
    def dims(self):
        if self.transpose:
            return (self.spec.ny, self.spec.nx)
        return (self.spec.nx, self.spec.ny)

    def fwd(self, xy):
        x, y = xy
        if self.flip_x:
            x = self.spec.nx - 1 - x
        if self.flip_y:
            y = self.spec.ny - 1 - y
        return (y, x) if self.transpose else (x, y)

    def back(self, xy):
        if self.transpose:
            y, x = xy
        else:
            x, y = xy
        if self.flip_x:
            x = self.spec.nx - 1 - x
        if self.flip_y:
            y = self.spec.ny - 1 - y
        return (x, y)


def _find_side_unit_edge(cycle, axis, value):
    """Index i such that cycle[i] -> cycle[i+1] is a unit edge on the line
    coordinate[axis] == value. The construction keeps one available on
    every side of the covered rectangle."""
    n = len(cycle)
    other = 1 - axis
    for i in range(n):
        p, q = cycle[i], cycle[(i + 1) % n]
        if p[axis] == value and q[axis] == value and abs(p[other] - q[other]) == 1:
            return i
    raise RuntimeError("no unit edge available on the extension side")


def _extend_side(cycle, rect, side):
    """Grow the covered rectangle by one full row or column.

    One unit edge on the chosen side is replaced by a detour that climbs
    into the new line, sweeps it end to end, and drops back. The two
    slanted connectors stay inside the empty strip between the old side
    and the new line and their spans along the side do not overlap, so
    simplicity is preserved.
    """
    x0, y0, x1, y1 = rect
    if side in ("right", "left"):
        axis, lo, hi = 0, y0, y1
        value = x1 if side == "right" else x0
        new_c = x1 + 1 if side == "right" else x0 - 1
    else:
        axis, lo, hi = 1, x0, x1
        value = y1 if side == "up" else y0
        new_c = y1 + 1 if side == "up" else y0 - 1
    other = 1 - axis
    i = _find_side_unit_edge(cycle, axis, value)
    p, q = cycle[i], cycle[(i + 1) % len(cycle)]
    if p[other] < q[other]:
        sweep = range(lo, hi + 1)
    else:
        sweep = range(hi, lo - 1, -1)
    if axis == 0:
        detour = [(new_c, t) for t in sweep]
    else:
        detour = [(t, new_c) for t in sweep]
    out = cycle[:i + 1] + detour + cycle[i + 1:]
    if side == "right":
        rect2 = (x0, y0, x1 + 1, y1)
    elif side == "left":
        rect2 = (x0 - 1, y0, x1, y1)
    elif side == "up":
        rect2 = (x0, y0, x1, y1 + 1)
    else:
        rect2 = (x0, y0 - 1, x1, y1)
    return out, rect2


def _window_placements(spec: GridSpec, a, h, v):
    """Every way to drop the 4x5 working window onto the grid so that it
    contains the normalized triple, as (transpose, dx, dy) with (dx, dy)
    the triple's offset inside the window. Ordered most-interior first so
    the construction prefers offsets far from the window boundary."""
    flip_x = h[0] < a[0]
    flip_y = v[1] < a[1]
    ax = spec.nx - 1 - a[0] if flip_x else a[0]
    ay = spec.ny - 1 - a[1] if flip_y else a[1]
    lm, rm = ax, spec.nx - 1 - ax
    bm, tm = ay, spec.ny - 1 - ay
    cands = []
    for dx in range(max(0, 3 - rm), min(lm, 2) + 1):
        for dy in range(max(0, 4 - tm), min(bm, 3) + 1):
            cands.append((False, dx, dy))
    for dx in range(max(0, 3 - tm), min(bm, 2) + 1):
        for dy in range(max(0, 4 - rm), min(lm, 3) + 1):
            cands.append((True, dx, dy))
    cands.sort(key=lambda t: (abs(t[1] - 1) + abs(t[2] - 1), t[0], t[1], t[2]))
    return cands


@dataclass(frozen=True)
class GridNecessityWitness:
    """A polygonalization of the full grid that defeats every guard set
    leaving the L-shaped triple (a, h, v) unguarded.

    `chain` lists the triple in the cyclic order the polygon visits it.
    `unseen_vertex`, when present, is a triple point no guard sees;
    `uncovered_point` is an interior point no guard sees. `verified_by`
    records whether the full coverage oracle or the visibility predicate
    confirmed the failure.
    """

    polygon: PolygonCycle
    triple: tuple
    chain: tuple
    unseen_vertex: Optional[tuple]
    uncovered_point: Optional[tuple]
    guarded: tuple
    verified_by: str


_COVERAGE_VERIFY_LIMIT = 30


def grid_necessity_witness(spec: GridSpec, a, h, v,
                           verify: str = "auto") -> GridNecessityWitness:
    """Build a polygonalization of the grid not guarded by S minus {a, h, v}.

    a must be a non-corner grid point, h one of its horizontal neighbors
    and v one of its vertical neighbors. The construction reflects the
    triple so the neighbors point right and up, drops a prebuilt 4x5
    spiked cycle over a window containing the triple, then grows it one
    full row or column at a time until it covers the grid; the grid must
    contain a 4x5 window in some orientation.

    One family of triples is refused on principle: when h and v both lie
    on the boundary walls meeting at the grid corner diagonal from a, the
    corner point can only join the polygon between h and v, and the
    resulting right angle at the corner watches the whole triangle a-h-v
    through its open side. No polygonalization defeats such a triple, so
    a ValueError explains that instead of a witness.

    verify: "coverage" forces the exact oracle, "visibility" only checks
    the stored hidden point (and the unseen vertex when the window seed
    has one), "auto" picks by grid size.
    """
    a, h, v = tuple(a), tuple(h), tuple(v)
    for name, pt in (("a", a), ("h", h), ("v", v)):
        if not spec.contains(*pt):
            raise ValueError(f"{name}={pt} lies outside the grid")
    if not (abs(h[0] - a[0]) == 1 and h[1] == a[1]):
        raise ValueError("h must be a horizontal neighbor of a")
    if not (h != v and v[0] == a[0] and abs(v[1] - a[1]) == 1):
        raise ValueError("v must be a vertical neighbor of a")
    if spec.is_corner(*a):
        raise ValueError("a corner point cannot anchor the construction; "
                         "its two neighbors do not flank it")
    if spec.is_corner(h[0], v[1]):
        raise ValueError(
            "triple points into a grid corner: the corner can only join the "
            "polygon between h and v, and from there it guards the whole "
            "triangle a-h-v, so no witness polygonalization exists")
    fits = (spec.nx >= _SEED_W and spec.ny >= _SEED_H) or \
           (spec.nx >= _SEED_H and spec.ny >= _SEED_W)
    if not fits:
        raise ValueError(
            f"grid {spec.nx}x{spec.ny} has no {_SEED_W}x{_SEED_H} window; "
            "the construction needs one")
    if verify not in ("auto", "coverage", "visibility"):
        raise ValueError(f"unknown verify mode {verify!r}")

    placed = None
    for transpose, dx, dy in _window_placements(spec, a, h, v):
        if (dx, dy) in _SPIKE_SEEDS:
            placed = (transpose, dx, dy)
            break
    if placed is None:
        raise RuntimeError(
            "no prebuilt 4x5 window covers this triple's position")
    transpose, dx, dy = placed
    frame = _Frame(spec, flip_x=h[0] < a[0], flip_y=v[1] < a[1],
                   transpose=transpose)
    W, H = frame.dims
    aw = frame.fwd(a)
    wx, wy = aw[0] - dx, aw[1] - dy
    unseen_role, hidden, seed = _SPIKE_SEEDS[(dx, dy)]

    cycle = [(x + wx, y + wy) for x, y in seed]
    rect = (wx, wy, wx + _SEED_W - 1, wy + _SEED_H - 1)
    while rect[2] < W - 1:
        cycle, rect = _extend_side(cycle, rect, "right")
    while rect[0] > 0:
        cycle, rect = _extend_side(cycle, rect, "left")
    while rect[3] < H - 1:
        cycle, rect = _extend_side(cycle, rect, "up")
    while rect[1] > 0:
        cycle, rect = _extend_side(cycle, rect, "down")

    ps = spec.point_set()
    order = tuple(spec.index(*frame.back(p)) for p in cycle)
    P = PolygonCycle(ps, order)
    if not is_simple(ps, P):
        raise RuntimeError("extension produced a self-intersecting cycle")

    # The transpose swaps which caller neighbor plays the horizontal role
    # inside the working frame.
    role = {"a": a, "h": v if transpose else h, "v": h if transpose else v}
    pos = {P.order[i]: i for i in range(len(P.order))}
    chain = tuple(sorted((a, h, v), key=lambda p: pos[spec.index(*p)]))
    unseen = role[unseen_role] if unseen_role is not None else None

    triple_idx = {spec.index(*p) for p in (a, h, v)}
    guards = tuple(sorted(set(range(spec.n)) - triple_idx))
    gpts = [ps.point(g) for g in guards]
    if unseen is not None:
        upt = ps.point(spec.index(*unseen))
        if any(sees(P, gp, upt) for gp in gpts):
            raise RuntimeError("construction failed: a guard sees the vertex "
                               "the window seed promises hidden")

    use_coverage = verify == "coverage" or (
        verify == "auto" and spec.n <= _COVERAGE_VERIFY_LIMIT)
    if use_coverage:
        rep = coverage(P, guards)
        if rep.covered:
            raise RuntimeError("construction failed: coverage reports covered")
        uncovered = rep.uncovered_witness
        verified_by = "coverage"
    else:
        q = frame.back((hidden[0] + wx, hidden[1] + wy))
        if point_in_polygon(P, q) != "inside" or \
                any(sees(P, gp, q) for gp in gpts):
            raise RuntimeError("construction failed: the window's hidden "
                               "point is exposed after extension")
        uncovered = q
        verified_by = "visibility"

    return GridNecessityWitness(
        polygon=P,
        triple=(a, h, v),
        chain=chain,
        unseen_vertex=unseen,
        uncovered_point=uncovered,
        guarded=guards,
        verified_by=verified_by,
    )
