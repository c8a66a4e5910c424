"""Pure-Python exact integer predicates.

Reference implementation of the kernel API. Operates on plain Python ints
(arbitrary precision), so every result is exact. The compiled twin in
``_fast.pyx`` implements the same functions with an overflow-guarded C
fast path; both must agree bit for bit.

Coordinate arrays are flat lists/sequences of ints. Cycles and chains are
index sequences into those arrays.
"""

BACKEND = "pure"


def orient(ax, ay, bx, by, cx, cy):
    """Sign of the cross product (b-a) x (c-a): +1 left turn, 0 collinear, -1 right."""
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def on_segment(ax, ay, bx, by, px, py):
    """True iff p lies on the closed segment ab (collinear and inside the bbox)."""
    if orient(ax, ay, bx, by, px, py) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def segs_intersect(ax, ay, bx, by, cx, cy, dx, dy):
    """True iff closed segments ab and cd share at least one point."""
    o1 = orient(ax, ay, bx, by, cx, cy)
    o2 = orient(ax, ay, bx, by, dx, dy)
    o3 = orient(cx, cy, dx, dy, ax, ay)
    o4 = orient(cx, cy, dx, dy, bx, by)
    if o1 != o2 and o3 != o4 and o1 * o2 <= 0 and o3 * o4 <= 0:
        # At most one of each pair may be zero here; covers proper and T contacts.
        if (o1 != 0 or o2 != 0) and (o3 != 0 or o4 != 0):
            return True
    if o1 == 0 and on_segment(ax, ay, bx, by, cx, cy):
        return True
    if o2 == 0 and on_segment(ax, ay, bx, by, dx, dy):
        return True
    if o3 == 0 and on_segment(cx, cy, dx, dy, ax, ay):
        return True
    if o4 == 0 and on_segment(cx, cy, dx, dy, bx, by):
        return True
    return False


def segs_cross_properly(ax, ay, bx, by, cx, cy, dx, dy):
    """True iff the open interiors cross transversally at a single point."""
    o1 = orient(ax, ay, bx, by, cx, cy)
    o2 = orient(ax, ay, bx, by, dx, dy)
    o3 = orient(cx, cy, dx, dy, ax, ay)
    o4 = orient(cx, cy, dx, dy, bx, by)
    return o1 * o2 < 0 and o3 * o4 < 0


def _doubles_back(xs, ys, u, v, w):
    # Edges (u,v),(v,w): collinear with w on u's side of v means the chain retraces.
    if orient(xs[u], ys[u], xs[v], ys[v], xs[w], ys[w]) != 0:
        return False
    dot = (xs[u] - xs[v]) * (xs[w] - xs[v]) + (ys[u] - ys[v]) * (ys[w] - ys[v])
    return dot > 0


def cycle_is_simple(xs, ys, order):
    """Exact simplicity of the closed cycle: straight angles allowed, no edge
    overlap at shared vertices, no contact between non-adjacent edges."""
    n = len(order)
    if n < 3:
        return False
    for i in range(n):
        if _doubles_back(xs, ys, order[i - 1], order[i], order[(i + 1) % n]):
            return False
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            c, d = order[j], order[(j + 1) % n]
            if segs_intersect(xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]):
                return False
    return True


def chain_can_extend(xs, ys, chain, v):
    """True iff appending v to the open chain keeps it weakly simple (the new
    edge touches no non-adjacent chain edge and does not retrace the last)."""
    k = len(chain)
    u = chain[-1]
    if k >= 2 and _doubles_back(xs, ys, chain[-2], u, v):
        return False
    vx, vy = xs[v], ys[v]
    ux, uy = xs[u], ys[u]
    for i in range(k - 2):
        a, b = chain[i], chain[i + 1]
        if segs_intersect(xs[a], ys[a], xs[b], ys[b], ux, uy, vx, vy):
            return False
    return True


def chain_can_close(xs, ys, chain):
    """True iff the closing edge chain[-1] -> chain[0] keeps the cycle simple."""
    n = len(chain)
    if n < 3:
        return False
    u, w = chain[-1], chain[0]
    if _doubles_back(xs, ys, chain[-2], u, w):
        return False
    if _doubles_back(xs, ys, u, w, chain[1]):
        return False
    ux, uy, wx, wy = xs[u], ys[u], xs[w], ys[w]
    for i in range(1, n - 2):
        a, b = chain[i], chain[i + 1]
        if segs_intersect(xs[a], ys[a], xs[b], ys[b], ux, uy, wx, wy):
            return False
    return True


def point_in_polygon(xs, ys, order, qx, qy):
    """Classify integer point q against the cycle: 0 outside, 1 inside, 2 boundary."""
    n = len(order)
    inside = False
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        axv, ayv, bxv, byv = xs[a], ys[a], xs[b], ys[b]
        if on_segment(axv, ayv, bxv, byv, qx, qy):
            return 2
        if ayv <= qy < byv:
            if orient(axv, ayv, bxv, byv, qx, qy) > 0:
                inside = not inside
        elif byv <= qy < ayv:
            if orient(axv, ayv, bxv, byv, qx, qy) < 0:
                inside = not inside
    return 1 if inside else 0


def segment_hits_any_edge(xs, ys, order, px, py, qx, qy, skip_endpoints):
    """True iff closed segment pq touches some cycle edge, ignoring edges whose
    both endpoints are in skip_endpoints. Helper for diagonal tests."""
    n = len(order)
    for i in range(n):
        a, b = order[i], order[(i + 1) % n]
        if a in skip_endpoints and b in skip_endpoints:
            continue
        if segs_intersect(xs[a], ys[a], xs[b], ys[b], px, py, qx, qy):
            return True
    return False
