# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact integer predicates.

Same API and same results as ``_pure``. Values whose coordinates fit under
2^30 run through C integer arithmetic (the orientation determinant of such
values fits in 64 bits); anything larger is delegated to the pure-Python
twin, which uses arbitrary-precision ints. Exact in both regimes.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow
from libc.stdlib cimport malloc, free

from uniguard._kernels import _pure

BACKEND = "fast"

cdef long long LIM = 1 << 30


cdef inline bint _fits(object v, long long *out):
    cdef int overflow = 0
    cdef long long x
    if not isinstance(v, int):
        return False
    x = PyLong_AsLongLongAndOverflow(v, &overflow)
    if overflow:
        return False
    if x >= LIM or x <= -LIM:
        return False
    out[0] = x
    return True


cdef inline int _csign(long long d) nogil:
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


cdef inline int _corient(long long ax, long long ay, long long bx, long long by,
                         long long cx, long long cy) nogil:
    return _csign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


cdef inline bint _con_segment(long long ax, long long ay, long long bx, long long by,
                              long long px, long long py) nogil:
    if _corient(ax, ay, bx, by, px, py) != 0:
        return False
    if px < (ax if ax < bx else bx) or px > (ax if ax > bx else bx):
        return False
    if py < (ay if ay < by else by) or py > (ay if ay > by else by):
        return False
    return True


cdef inline bint _csegs_intersect(long long ax, long long ay, long long bx, long long by,
                                  long long cx, long long cy, long long dx, long long dy) nogil:
    cdef int o1 = _corient(ax, ay, bx, by, cx, cy)
    cdef int o2 = _corient(ax, ay, bx, by, dx, dy)
    cdef int o3 = _corient(cx, cy, dx, dy, ax, ay)
    cdef int o4 = _corient(cx, cy, dx, dy, bx, by)
    if o1 != o2 and o3 != o4 and o1 * o2 <= 0 and o3 * o4 <= 0:
        if (o1 != 0 or o2 != 0) and (o3 != 0 or o4 != 0):
            return True
    if o1 == 0 and _con_segment(ax, ay, bx, by, cx, cy):
        return True
    if o2 == 0 and _con_segment(ax, ay, bx, by, dx, dy):
        return True
    if o3 == 0 and _con_segment(cx, cy, dx, dy, ax, ay):
        return True
    if o4 == 0 and _con_segment(cx, cy, dx, dy, bx, by):
        return True
    return False


cdef inline bint _cdoubles_back(long long ux, long long uy, long long vx, long long vy,
                                long long wx, long long wy) nogil:
    if _corient(ux, uy, vx, vy, wx, wy) != 0:
        return False
    return (ux - vx) * (wx - vx) + (uy - vy) * (wy - vy) > 0


cdef class _Coords:
    """Scratch conversion of coordinate lists into C arrays; ok flags success."""
    cdef long long *xs
    cdef long long *ys
    cdef Py_ssize_t n
    cdef bint ok

    def __cinit__(self, pxs, pys):
        cdef Py_ssize_t i
        self.n = len(pxs)
        self.ok = True
        self.xs = <long long *> malloc(self.n * sizeof(long long))
        self.ys = <long long *> malloc(self.n * sizeof(long long))
        if self.xs == NULL or self.ys == NULL:
            self.ok = False
            return
        for i in range(self.n):
            if not _fits(pxs[i], &self.xs[i]) or not _fits(pys[i], &self.ys[i]):
                self.ok = False
                return

    def __dealloc__(self):
        if self.xs != NULL:
            free(self.xs)
        if self.ys != NULL:
            free(self.ys)


def orient(ax, ay, bx, by, cx, cy):
    cdef long long a0, a1, b0, b1, c0, c1
    if (_fits(ax, &a0) and _fits(ay, &a1) and _fits(bx, &b0) and
            _fits(by, &b1) and _fits(cx, &c0) and _fits(cy, &c1)):
        return _corient(a0, a1, b0, b1, c0, c1)
    return _pure.orient(ax, ay, bx, by, cx, cy)


def on_segment(ax, ay, bx, by, px, py):
    cdef long long a0, a1, b0, b1, p0, p1
    if (_fits(ax, &a0) and _fits(ay, &a1) and _fits(bx, &b0) and
            _fits(by, &b1) and _fits(px, &p0) and _fits(py, &p1)):
        return _con_segment(a0, a1, b0, b1, p0, p1)
    return _pure.on_segment(ax, ay, bx, by, px, py)


def segs_intersect(ax, ay, bx, by, cx, cy, dx, dy):
    cdef long long v[8]
    if (_fits(ax, &v[0]) and _fits(ay, &v[1]) and _fits(bx, &v[2]) and
            _fits(by, &v[3]) and _fits(cx, &v[4]) and _fits(cy, &v[5]) and
            _fits(dx, &v[6]) and _fits(dy, &v[7])):
        return _csegs_intersect(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7])
    return _pure.segs_intersect(ax, ay, bx, by, cx, cy, dx, dy)


def segs_cross_properly(ax, ay, bx, by, cx, cy, dx, dy):
    cdef long long v[8]
    cdef int o1, o2, o3, o4
    if (_fits(ax, &v[0]) and _fits(ay, &v[1]) and _fits(bx, &v[2]) and
            _fits(by, &v[3]) and _fits(cx, &v[4]) and _fits(cy, &v[5]) and
            _fits(dx, &v[6]) and _fits(dy, &v[7])):
        o1 = _corient(v[0], v[1], v[2], v[3], v[4], v[5])
        o2 = _corient(v[0], v[1], v[2], v[3], v[6], v[7])
        o3 = _corient(v[4], v[5], v[6], v[7], v[0], v[1])
        o4 = _corient(v[4], v[5], v[6], v[7], v[2], v[3])
        return o1 * o2 < 0 and o3 * o4 < 0
    return _pure.segs_cross_properly(ax, ay, bx, by, cx, cy, dx, dy)


def cycle_is_simple(xs, ys, order):
    cdef _Coords co = _Coords(xs, ys)
    cdef Py_ssize_t n = len(order)
    cdef Py_ssize_t i, j
    cdef int *idx
    cdef long long ax, ay, bx, by
    cdef bint bad = False
    if not co.ok or n < 3:
        return _pure.cycle_is_simple(xs, ys, order)
    idx = <int *> malloc(n * sizeof(int))
    if idx == NULL:
        return _pure.cycle_is_simple(xs, ys, order)
    for i in range(n):
        idx[i] = order[i]
    try:
        for i in range(n):
            if _cdoubles_back(co.xs[idx[i - 1] if i > 0 else idx[n - 1]],
                              co.ys[idx[i - 1] if i > 0 else idx[n - 1]],
                              co.xs[idx[i]], co.ys[idx[i]],
                              co.xs[idx[(i + 1) % n]], co.ys[idx[(i + 1) % n]]):
                return False
        for i in range(n):
            ax = co.xs[idx[i]]
            ay = co.ys[idx[i]]
            bx = co.xs[idx[(i + 1) % n]]
            by = co.ys[idx[(i + 1) % n]]
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                if _csegs_intersect(ax, ay, bx, by,
                                    co.xs[idx[j]], co.ys[idx[j]],
                                    co.xs[idx[(j + 1) % n]], co.ys[idx[(j + 1) % n]]):
                    return False
        return True
    finally:
        free(idx)


def chain_can_extend(xs, ys, chain, v):
    cdef _Coords co = _Coords(xs, ys)
    cdef Py_ssize_t k = len(chain)
    cdef Py_ssize_t i
    cdef long long ux, uy, vx, vy
    cdef int a, b, u
    if not co.ok:
        return _pure.chain_can_extend(xs, ys, chain, v)
    u = chain[k - 1]
    ux = co.xs[u]
    uy = co.ys[u]
    vx = co.xs[<int> v]
    vy = co.ys[<int> v]
    if k >= 2:
        a = chain[k - 2]
        if _cdoubles_back(co.xs[a], co.ys[a], ux, uy, vx, vy):
            return False
    for i in range(k - 2):
        a = chain[i]
        b = chain[i + 1]
        if _csegs_intersect(co.xs[a], co.ys[a], co.xs[b], co.ys[b], ux, uy, vx, vy):
            return False
    return True


def chain_can_close(xs, ys, chain):
    cdef _Coords co = _Coords(xs, ys)
    cdef Py_ssize_t n = len(chain)
    cdef Py_ssize_t i
    cdef long long ux, uy, wx, wy
    cdef int a, b
    if not co.ok or n < 3:
        return _pure.chain_can_close(xs, ys, chain)
    a = chain[n - 1]
    b = chain[0]
    ux = co.xs[a]
    uy = co.ys[a]
    wx = co.xs[b]
    wy = co.ys[b]
    if _cdoubles_back(co.xs[<int> chain[n - 2]], co.ys[<int> chain[n - 2]], ux, uy, wx, wy):
        return False
    if _cdoubles_back(ux, uy, wx, wy, co.xs[<int> chain[1]], co.ys[<int> chain[1]]):
        return False
    for i in range(1, n - 2):
        a = chain[i]
        b = chain[i + 1]
        if _csegs_intersect(co.xs[a], co.ys[a], co.xs[b], co.ys[b], ux, uy, wx, wy):
            return False
    return True


def point_in_polygon(xs, ys, order, qx, qy):
    cdef _Coords co = _Coords(xs, ys)
    cdef long long q0, q1, ax, ay, bx, by
    cdef Py_ssize_t n = len(order)
    cdef Py_ssize_t i
    cdef bint inside = False
    cdef int a, b
    if not co.ok or not _fits(qx, &q0) or not _fits(qy, &q1):
        return _pure.point_in_polygon(xs, ys, order, qx, qy)
    for i in range(n):
        a = order[i]
        b = order[(i + 1) % n]
        ax = co.xs[a]
        ay = co.ys[a]
        bx = co.xs[b]
        by = co.ys[b]
        if _con_segment(ax, ay, bx, by, q0, q1):
            return 2
        if ay <= q1 < by:
            if _corient(ax, ay, bx, by, q0, q1) > 0:
                inside = not inside
        elif by <= q1 < ay:
            if _corient(ax, ay, bx, by, q0, q1) < 0:
                inside = not inside
    return 1 if inside else 0


def segment_hits_any_edge(xs, ys, order, px, py, qx, qy, skip_endpoints):
    cdef _Coords co = _Coords(xs, ys)
    cdef long long p0, p1, q0, q1
    cdef Py_ssize_t n = len(order)
    cdef Py_ssize_t i
    cdef int a, b
    if (not co.ok or not _fits(px, &p0) or not _fits(py, &p1)
            or not _fits(qx, &q0) or not _fits(qy, &q1)):
        return _pure.segment_hits_any_edge(xs, ys, order, px, py, qx, qy, skip_endpoints)
    for i in range(n):
        a = order[i]
        b = order[(i + 1) % n]
        if a in skip_endpoints and b in skip_endpoints:
            continue
        if _csegs_intersect(co.xs[a], co.ys[a], co.xs[b], co.ys[b], p0, p1, q0, q1):
            return True
    return False
