"""Kernel dispatch: compiled predicates when available, pure Python otherwise.

Set UNIGUARD_PURE=1 to force the pure backend (used by the parity tests and
the benchmark).
"""

import os

from uniguard._kernels import _pure

if os.environ.get("UNIGUARD_PURE") == "1":
    _impl = _pure
else:
    try:
        from uniguard._kernels import _fast as _impl
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND

orient = _impl.orient
on_segment = _impl.on_segment
segs_intersect = _impl.segs_intersect
segs_cross_properly = _impl.segs_cross_properly
cycle_is_simple = _impl.cycle_is_simple
chain_can_extend = _impl.chain_can_extend
chain_can_close = _impl.chain_can_close
point_in_polygon = _impl.point_in_polygon
segment_hits_any_edge = _impl.segment_hits_any_edge
