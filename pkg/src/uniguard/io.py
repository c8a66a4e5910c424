"""JSON serialization for point sets, cycles, and guard sets.

Points serialize as {"points": [[num_x, den_x, num_y, den_y], ...]} with
every integer rendered as a decimal string so arbitrary precision survives
any JSON parser. Cycles are {"cycle": [i0, i1, ...]} and guard sets are
{"guarded": [indices]}.
"""

from __future__ import annotations

import json
from fractions import Fraction

from uniguard.geom import PointSet, PolygonCycle


def points_to_obj(ps: PointSet) -> dict:
    rows = []
    for i in range(len(ps)):
        x, y = ps.point(i)
        rows.append([str(x.numerator), str(x.denominator),
                     str(y.numerator), str(y.denominator)])
    return {"points": rows}


def points_from_obj(obj: dict) -> PointSet:
    pts = []
    for row in obj["points"]:
        nx, dx, ny, dy = (int(v) for v in row)
        pts.append((Fraction(nx, dx), Fraction(ny, dy)))
    return PointSet(pts)


def dump_points(ps: PointSet) -> str:
    return json.dumps(points_to_obj(ps))


def load_points(text: str) -> PointSet:
    return points_from_obj(json.loads(text))


def cycle_to_obj(P: PolygonCycle) -> dict:
    return {"cycle": [int(i) for i in P.order]}


def cycle_from_obj(obj: dict, ps: PointSet) -> PolygonCycle:
    return PolygonCycle(ps, tuple(int(i) for i in obj["cycle"]))


def dump_cycle(P: PolygonCycle) -> str:
    return json.dumps(cycle_to_obj(P))


def load_cycle(text: str, ps: PointSet) -> PolygonCycle:
    return cycle_from_obj(json.loads(text), ps)


def guards_to_obj(guarded) -> dict:
    return {"guarded": sorted(int(i) for i in guarded)}


def guards_from_obj(obj: dict) -> set:
    return {int(i) for i in obj["guarded"]}


def dump_guards(guarded) -> str:
    return json.dumps(guards_to_obj(guarded))


def load_guards(text: str) -> set:
    return guards_from_obj(json.loads(text))


def read_json_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json_file(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
