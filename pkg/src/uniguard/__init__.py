"""uniguard: universal guard sets for planar point sets.

Construct guard sets that cover every simple polygonalization of a point
set, verify or falsify candidate guard sets exactly, and generate the
known hard instance families.
"""

__version__ = "0.1.0"

from uniguard.geom import (
    PointSet,
    PolygonCycle,
    Scalar,
    ShellDecomposition,
    area,
    convex_hull,
    convex_layers,
    is_simple,
    orient,
    point_in_polygon,
    sees,
    triangulate,
)
from uniguard.shells import (
    GuardSet,
    PartitionCertificate,
    TangentPair,
    choose_shell,
    guards_m_shells,
    guards_one_shell,
    guards_two_shells,
    partition_certificate,
    tangent_points,
)

__all__ = [
    "PointSet",
    "PolygonCycle",
    "Scalar",
    "ShellDecomposition",
    "area",
    "convex_hull",
    "convex_layers",
    "is_simple",
    "orient",
    "point_in_polygon",
    "sees",
    "triangulate",
    "GuardSet",
    "PartitionCertificate",
    "TangentPair",
    "choose_shell",
    "guards_m_shells",
    "guards_one_shell",
    "guards_two_shells",
    "partition_certificate",
    "tangent_points",
    "__version__",
]
