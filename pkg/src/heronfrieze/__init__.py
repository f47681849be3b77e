"""Heronian friezes of rational polygons and exact checks of the identities
satisfied by friezes of cyclic polygons."""

from .exactnum import ExactRational, det_exact, rat
from .frieze import (
    FriezeTable,
    HeronianDiamond,
    PlaneFriezeTable,
    build_frieze,
    build_plane_frieze,
    diamond_from_quad,
    is_equilateral,
    render_frieze,
    verify_diamond,
)
from .geometry import (
    PolygonConfig,
    make_cyclic_polygon,
    make_polygon,
    perturb_radially,
    random_cyclic_polygon,
    random_polygon,
)
from .measurements import MeasurementTable, build_table

__all__ = [
    "ExactRational", "det_exact", "rat",
    "FriezeTable", "HeronianDiamond", "PlaneFriezeTable", "build_frieze", "build_plane_frieze",
    "diamond_from_quad", "is_equilateral", "render_frieze", "verify_diamond",
    "PolygonConfig", "make_cyclic_polygon", "make_polygon", "perturb_radially",
    "random_cyclic_polygon", "random_polygon", "MeasurementTable", "build_table",
]

__version__ = "0.1.0"
