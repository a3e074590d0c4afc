"""Graph families, edge colourings, the contraction set F and the distance-2 map."""

from .coloring import MAX_COLORS, ColoringError, ProperEdgeColoring, grid_coloring
from .families import (
    COPIES,
    GENERATORS,
    HUB,
    FamilyError,
    copy_name,
    gen_G,
    gen_grid,
    gen_H,
    gen_Hprime,
    generate,
    grid_name,
    parse_name,
    x_name,
    y_name,
)
from .transduction import alpha, contraction_set
from .vertex_minor import ScriptError, apply_script, apply_step, itm_as_vertex_minor

__all__ = [
    "MAX_COLORS",
    "ColoringError",
    "ProperEdgeColoring",
    "grid_coloring",
    "COPIES",
    "GENERATORS",
    "HUB",
    "FamilyError",
    "copy_name",
    "gen_G",
    "gen_grid",
    "gen_H",
    "gen_Hprime",
    "generate",
    "grid_name",
    "parse_name",
    "x_name",
    "y_name",
    "alpha",
    "contraction_set",
    "ScriptError",
    "apply_script",
    "apply_step",
    "itm_as_vertex_minor",
]
