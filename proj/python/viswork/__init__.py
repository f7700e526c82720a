"""Visibility polygons in simple polygons under tight workspace budgets."""

from ._core import (
    Polygon,
    depth_cap,
    generate_text,
    load_text,
    oracle_vis,
    reflex_count,
    vis_dnc,
    vis_polygon,
)

__all__ = [
    "Polygon",
    "depth_cap",
    "generate_text",
    "load_text",
    "oracle_vis",
    "reflex_count",
    "vis_dnc",
    "vis_polygon",
]
