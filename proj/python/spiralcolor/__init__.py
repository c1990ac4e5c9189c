"""Spiral-chain colouring of planar embeddings."""

from ._core import (
    Embedding,
    Error,
    color,
    decompose,
    exact,
    layout,
    maximal,
    named,
    named_instances,
    outerplanar,
    parse_rot,
    render_svg,
    triangle_free,
    verify,
)

__all__ = [
    "Embedding",
    "Error",
    "color",
    "decompose",
    "exact",
    "layout",
    "maximal",
    "named",
    "named_instances",
    "outerplanar",
    "parse_rot",
    "render_svg",
    "triangle_free",
    "verify",
]
