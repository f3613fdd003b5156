"""Semi-regular tilings of the hyperbolic plane."""

from ._core import (
    Error,
    IoError,
    ParseError,
    RefusalError,
    SchemaError,
    Tiling,
    VertexType,
    appears,
    build,
    canonical_code,
    check,
    classify_degree3,
    continuations,
    coordinates,
    count_straight_chains,
    dual,
    from_json,
    geometric_errors,
    interior_angle,
    is_isomorphic,
    layer_stats,
    side_length,
    to_json,
    to_svg,
    truncate,
    verify,
)

__all__ = [
    "Error",
    "IoError",
    "ParseError",
    "RefusalError",
    "SchemaError",
    "Tiling",
    "VertexType",
    "appears",
    "build",
    "canonical_code",
    "check",
    "classify_degree3",
    "continuations",
    "coordinates",
    "count_straight_chains",
    "dual",
    "from_json",
    "geometric_errors",
    "interior_angle",
    "is_isomorphic",
    "layer_stats",
    "side_length",
    "to_json",
    "to_svg",
    "truncate",
    "verify",
]
