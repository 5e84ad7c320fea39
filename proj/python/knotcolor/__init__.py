"""Exact Fox n-coloring invariants of knots.

Thin wrapper over the C++ core: parse PD codes, compute determinants,
nullities and coloring sets, and evaluate the pretzel closed forms.
"""

from ._knotcolor import (
    KnotError,
    PlanarDiagram,
    coloring_count,
    coloring_group,
    colorings,
    determinant,
    goeritz_determinant,
    goeritz_matrix,
    is_n_colorable,
    nullity,
    parse_pd,
    precoloring_matrix,
    pretzel_determinant,
    pretzel_diagram,
    pretzel_nullity,
)

__all__ = [
    "KnotError",
    "PlanarDiagram",
    "coloring_count",
    "coloring_group",
    "colorings",
    "determinant",
    "goeritz_determinant",
    "goeritz_matrix",
    "is_n_colorable",
    "nullity",
    "parse_pd",
    "precoloring_matrix",
    "pretzel_determinant",
    "pretzel_diagram",
    "pretzel_nullity",
]
