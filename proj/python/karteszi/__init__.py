"""Karteszi configurations K(n; l, m) built from regular polygon diagonals."""

from ._core import (
    IncidenceStructure,
    KConfig,
    KParams,
    KartesziError,
    Verdict,
    are_isomorphic,
    astral_obstruction,
    build,
    celestial_symbol,
    certificate,
    concurrent_triples,
    cross_validate,
    incidence,
    is_configuration,
    is_connected,
    is_exceptional,
    pr_equation,
    read_document,
    read_incidence,
    render_svg,
    to_json,
    write_document,
)

__all__ = [
    "IncidenceStructure",
    "KConfig",
    "KParams",
    "KartesziError",
    "Verdict",
    "are_isomorphic",
    "astral_obstruction",
    "build",
    "celestial_symbol",
    "certificate",
    "concurrent_triples",
    "cross_validate",
    "incidence",
    "is_configuration",
    "is_connected",
    "is_exceptional",
    "pr_equation",
    "read_document",
    "read_incidence",
    "render_svg",
    "to_json",
    "write_document",
]
