"""Openness and flatness of morphisms to affine space via fibred powers."""

from ._fibrecheck import (
    Error,
    InvalidArgument,
    LayoutMismatch,
    ParseError,
    Problem,
    ResourceLimitError,
    SoundnessError,
    UnsupportedInput,
    Verdict,
    __version__,
    check_flatness,
    check_openness,
    fibre_dim,
    groebner_basis,
    krull_dim,
    parse_problem,
    render_report,
    run,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "LayoutMismatch",
    "ParseError",
    "Problem",
    "ResourceLimitError",
    "SoundnessError",
    "UnsupportedInput",
    "Verdict",
    "__version__",
    "check_flatness",
    "check_openness",
    "fibre_dim",
    "groebner_basis",
    "krull_dim",
    "parse_problem",
    "render_report",
    "run",
]
