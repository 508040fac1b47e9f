"""Hopf-Galois structure counts via regular subgroups of holomorphs."""

from hopfgalois._core import (
    Group,
    HgError,
    aut_order,
    build,
    cfsg_checks,
    classify_regulars,
    count_e,
    gp_direct_count,
    hol_order,
    is_perfect,
    is_solvable,
    parse_group,
    schur_multiplier,
    serialize,
    verify_336,
    __version__,
)

__all__ = [
    "Group",
    "HgError",
    "aut_order",
    "build",
    "cfsg_checks",
    "classify_regulars",
    "count_e",
    "gp_direct_count",
    "hol_order",
    "is_perfect",
    "is_solvable",
    "parse_group",
    "schur_multiplier",
    "serialize",
    "verify_336",
    "__version__",
]
