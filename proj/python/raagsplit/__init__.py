"""Abelian splittings, quasi-median geometry and thickness chains for graph products."""

from ._raagsplit import (
    InvariantViolation,
    ResourceError,
    SAFE_MARGIN,
    STATED_MARGIN,
    ball,
    classify,
    cut_tree,
    decompose,
    is_unpinched,
    morse_hausdorff_bound,
    normal_form,
    spectral_margin,
    thick_chain,
    tree_ray_finder,
)

__all__ = [
    "InvariantViolation",
    "ResourceError",
    "SAFE_MARGIN",
    "STATED_MARGIN",
    "ball",
    "classify",
    "cut_tree",
    "decompose",
    "is_unpinched",
    "morse_hausdorff_bound",
    "normal_form",
    "spectral_margin",
    "thick_chain",
    "tree_ray_finder",
]
