"""Extremal counts, constructions, saturation and zigzag decompositions."""

from .bounds import (
    StaircaseProfile,
    classify_pattern,
    conjectured_max_ones_k1,
    formula_max_ones,
    k1_pattern,
    max_ones_312_avoiding,
    max_ones_identity_avoiding,
    staircase_max_ones,
)
from .construct import (
    DELETE,
    construct_312_maximal,
    construct_312_shadow,
    construct_canonical_identity_avoiding,
    decompose_Jn,
    greedy_saturate,
    validate_maximal,
)
from .zigzag import (
    LR,
    RL,
    FerrersShape,
    ZigzagPath,
    crucial_and_corner_ones,
    ferrers_of_zigzag,
    parse_path,
    path_from_moves,
    peel_zigzag_decomposition,
    random_lr_path,
    recognize_zigzag,
    zigzag_from_ferrers,
)

__all__ = [
    "StaircaseProfile",
    "classify_pattern",
    "conjectured_max_ones_k1",
    "formula_max_ones",
    "k1_pattern",
    "max_ones_312_avoiding",
    "max_ones_identity_avoiding",
    "staircase_max_ones",
    "DELETE",
    "construct_312_maximal",
    "construct_312_shadow",
    "construct_canonical_identity_avoiding",
    "decompose_Jn",
    "greedy_saturate",
    "validate_maximal",
    "LR",
    "RL",
    "FerrersShape",
    "ZigzagPath",
    "crucial_and_corner_ones",
    "ferrers_of_zigzag",
    "parse_path",
    "path_from_moves",
    "peel_zigzag_decomposition",
    "random_lr_path",
    "recognize_zigzag",
    "zigzag_from_ferrers",
]
