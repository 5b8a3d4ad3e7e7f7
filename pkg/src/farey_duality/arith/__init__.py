"""Exact rational arithmetic and binary-tree addressing."""

from .approx import best_approximation, parse_decimal
from .rational import (
    INFINITY,
    MINUS_ONE,
    ONE,
    ZERO,
    Ratio,
    cross_det,
    farey_difference,
    mediant,
    reduce,
)
from .treewalk import (
    FlipWord,
    LabelState,
    Step,
    TreeAddress,
    address_to_flipword,
    addresses_at_depth,
    addresses_to_depth,
    flipword_to_address,
    format_address,
    format_flipword,
    parse_address,
    parse_flipword,
    root_state,
    step_labels,
    third_label,
)

__all__ = [
    "best_approximation",
    "parse_decimal",
    "INFINITY",
    "MINUS_ONE",
    "ONE",
    "ZERO",
    "Ratio",
    "cross_det",
    "farey_difference",
    "mediant",
    "reduce",
    "FlipWord",
    "LabelState",
    "Step",
    "TreeAddress",
    "address_to_flipword",
    "addresses_at_depth",
    "addresses_to_depth",
    "flipword_to_address",
    "format_address",
    "format_flipword",
    "parse_address",
    "parse_flipword",
    "root_state",
    "step_labels",
    "third_label",
]
