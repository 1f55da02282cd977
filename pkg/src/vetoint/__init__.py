"""Veto interval graphs and their approval/bitolerance relatives."""

from .errors import VetoError
from .model import (
    MIDPOINT,
    PROPER,
    UNIT,
    MarkedInterval,
    OrderingWord,
    Representation,
    SimpleGraph,
    flavor_flags,
    ordering_word,
    perturb_distinct,
    validate_representation,
)
from .semantics import SemanticsTag, adjacent, build_digraph, build_graph

__all__ = [
    "MIDPOINT",
    "PROPER",
    "UNIT",
    "MarkedInterval",
    "OrderingWord",
    "Representation",
    "SemanticsTag",
    "SimpleGraph",
    "VetoError",
    "adjacent",
    "build_digraph",
    "build_graph",
    "flavor_flags",
    "ordering_word",
    "perturb_distinct",
    "validate_representation",
]
