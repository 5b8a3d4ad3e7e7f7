"""Uniform access to every tree by kind and address."""

import logging
from typing import Callable, Dict, List, Sequence, Union

from ..arith.rational import Ratio
from ..arith.treewalk import (
    Step,
    TreeAddress,
    address_to_flipword,
    addresses_at_depth,
    addresses_to_depth,
    format_address,
    format_flipword,
)
from ..models.trees import NodeRecord, NodeValue, TreeDump, TreeKind
from .classic import GradientTriple, cw_node, farey_triple_node, sb_node
from .cluster import IntersectionVector, tree_d, tree_ddag
from .words import WordPair, WordTriple, christoffel_node, cohn_node, combined_cohn_node

logger = logging.getLogger(__name__)

TreeValue = Union[Ratio, GradientTriple, IntersectionVector, WordPair, WordTriple, str]

_NODE_FUNCTIONS: Dict[TreeKind, Callable[[Sequence[Step]], TreeValue]] = {
    TreeKind.SB: sb_node,
    TreeKind.CW: cw_node,
    TreeKind.FAREY: lambda addr: farey_triple_node(address_to_flipword(addr)),
    TreeKind.IVEC: lambda addr: tree_d(address_to_flipword(addr)),
    TreeKind.IVEC_INIT: lambda addr: tree_ddag(address_to_flipword(addr)),
    TreeKind.CHRISTOFFEL: christoffel_node,
    TreeKind.COHN: cohn_node,
    TreeKind.COHN_COMBINED: combined_cohn_node,
}


def node_value(kind: TreeKind, addr: Sequence[Step]) -> TreeValue:
    """Value of the ``kind`` tree at ``addr``."""
    return _NODE_FUNCTIONS[kind](addr)


def enumerate_level(kind: TreeKind, depth: int) -> List[TreeValue]:
    """The 2**depth values of one level, top to bottom (all-Right address first)."""
    return [node_value(kind, addr) for addr in addresses_at_depth(depth)]


def value_to_json(value: TreeValue) -> NodeValue:
    """Serialize a tree value: fractions and words as strings, tuples as arrays."""
    if isinstance(value, IntersectionVector):
        return value.to_list()
    if isinstance(value, GradientTriple):
        return [str(g) for g in value]
    if isinstance(value, WordPair):
        return [value.u, value.v]
    if isinstance(value, WordTriple):
        return list(value.entries)
    return str(value)


def node_record(kind: TreeKind, addr: TreeAddress) -> NodeRecord:
    return NodeRecord(
        path=format_address(addr),
        labels=format_flipword(address_to_flipword(addr)),
        value=value_to_json(node_value(kind, addr)),
    )


def dump_tree(kind: TreeKind, depth: int) -> TreeDump:
    """Dump every vertex of the ``kind`` tree down to ``depth`` in level order."""
    if depth < 0:
        raise ValueError(f"Depth must be non-negative, got {depth}")
    nodes = [node_record(kind, addr) for addr in addresses_to_depth(depth)]
    logger.info(f"Dumped {len(nodes)} vertices of the {kind.value} tree")
    return TreeDump(kind=kind, depth=depth, nodes=nodes)
