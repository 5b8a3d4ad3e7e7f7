"""Renderers for tree dumps and click parameter types."""

from typing import Any, Callable, Dict, List, Optional

import click

from ..arith.rational import Ratio
from ..errors import FareyDualityError
from ..models.trees import NodeRecord, NodeValue, OutputFormat, TreeDump


class RatioParamType(click.ParamType):
    """Click parameter accepting reduced fractions written as ``n/d``."""

    name = "fraction"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Ratio:
        if isinstance(value, Ratio):
            return value
        try:
            return Ratio.parse(str(value), reduced_only=True)
        except FareyDualityError as e:
            self.fail(str(e), param, ctx)


RATIO = RatioParamType()


def value_text(value: NodeValue) -> str:
    """Plain-text form of a node value: fractions and words as-is, vectors in brackets."""
    if isinstance(value, str):
        return value
    if all(isinstance(item, int) for item in value):
        return "[" + " ".join(str(item) for item in value) + "]"
    return "(" + ", ".join(str(item) for item in value) + ")"


def render_text(dump: TreeDump) -> str:
    """One value per line in level order."""
    return "\n".join(value_text(node.value) for node in dump.nodes)


def render_json(dump: TreeDump) -> str:
    return dump.model_dump_json(indent=2)


def _dot_id(node: NodeRecord) -> str:
    return f'"{node.path or "root"}"'


def render_dot(dump: TreeDump) -> str:
    """Graphviz digraph; node IDs are addresses and edges carry their flip labels."""
    by_path = {node.path: node for node in dump.nodes}
    lines: List[str] = [f'digraph "{dump.kind.value}" {{', "  node [shape=box];"]
    for node in dump.nodes:
        lines.append(f'  {_dot_id(node)} [label="{value_text(node.value)}"];')
    for node in dump.nodes:
        if not node.path:
            continue
        parent = by_path[node.path[:-1]]
        lines.append(f'  {_dot_id(parent)} -> {_dot_id(node)} [label="{node.labels[-1]}"];')
    lines.append("}")
    return "\n".join(lines)


RENDERERS: Dict[OutputFormat, Callable[[TreeDump], str]] = {
    OutputFormat.JSON: render_json,
    OutputFormat.DOT: render_dot,
    OutputFormat.TEXT: render_text,
}


def render(dump: TreeDump, output_format: OutputFormat) -> str:
    """Serialize a dump in the requested format."""
    return RENDERERS[output_format](dump)
