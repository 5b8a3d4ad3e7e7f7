"""Tree dump models."""

from enum import Enum
from typing import List, Union

from pydantic import BaseModel, ConfigDict, Field


class TreeKind(str, Enum):
    """Trees that can be enumerated."""

    SB = "sb"
    CW = "cw"
    FAREY = "farey"
    IVEC = "ivec"
    IVEC_INIT = "ivec-init"
    CHRISTOFFEL = "christoffel"
    COHN = "cohn"
    COHN_COMBINED = "cohn-combined"


class OutputFormat(str, Enum):
    """Serialization formats for tree dumps."""

    JSON = "json"
    DOT = "dot"
    TEXT = "text"


NodeValue = Union[str, List[int], List[str]]


class NodeRecord(BaseModel):
    """One vertex of a dumped tree."""

    path: str = Field(..., description="Address over L and R; empty for the root")
    labels: str = Field(..., description="Flip word of the same vertex as a digit string")
    value: NodeValue = Field(
        ..., description="Fraction string, intersection vector, or word entries"
    )

    model_config = ConfigDict(frozen=True)


class TreeDump(BaseModel):
    """Every vertex of a tree down to a given depth, in level order."""

    kind: TreeKind = Field(..., description="Which tree was enumerated")
    depth: int = Field(..., ge=0, description="Deepest level included")
    nodes: List[NodeRecord] = Field(default_factory=list, description="Vertices in level order")

    model_config = ConfigDict(frozen=True)
