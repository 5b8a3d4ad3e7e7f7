"""Data models for dumps and reports."""

from .report import Counterexample, ReportBuilder, VerificationReport
from .trees import NodeRecord, NodeValue, OutputFormat, TreeDump, TreeKind

__all__ = [
    "Counterexample",
    "ReportBuilder",
    "VerificationReport",
    "NodeRecord",
    "NodeValue",
    "OutputFormat",
    "TreeDump",
    "TreeKind",
]
