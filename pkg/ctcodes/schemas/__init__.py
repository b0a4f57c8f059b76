"""
Pydantic schemas for kjørekonfigurasjon og rapporter.
"""

from .report_schemas import (
    SCHEMA_VERSION,
    Task,
    OutputFormat,
    RunConfig,
    CodeParameters,
    CodeSummaryOutput,
    IntersectionArrayOutput,
    OrbitTableOutput,
    CosetProfileOutput,
    WeightCount,
    HistogramOutput,
    CoverOutput,
    GraphClassificationOutput,
    GraphExportOutput,
    GroupOutput,
    ClaimStatus,
    TheoremReport,
    VerificationReport,
)

__all__ = [
    "SCHEMA_VERSION",
    "Task",
    "OutputFormat",
    "RunConfig",
    "CodeParameters",
    "CodeSummaryOutput",
    "IntersectionArrayOutput",
    "OrbitTableOutput",
    "CosetProfileOutput",
    "WeightCount",
    "HistogramOutput",
    "CoverOutput",
    "GraphClassificationOutput",
    "GraphExportOutput",
    "GroupOutput",
    "ClaimStatus",
    "TheoremReport",
    "VerificationReport",
]
