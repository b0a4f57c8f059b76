"""
API-adaptere som kobler Pydantic-skjemaer til kjernefunksjonaliteten.
"""

from .adapters import (
    CodeAdapter,
    CosetAdapter,
    GraphAdapter,
    GroupAdapter,
    VerificationAdapter,
    dump,
    dump_many,
)

__all__ = [
    "CodeAdapter",
    "CosetAdapter",
    "GraphAdapter",
    "GroupAdapter",
    "VerificationAdapter",
    "dump",
    "dump_many",
]
