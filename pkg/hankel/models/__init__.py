"""Data models module"""
from hankel.models.sequence import MorphicSpec, SequenceKind, SequenceSpec
from hankel.models.families import FAMILY_NAMES, FamilyRow, Mod2Table, PROPOSITION2_TABLE
from hankel.models.pade import PadeApproximant
from hankel.models.approximation import (
    ApproximationRecord,
    Certification,
    ExponentBound,
    SandwichStatus,
)
from hankel.models.report import (
    CheckResult,
    CheckStatus,
    IdentityCheck,
    OutputFormat,
    RunConfig,
    VerificationReport,
)

__all__ = [
    "MorphicSpec",
    "SequenceKind",
    "SequenceSpec",
    "FAMILY_NAMES",
    "FamilyRow",
    "Mod2Table",
    "PROPOSITION2_TABLE",
    "PadeApproximant",
    "ApproximationRecord",
    "Certification",
    "ExponentBound",
    "SandwichStatus",
    "CheckResult",
    "CheckStatus",
    "IdentityCheck",
    "OutputFormat",
    "RunConfig",
    "VerificationReport",
]
