"""Finite-model workbench for protomodular algebras given by operation tables."""

from .errors import (
    EvaluationError,
    FormatError,
    InvariantViolation,
    MalcevViolation,
    ModelError,
    NotRightCancellable,
    ProtoAlgError,
    SearchBoundsError,
    TheoryError,
)
from .model import (
    FiniteModel,
    ProtomodularFrame,
    Signature,
    eval_op,
    parse_algebra,
    serialize_algebra,
)

__version__ = "0.1.0"

__all__ = [
    "EvaluationError",
    "FiniteModel",
    "FormatError",
    "InvariantViolation",
    "MalcevViolation",
    "ModelError",
    "NotRightCancellable",
    "ProtoAlgError",
    "ProtomodularFrame",
    "SearchBoundsError",
    "Signature",
    "TheoryError",
    "eval_op",
    "parse_algebra",
    "serialize_algebra",
]
