"""Exact curvature and Ricci-like soliton analysis for almost contact B-metric Lie groups."""

from .builtin import EXAMPLES, builtin_example
from .curvature import CurvaturePack, compute_pack
from .document import dump_document, parse_manifold
from .errors import AcbError, DocumentError, DomainError, EvaluationError, StructuralError
from .lie import Manifold, build_manifold, validate_lie_algebra, validate_structure
from .report import Report, run_pipeline, substitute_and_rerun
from .scalars import Scalar, parse_expression

__version__ = "0.1.0"

__all__ = [
    "AcbError",
    "CurvaturePack",
    "DocumentError",
    "DomainError",
    "EXAMPLES",
    "EvaluationError",
    "Manifold",
    "Report",
    "Scalar",
    "StructuralError",
    "build_manifold",
    "builtin_example",
    "compute_pack",
    "dump_document",
    "parse_expression",
    "parse_manifold",
    "run_pipeline",
    "substitute_and_rerun",
    "validate_lie_algebra",
    "validate_structure",
]
