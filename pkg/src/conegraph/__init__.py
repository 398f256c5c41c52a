"""Theta, Yao and Yao-Yao cone graphs: construction, stretch, and Yao-Yao witness paths."""
from importlib.metadata import PackageNotFoundError, version as _version

try:
    __version__ = _version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.0.0"

from ._backend import BACKEND
from .formats import export_graph, import_graph, parse_points
from .gen import GenKind, GenSpec, circle_with_center, generate, uniform
from .geometry import (
    CanonicalTriangle,
    ConeSystem,
    DegenerateDirectionError,
    Point,
    PointSet,
    canonical_triangle,
    cone_index,
    strictly_inside,
)
from .graphs import (
    GeometricDigraph,
    GraphKind,
    build_graph,
    build_half_theta6,
    build_theta,
    build_yao,
    build_yao_yao,
)
from .lemmas import ValidationReport, validate_lemma_bounds
from .metrics import StretchReport, TheoreticalBound, degree_stats, stretch_report, theoretical_bound
from .paths import Path, PreconditionError, SpannerContext, lemma1_canonical_path, trapezoid_path
from .witness import DescentViolation, WitnessCertificate, WitnessError, extract_witness

__all__ = [
    "BACKEND", "CanonicalTriangle", "ConeSystem", "DegenerateDirectionError", "DescentViolation",
    "GenKind", "GenSpec", "GeometricDigraph", "GraphKind", "Path", "Point", "PointSet",
    "PreconditionError", "SpannerContext", "StretchReport", "TheoreticalBound", "ValidationReport",
    "WitnessCertificate", "WitnessError", "build_graph", "build_half_theta6", "build_theta",
    "build_yao", "build_yao_yao", "canonical_triangle", "cone_index", "degree_stats",
    "export_graph", "extract_witness", "generate", "import_graph", "lemma1_canonical_path",
    "parse_points", "stretch_report", "strictly_inside", "theoretical_bound",
    "trapezoid_path", "uniform", "circle_with_center", "validate_lemma_bounds",
]
