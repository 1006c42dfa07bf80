"""Exact classification of torus-equivariant singularities from polyhedral divisor data.

The public surface re-exported here covers the full pipeline: curve models
and divisor classes (curves), polyhedral divisors with properness and
evaluation (pdiv), the singularity classifiers (classify), the toric model
over affine space (toric), graded section rings (sections), and the JSON
problem/report formats (problem_io). Everything computes in exact rational
arithmetic.
"""

from .classify import (
    ClassifyReport,
    CohenMacaulayReport,
    EllipticReport,
    GorensteinReport,
    H1Report,
    RationalReport,
    RaySlope,
    classify_report,
    cohen_macaulay,
    decide_floor_bound,
    elliptic_singularity,
    floor_degree_profile,
    gorenstein,
    h1_report,
    minimal_elliptic_verdict,
    rational_singularities,
    ray_slopes,
)
from .curves import (
    EC_ORIGIN,
    P1_INFINITY,
    AbstractAffineCurve,
    AbstractProjectiveCurve,
    AffineLine,
    EllipticCurveQ,
    EllipticOrigin,
    EllipticPoint,
    LabelPoint,
    P1Point,
    ProjectiveLine,
    QDivisor,
    RationalPoint,
    canonical_divisor,
    degree,
    divisor,
    ec_add,
    ec_multiple,
    ec_neg,
    floor_divisor,
    h0_dim,
    h1_dim,
    is_integral,
    is_principal,
    is_torsion_class,
    p1_point,
)
from .errors import (
    CurveDomainError,
    InvalidInputError,
    NonIntegralError,
    NotProperError,
    ParseError,
    PointError,
    PolydivError,
    RankMismatchError,
    ShapeError,
    UnsupportedRankError,
    WeightError,
)
from .geometry import (
    Cone,
    TailedPolyhedron,
    chamber_fan,
    cone_contains,
    dual_cone,
    make_cone,
    make_polyhedron,
    support_eval,
)
from .pdiv import (
    AffineSpace,
    PolyhedralDivisor,
    PropernessReport,
    contraction_iso_codim1,
    degree_polyhedron,
    evaluate,
    is_proper,
    polyhedral_divisor,
    require_proper,
)
from .problem_io import emit_problem, emit_report, parse_problem, report_payload
from .sections import (
    RelationBlock,
    RingGenerator,
    RingPresentation,
    graded_dimension,
    hilbert_series,
    minimal_generators,
    monomial_basis,
    multiply_sections,
    relation_blocks,
    ring_presentation,
)
from .toric import (
    ConeDiagnostics,
    ToricCone,
    cone_diagnostics,
    monomial_admissible,
    toric_cone,
    weight_in_dual,
)
from .verdicts import Verdict

__version__ = "0.1.0"

__all__ = [
    "AbstractAffineCurve",
    "AbstractProjectiveCurve",
    "AffineLine",
    "AffineSpace",
    "ClassifyReport",
    "CohenMacaulayReport",
    "Cone",
    "ConeDiagnostics",
    "CurveDomainError",
    "EC_ORIGIN",
    "EllipticCurveQ",
    "EllipticOrigin",
    "EllipticPoint",
    "EllipticReport",
    "GorensteinReport",
    "H1Report",
    "InvalidInputError",
    "LabelPoint",
    "NonIntegralError",
    "NotProperError",
    "P1_INFINITY",
    "P1Point",
    "ParseError",
    "PointError",
    "PolydivError",
    "PolyhedralDivisor",
    "ProjectiveLine",
    "PropernessReport",
    "QDivisor",
    "RankMismatchError",
    "RationalPoint",
    "RationalReport",
    "RaySlope",
    "RelationBlock",
    "RingGenerator",
    "RingPresentation",
    "ShapeError",
    "TailedPolyhedron",
    "ToricCone",
    "UnsupportedRankError",
    "Verdict",
    "WeightError",
    "canonical_divisor",
    "chamber_fan",
    "classify_report",
    "cohen_macaulay",
    "cone_contains",
    "cone_diagnostics",
    "contraction_iso_codim1",
    "decide_floor_bound",
    "degree",
    "degree_polyhedron",
    "divisor",
    "dual_cone",
    "ec_add",
    "ec_multiple",
    "ec_neg",
    "elliptic_singularity",
    "emit_problem",
    "emit_report",
    "evaluate",
    "floor_degree_profile",
    "floor_divisor",
    "gorenstein",
    "graded_dimension",
    "h0_dim",
    "h1_dim",
    "h1_report",
    "hilbert_series",
    "is_integral",
    "is_principal",
    "is_proper",
    "is_torsion_class",
    "make_cone",
    "make_polyhedron",
    "minimal_elliptic_verdict",
    "minimal_generators",
    "monomial_admissible",
    "monomial_basis",
    "multiply_sections",
    "p1_point",
    "parse_problem",
    "polyhedral_divisor",
    "rational_singularities",
    "ray_slopes",
    "relation_blocks",
    "report_payload",
    "require_proper",
    "ring_presentation",
    "support_eval",
    "toric_cone",
    "weight_in_dual",
]
