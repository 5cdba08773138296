"""Potentials of a uniformly charged triangle and their extreme points."""

from .errors import (
    BracketFailure,
    DegenerateTriangle,
    DegenerateTrilinears,
    NegativeRadicand,
    NoConvergence,
    NotInterior,
    ToleranceNotReached,
    TooCloseToBoundary,
    TripotentialError,
)
from .geometry import (
    CevianAngles,
    Point2,
    PointLocation,
    SideLengths,
    Triangle,
    Trilinears,
    area,
    cartesian_to_trilinear,
    centroid,
    cevian_angles,
    circumcenter,
    classify_point,
    diameter,
    distance_to_boundary,
    incenter,
    inradius,
    orthocenter,
    side_lengths,
    triangle_from_sides,
    trilinear_to_cartesian,
    vertex_distances,
)
from .potential import (
    FieldVector,
    QuadratureConfig,
    brute_force_max,
    field_closed,
    potential_closed,
    potential_quadrature,
)
from .center import (
    LambdaSolution,
    center_function_trilinears,
    electrostatic_center,
    kimberling_search_value,
    lambda_residual,
    point_from_uvw,
    solve_lambda,
    stationarity_spreads,
    uvw,
)
from .estimates import (
    RatioBandSummary,
    initial_guess,
    lambda_equilateral,
    ratio_band_survey,
    shape_parameter,
)
from .riesz import (
    ArcPoint,
    RpSolveReport,
    illuminating_spread,
    inversion_first_moment,
    lambda_curve,
    potential_arc,
    rp_center,
    stationarity_residual,
    thomson_residual,
)

__version__ = "0.1.0"

__all__ = [
    "TripotentialError",
    "DegenerateTriangle",
    "DegenerateTrilinears",
    "NotInterior",
    "TooCloseToBoundary",
    "ToleranceNotReached",
    "NegativeRadicand",
    "BracketFailure",
    "NoConvergence",
    "Point2",
    "Triangle",
    "SideLengths",
    "Trilinears",
    "CevianAngles",
    "PointLocation",
    "side_lengths",
    "triangle_from_sides",
    "area",
    "inradius",
    "diameter",
    "distance_to_boundary",
    "classify_point",
    "cartesian_to_trilinear",
    "trilinear_to_cartesian",
    "cevian_angles",
    "vertex_distances",
    "centroid",
    "incenter",
    "circumcenter",
    "orthocenter",
    "FieldVector",
    "QuadratureConfig",
    "potential_closed",
    "potential_quadrature",
    "field_closed",
    "brute_force_max",
    "LambdaSolution",
    "uvw",
    "lambda_residual",
    "solve_lambda",
    "point_from_uvw",
    "electrostatic_center",
    "stationarity_spreads",
    "center_function_trilinears",
    "kimberling_search_value",
    "lambda_equilateral",
    "shape_parameter",
    "initial_guess",
    "RatioBandSummary",
    "ratio_band_survey",
    "RpSolveReport",
    "ArcPoint",
    "stationarity_residual",
    "rp_center",
    "illuminating_spread",
    "inversion_first_moment",
    "potential_arc",
    "lambda_curve",
    "thomson_residual",
]
