"""Planar triangle primitives.

Conventions used throughout the package:

* Triangles are stored positively oriented (counterclockwise); the
  constructor normalizes the vertex order, so callers never deal with
  orientation signs.
* Side lengths follow the classical labelling ``a = |BC|``, ``b = |CA|``,
  ``c = |AB|``; angles ``alpha, beta, gamma`` sit at vertices A, B, C.
* Trilinear coordinates are kept in the "exact" gauge: ``tau_a, tau_b,
  tau_c`` are the actual signed distances from the point to sides BC, CA,
  AB, so that ``a*tau_a + b*tau_b + c*tau_c == 2*area`` identically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DegenerateTriangle, DegenerateTrilinears, NotInterior

__all__ = [
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
]

# Relative tolerance below which a triangle counts as degenerate:
# |2 * signed area| must exceed this times the squared longest side.
DEGENERACY_RTOL = 1e-12

# Relative half-width of the boundary band used by classify_point.
BOUNDARY_BAND_RTOL = 1e-12


@dataclass(frozen=True)
class Point2:
    """A point in the plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got {self}")

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


def _cross(ox, oy, ax, ay, bx, by):
    """Twice the signed area of triangle (o, a, b)."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@dataclass(frozen=True)
class Triangle:
    """A non-degenerate, positively oriented triangle.

    Any vertex order may be passed in; the constructor swaps two vertices
    if needed so that (A, B, C) runs counterclockwise. The relabelling is
    consistent: side lengths and angle names follow the stored order.
    """

    a_vertex: Point2
    b_vertex: Point2
    c_vertex: Point2

    def __post_init__(self):
        A, B, C = self.a_vertex, self.b_vertex, self.c_vertex
        doubled = _cross(A.x, A.y, B.x, B.y, C.x, C.y)
        longest_sq = max(
            (B.x - C.x) ** 2 + (B.y - C.y) ** 2,
            (C.x - A.x) ** 2 + (C.y - A.y) ** 2,
            (A.x - B.x) ** 2 + (A.y - B.y) ** 2,
        )
        if abs(doubled) <= DEGENERACY_RTOL * longest_sq:
            raise DegenerateTriangle(
                f"vertices are numerically collinear: {A}, {B}, {C}"
            )
        if doubled < 0:  # normalize to counterclockwise
            object.__setattr__(self, "b_vertex", C)
            object.__setattr__(self, "c_vertex", B)

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return (self.a_vertex, self.b_vertex, self.c_vertex)

    def edges(self) -> tuple[tuple[Point2, Point2], ...]:
        """Directed edges (A,B), (B,C), (C,A) in counterclockwise order."""
        A, B, C = self.vertices
        return ((A, B), (B, C), (C, A))


@dataclass(frozen=True)
class SideLengths:
    """Side lengths a = |BC|, b = |CA|, c = |AB| with semiperimeter."""

    a: float
    b: float
    c: float
    s: float = field(init=False)

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not all(math.isfinite(v) and v > 0 for v in (a, b, c)):
            raise DegenerateTriangle(f"side lengths must be positive, got {a}, {b}, {c}")
        slack = min(b + c - a, c + a - b, a + b - c)
        if slack <= DEGENERACY_RTOL * max(a, b, c):
            raise DegenerateTriangle(
                f"sides ({a}, {b}, {c}) violate the strict triangle inequality"
            )
        object.__setattr__(self, "s", 0.5 * (a + b + c))

    def permuted(self) -> tuple["SideLengths", "SideLengths"]:
        """Cyclic permutations (b, c, a) and (c, a, b)."""
        return SideLengths(self.b, self.c, self.a), SideLengths(self.c, self.a, self.b)


@dataclass(frozen=True)
class Trilinears:
    """Homogeneous trilinear coordinates; only the ratio is meaningful.

    Producers in this package use the exact gauge (values are the actual
    signed distances to the sides), which makes numerical comparison
    between different construction paths well defined.
    """

    tau_a: float
    tau_b: float
    tau_c: float

    def __post_init__(self):
        if self.tau_a == 0.0 and self.tau_b == 0.0 and self.tau_c == 0.0:
            raise DegenerateTrilinears("all three trilinears are zero")

    def normalized_by_a(self) -> tuple[float, float, float]:
        return (1.0, self.tau_b / self.tau_a, self.tau_c / self.tau_a)


@dataclass(frozen=True)
class CevianAngles:
    """The six angles an interior point P subtends at the vertices.

    ``alpha1 = angle BAP``, ``alpha2 = angle PAC``, and cyclically:
    ``beta1 = angle CBP``, ``beta2 = angle PBA``, ``gamma1 = angle ACP``,
    ``gamma2 = angle PCB``. Pair sums reproduce the triangle's angles.
    """

    alpha1: float
    alpha2: float
    beta1: float
    beta2: float
    gamma1: float
    gamma2: float


class PointLocation(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def side_lengths(tri: Triangle) -> SideLengths:
    """Side lengths of a triangle, a = |BC|, b = |CA|, c = |AB|."""
    A, B, C = tri.vertices
    return SideLengths(B.distance_to(C), C.distance_to(A), A.distance_to(B))


def triangle_from_sides(a: float, b: float, c: float) -> Triangle:
    """Build the canonical-pose triangle with the given side lengths.

    The pose is fixed for reproducibility: B at the origin, C at (a, 0),
    and A in the upper half-plane at distance c from B and b from C.

    Raises
    ------
    DegenerateTriangle
        If the strict triangle inequality fails (within relative
        tolerance 1e-12).
    """
    sides = SideLengths(a, b, c)  # validates the triangle inequality
    x_a = (a * a + c * c - b * b) / (2.0 * a)
    # Height via the numerically stable Heron form rather than sqrt(c^2-x^2).
    y_a = 2.0 * _heron_area(sides) / a
    return Triangle(Point2(x_a, y_a), Point2(0.0, 0.0), Point2(a, 0.0))


def _heron_area(sides: SideLengths) -> float:
    # Kahan's ordering keeps Heron stable for needle triangles.
    x, y, z = sorted((sides.a, sides.b, sides.c), reverse=True)
    return 0.25 * math.sqrt(
        (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
    )


def area(tri: Triangle) -> float:
    """Area of the triangle (half the cross product magnitude)."""
    A, B, C = tri.vertices
    return 0.5 * _cross(A.x, A.y, B.x, B.y, C.x, C.y)


def heron_area(sides: SideLengths) -> float:
    """Area from side lengths alone, sqrt(s(s-a)(s-b)(s-c))."""
    return _heron_area(sides)


def inradius(tri: Triangle) -> float:
    """Radius of the inscribed circle, area / semiperimeter."""
    return area(tri) / side_lengths(tri).s


def diameter(tri: Triangle) -> float:
    """Longest side; the natural length scale for relative tolerances."""
    sl = side_lengths(tri)
    return max(sl.a, sl.b, sl.c)


def _point_segment_distance(p: Point2, v1: Point2, v2: Point2) -> float:
    ex, ey = v2.x - v1.x, v2.y - v1.y
    ee = ex * ex + ey * ey
    t = ((p.x - v1.x) * ex + (p.y - v1.y) * ey) / ee
    t = min(1.0, max(0.0, t))
    return math.hypot(p.x - (v1.x + t * ex), p.y - (v1.y + t * ey))


def distance_to_boundary(tri: Triangle, p: Point2) -> float:
    """Euclidean distance from p to the triangle's boundary (3 segments)."""
    A, B, C = tri.vertices
    return min(
        _point_segment_distance(p, A, B),
        _point_segment_distance(p, B, C),
        _point_segment_distance(p, C, A),
    )


def _normalized_edge_heights(tri: Triangle, p: Point2):
    """Signed distances to sides BC, CA, AB divided by 2*area.

    These are the barycentric coordinates of p divided by the respective
    side length; all positive iff p is strictly interior.
    """
    A, B, C = tri.vertices
    twice_area = 2.0 * area(tri)
    eta_a = _cross(B.x, B.y, C.x, C.y, p.x, p.y) / twice_area
    eta_b = _cross(C.x, C.y, A.x, A.y, p.x, p.y) / twice_area
    eta_c = _cross(A.x, A.y, B.x, B.y, p.x, p.y) / twice_area
    return eta_a, eta_b, eta_c


def classify_point(tri: Triangle, p: Point2) -> PointLocation:
    """Locate p relative to the triangle via barycentric sign tests.

    A relative band of width 1e-12 around zero counts as Boundary.
    """
    etas = _normalized_edge_heights(tri, p)
    if any(e < -BOUNDARY_BAND_RTOL for e in etas):
        return PointLocation.EXTERIOR
    if any(e <= BOUNDARY_BAND_RTOL for e in etas):
        return PointLocation.BOUNDARY
    return PointLocation.INTERIOR


def cartesian_to_trilinear(tri: Triangle, p: Point2) -> Trilinears:
    """Exact-gauge trilinears: signed distances from p to sides BC, CA, AB."""
    A, B, C = tri.vertices
    sl = side_lengths(tri)
    d_a = _cross(B.x, B.y, C.x, C.y, p.x, p.y) / sl.a
    d_b = _cross(C.x, C.y, A.x, A.y, p.x, p.y) / sl.b
    d_c = _cross(A.x, A.y, B.x, B.y, p.x, p.y) / sl.c
    return Trilinears(d_a, d_b, d_c)


def trilinear_to_cartesian(tri: Triangle, t: Trilinears) -> Point2:
    """Cartesian point for trilinears t (any gauge).

    Uses the fact that (a*tau_a : b*tau_b : c*tau_c) are barycentric
    coordinates.

    Raises
    ------
    DegenerateTrilinears
        If a*tau_a + b*tau_b + c*tau_c vanishes (point at infinity).
    """
    A, B, C = tri.vertices
    sl = side_lengths(tri)
    wa, wb, wc = sl.a * t.tau_a, sl.b * t.tau_b, sl.c * t.tau_c
    den = wa + wb + wc
    scale = abs(wa) + abs(wb) + abs(wc)
    if abs(den) <= 1e-14 * scale:
        raise DegenerateTrilinears(f"barycentric normalizer vanishes for {t}")
    return Point2(
        (wa * A.x + wb * B.x + wc * C.x) / den,
        (wa * A.y + wb * B.y + wc * C.y) / den,
    )


def _angle_between(ux, uy, vx, vy) -> float:
    """Unsigned angle in (0, pi) between two nonzero vectors."""
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def cevian_angles(tri: Triangle, p: Point2) -> CevianAngles:
    """The six vertex angles subtended by a strictly interior point.

    Raises
    ------
    NotInterior
        If p is on the boundary or outside.
    """
    if classify_point(tri, p) is not PointLocation.INTERIOR:
        raise NotInterior(f"{p} is not strictly inside the triangle")
    A, B, C = tri.vertices
    return CevianAngles(
        alpha1=_angle_between(B.x - A.x, B.y - A.y, p.x - A.x, p.y - A.y),
        alpha2=_angle_between(p.x - A.x, p.y - A.y, C.x - A.x, C.y - A.y),
        beta1=_angle_between(C.x - B.x, C.y - B.y, p.x - B.x, p.y - B.y),
        beta2=_angle_between(p.x - B.x, p.y - B.y, A.x - B.x, A.y - B.y),
        gamma1=_angle_between(A.x - C.x, A.y - C.y, p.x - C.x, p.y - C.y),
        gamma2=_angle_between(p.x - C.x, p.y - C.y, B.x - C.x, B.y - C.y),
    )


def vertex_distances(tri: Triangle, p: Point2) -> tuple[float, float, float]:
    """Distances (|PA|, |PB|, |PC|) from p to the three vertices."""
    A, B, C = tri.vertices
    return (p.distance_to(A), p.distance_to(B), p.distance_to(C))


def centroid(tri: Triangle) -> Point2:
    A, B, C = tri.vertices
    return Point2((A.x + B.x + C.x) / 3.0, (A.y + B.y + C.y) / 3.0)


def incenter(tri: Triangle) -> Point2:
    A, B, C = tri.vertices
    sl = side_lengths(tri)
    den = sl.a + sl.b + sl.c
    return Point2(
        (sl.a * A.x + sl.b * B.x + sl.c * C.x) / den,
        (sl.a * A.y + sl.b * B.y + sl.c * C.y) / den,
    )


def circumcenter(tri: Triangle) -> Point2:
    A, B, C = tri.vertices
    d = 2.0 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y))
    sa = A.x * A.x + A.y * A.y
    sb = B.x * B.x + B.y * B.y
    sc = C.x * C.x + C.y * C.y
    return Point2(
        (sa * (B.y - C.y) + sb * (C.y - A.y) + sc * (A.y - B.y)) / d,
        (sa * (C.x - B.x) + sb * (A.x - C.x) + sc * (B.x - A.x)) / d,
    )


def orthocenter(tri: Triangle) -> Point2:
    # Reflection identity: H = A + B + C - 2*O with O the circumcenter.
    A, B, C = tri.vertices
    o = circumcenter(tri)
    return Point2(A.x + B.x + C.x - 2.0 * o.x, A.y + B.y + C.y - 2.0 * o.y)
