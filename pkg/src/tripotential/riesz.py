"""Extreme points of the distance-power potentials V_p.

V_p integrates |PQ|^p over the triangle (p = -1 is the electrostatic
case; p <= -2 is understood as potential differences, which leaves the
stationarity condition unchanged). Any interior stationary point of V_p
satisfies

    integral over [0, 2pi) of R(phi)^(p+1) e^{i phi} dphi = 0

with R(phi) the ray length from the point to the boundary. For p = -1
the correct degenerate form of the condition replaces R^0 by log R (the
limit kernel of (R^(p+1) - 1)/(p + 1)), which reproduces the negated
electrostatic field.

Special values: p = 2 lands on the centroid, p = -2 on the equal
angle-per-area "illuminating" point, p = -4 on the point whose
unit-circle inversion of the boundary encloses a region with centroid at
the point itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .center import coth_parts, point_from_coth_parts
from .errors import NoConvergence, NotInterior, ToleranceNotReached
from .geometry import (
    Point2,
    PointLocation,
    Triangle,
    cartesian_to_trilinear,
    centroid,
    classify_point,
    diameter,
    distance_to_boundary,
    inradius,
    side_lengths,
)
from .potential import BOUNDARY_EXCLUSION_RTOL, FieldVector, cone_windows
from .quadrature import integrate_adaptive

__all__ = [
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

# Newton iterates keep at least this margin (times diameter) from the
# boundary, where the kernel R^(p+1) becomes ill-conditioned for p < -1.
INTERIOR_MARGIN_RTOL = 1e-6


@dataclass(frozen=True)
class RpSolveReport:
    """Solved extreme point of V_p with solver diagnostics."""

    point: Point2
    residual_norm: float
    iterations: int
    p: float


@dataclass(frozen=True)
class ArcPoint:
    """One solved point along the family of V_p extreme points."""

    p: float
    point: Point2 | None
    residual_norm: float
    iterations: int
    converged: bool


def _require_strict_interior(tri: Triangle, p_pt: Point2) -> None:
    if classify_point(tri, p_pt) is not PointLocation.INTERIOR:
        raise NotInterior(f"{p_pt} is not strictly inside the triangle")
    if distance_to_boundary(tri, p_pt) <= BOUNDARY_EXCLUSION_RTOL * diameter(tri):
        raise NotInterior(
            f"{p_pt} is inside the boundary exclusion band "
            f"({BOUNDARY_EXCLUSION_RTOL:g} * diameter)"
        )


def _ray_scale(tri: Triangle, p_pt: Point2) -> float:
    """Geometric mean of the distances to the three side lines; used to
    normalize R before exponentiation so large |p| stays in range."""
    tau = cartesian_to_trilinear(tri, p_pt)
    return (tau.tau_a * tau.tau_b * tau.tau_c) ** (1.0 / 3.0)


def _kernel(p: float):
    if p == -1.0:
        return np.log
    expo = p + 1.0
    return lambda x: x**expo


def _scaled_residual(
    tri: Triangle,
    p_pt: Point2,
    p: float,
    abs_tol: float,
    max_depth: int,
):
    """The stationarity integral with R normalized by the local ray scale.

    Returns (complex integral, magnitude normalizer, worst window error).
    The normalizer is the coarse integral of |kernel|, which makes the
    ratio |integral| / normalizer a dimensionless asymmetry measure.
    """
    kern = _kernel(p)
    r0 = _ray_scale(tri, p_pt)
    total = 0.0 + 0.0j
    magnitude = 0.0
    worst = 0.0
    for phi_start, delta, ray in cone_windows(tri, p_pt):

        def f_abs(phis, ray=ray):
            return np.abs(kern(ray(phis) / r0))

        mag = integrate_adaptive(
            f_abs, phi_start, phi_start + delta, abs_tol=0.0, rel_tol=1e-3,
            max_depth=max_depth,
        )
        window_mag = abs(mag.value)
        # For exponents far from -1 the normalized kernel still integrates
        # to large values; the per-window budget scales with it so the
        # absolute tolerance keeps meaning "digits of the window".
        window_tol = abs_tol * max(1.0, window_mag)

        def f(phis, ray=ray):
            return kern(ray(phis) / r0) * np.exp(1j * phis)

        res = integrate_adaptive(
            f, phi_start, phi_start + delta, abs_tol=window_tol,
            max_depth=max_depth,
        )
        if not res.converged:
            raise ToleranceNotReached(
                f"stationarity window quadrature reached {res.error:.3e} "
                f"absolute (target {window_tol:.3e})",
                achieved=res.error,
                target=window_tol,
            )
        total += res.value
        worst = max(worst, res.error)
        magnitude += window_mag
    return total, magnitude, worst, r0


def stationarity_residual(
    tri: Triangle,
    p_pt: Point2,
    p: float,
    *,
    abs_tol: float = 1e-12,
    max_depth: int = 20,
) -> FieldVector:
    """Real and imaginary parts of the V_p stationarity integral at p_pt.

    Integrated per edge cone by adaptive quadrature to abs_tol on the
    ray lengths normalized by their local geometric-mean scale; the
    returned value is rescaled back to the literal integral. For p = -1
    the kernel is log R and the result equals the negated closed-form
    field (sign convention: this integral is -E).

    Raises
    ------
    NotInterior
        Point outside, on the boundary, or inside the exclusion band.
    ToleranceNotReached
        A window could not reach abs_tol within max_depth subdivisions.
    """
    if not math.isfinite(p):
        raise ValueError(f"exponent must be finite, got {p}")
    _require_strict_interior(tri, p_pt)
    total, _, _, r0 = _scaled_residual(tri, p_pt, p, abs_tol, max_depth)
    if p != -1.0:
        total *= r0 ** (p + 1.0)
    return FieldVector(float(total.real), float(total.imag))


def rp_center(
    tri: Triangle,
    p: float,
    tol: float = 1e-10,
    *,
    x0: Point2 | None = None,
    max_iterations: int = 200,
) -> RpSolveReport:
    """Solve for the interior extreme point of V_p.

    Damped 2D Newton on the stationarity residual with a central
    finite-difference Jacobian (h = 1e-6 * diameter), starting from the
    centroid unless x0 is given. Steps are halved until the iterate
    stays interior with a 1e-6 * diameter margin. Convergence is on the
    scale-normalized residual (|integral| / integral of |kernel|) so the
    same tol is meaningful across exponents.

    Raises
    ------
    NoConvergence
        After max_iterations; carries the best iterate and its residual.
    """
    if not math.isfinite(p):
        raise ValueError(f"exponent must be finite, got {p}")
    if tol < 1e-12:
        raise ValueError(f"tol must be >= 1e-12, got {tol}")
    diam = diameter(tri)
    margin = INTERIOR_MARGIN_RTOL * diam
    h = 1e-6 * diam
    quad_tol = min(1e-12, max(1e-14, 1e-3 * tol))

    def admissible(q: Point2) -> bool:
        return (
            classify_point(tri, q) is PointLocation.INTERIOR
            and distance_to_boundary(tri, q) >= margin
        )

    def scaled(q: Point2) -> np.ndarray:
        val, _, _, _ = _scaled_residual(tri, q, p, quad_tol, 20)
        return np.array([val.real, val.imag])

    x = x0 if x0 is not None else centroid(tri)
    if not admissible(x):
        raise NotInterior(f"starting point {x} lacks interior margin")

    best_x, best_norm = x, math.inf
    for iteration in range(1, max_iterations + 1):
        val, mag, _, _ = _scaled_residual(tri, x, p, quad_tol, 20)
        fx = np.array([val.real, val.imag])
        norm = float(np.hypot(fx[0], fx[1]) / mag)
        if norm < best_norm:
            best_x, best_norm = x, norm
        if norm < tol:
            return RpSolveReport(
                point=x, residual_norm=norm, iterations=iteration, p=p
            )
        # FD probes shrink near the boundary so they stay evaluable.
        hx = min(h, 0.45 * distance_to_boundary(tri, x))
        jac = np.empty((2, 2))
        jac[:, 0] = (scaled(Point2(x.x + hx, x.y)) - scaled(Point2(x.x - hx, x.y))) / (
            2.0 * hx
        )
        jac[:, 1] = (scaled(Point2(x.x, x.y + hx)) - scaled(Point2(x.x, x.y - hx))) / (
            2.0 * hx
        )
        try:
            step = np.linalg.solve(jac, -fx)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(jac, -fx, rcond=None)[0]
        scale = 1.0
        for _ in range(60):
            cand = Point2(float(x.x + scale * step[0]), float(x.y + scale * step[1]))
            if admissible(cand):
                break
            scale *= 0.5
        else:
            cand = x  # fully damped; no admissible direction left
        x = cand
    raise NoConvergence(
        f"no convergence for p={p} after {max_iterations} iterations "
        f"(best residual {best_norm:.3e})",
        best_point=best_x,
        residual_norm=best_norm,
        iterations=max_iterations,
    )


def illuminating_spread(tri: Triangle, p_pt: Point2) -> float:
    """Spread of the three angle/area ratios at p_pt.

    At the V_{-2} extreme point the angle each side subtends divided by
    the area of the corresponding sub-triangle is the same for all three
    sides; the max-min spread of the ratios is returned (0 exactly at
    that point).
    """
    if classify_point(tri, p_pt) is not PointLocation.INTERIOR:
        raise NotInterior(f"{p_pt} is not strictly inside the triangle")
    A, B, C = tri.vertices
    ratios = []
    for v1, v2 in ((B, C), (C, A), (A, B)):
        ux, uy = v1.x - p_pt.x, v1.y - p_pt.y
        wx, wy = v2.x - p_pt.x, v2.y - p_pt.y
        cr = ux * wy - uy * wx
        angle = math.atan2(abs(cr), ux * wx + uy * wy)
        ratios.append(angle / (0.5 * abs(cr)))
    return max(ratios) - min(ratios)


def _simpson_window(f, a: float, b: float, n_panels: int) -> complex:
    n = max(2, n_panels + (n_panels % 2))
    phis = np.linspace(a, b, n + 1)
    y = f(phis)
    h = (b - a) / n
    return (h / 3.0) * (
        y[0] + y[-1] + 4.0 * np.sum(y[1:-1:2]) + 2.0 * np.sum(y[2:-1:2])
    )


def inversion_first_moment(tri: Triangle, p_pt: Point2, quad_n: int = 512) -> float:
    """Norm of the centroid defect of the inverted boundary region.

    Inverting the boundary in the unit circle about p_pt encloses a
    region with radial extent 1/R(phi); its first moment about p_pt is
    (1/3) * integral of R(phi)^(-3) e^{i phi} dphi, evaluated here with a
    composite Simpson rule (quad_n panels per edge window) so the check
    stays independent of the adaptive machinery. The moment equals one
    third of the p = -4 stationarity integral and vanishes exactly at
    the V_{-4} extreme point.
    """
    _require_strict_interior(tri, p_pt)
    moment = 0.0 + 0.0j
    for phi_start, delta, ray in cone_windows(tri, p_pt):

        def f(phis, ray=ray):
            return ray(phis) ** -3.0 * np.exp(1j * phis)

        moment += _simpson_window(f, phi_start, phi_start + delta, quad_n)
    moment /= 3.0
    return abs(moment)


def potential_arc(
    tri: Triangle, p_values, tol: float = 1e-10
) -> list[ArcPoint]:
    """Trace the curve of V_p extreme points over a sorted exponent sweep.

    Each solve warm-starts from the previous solved point (continuation);
    the exponents -1 and 2 are inserted when they fall inside the swept
    range. Failed solves are recorded with converged=False and do not
    abort the sweep.
    """
    ps = [float(q) for q in p_values]
    if ps != sorted(ps):
        raise ValueError("p_values must be sorted ascending")
    if ps:
        lo, hi = ps[0], ps[-1]
        for special in (-1.0, 2.0):
            if lo <= special <= hi and special not in ps:
                ps.append(special)
    ps.sort()

    results: list[ArcPoint] = []
    start = centroid(tri)
    for p in ps:
        try:
            rep = rp_center(tri, p, tol, x0=start)
            results.append(
                ArcPoint(p, rep.point, rep.residual_norm, rep.iterations, True)
            )
            start = rep.point
        except NoConvergence as exc:
            results.append(
                ArcPoint(
                    p,
                    exc.best_point,
                    exc.residual_norm,
                    exc.iterations,
                    False,
                )
            )
    return results


def lambda_curve(
    tri: Triangle, lambda_values
) -> list[tuple[float, Point2]]:
    """The planar curve traced by freeing the lambda parameter.

    For each lambda > 0 the coth quantities u, v, w are formed directly
    (no root solve) and intersected into a point exactly as for the
    electrostatic center; at the lambda root this reproduces that center,
    elsewhere it sweeps a curve whose small- and large-lambda limits are
    classical centers. Stable coth evaluation keeps the extremes usable.
    """
    lams = [float(v) for v in lambda_values]
    if any(not math.isfinite(v) or v <= 0.0 for v in lams):
        raise ValueError("all lambda values must be positive and finite")
    sides = side_lengths(tri)
    out = []
    for lam in lams:
        inv_t, ga, gb, gc = coth_parts(sides, lam)
        out.append((lam, point_from_coth_parts(tri, inv_t, ga, gb, gc)))
    return out


def thomson_residual(tri: Triangle, p_pt: Point2) -> float:
    """Scale-free residual of the classical cubic through the centers.

    Evaluates b c tau_a (tau_b^2 - tau_c^2) + cyclic on exact-gauge
    trilinears and divides by a*b*c*rho^2. The cubic is homogeneous of
    total length degree 5 (3 in the trilinears, 2 in the sides) and so is
    the normalizer, making "near zero" mean the same thing for any
    triangle size. Vanishes at the incenter, centroid, circumcenter,
    orthocenter, the vertices, and the side midpoints.
    """
    tau = cartesian_to_trilinear(tri, p_pt)
    sl = side_lengths(tri)
    rho = inradius(tri)
    ta, tb, tc = tau.tau_a, tau.tau_b, tau.tau_c
    val = (
        sl.b * sl.c * ta * (tb * tb - tc * tc)
        + sl.c * sl.a * tb * (tc * tc - ta * ta)
        + sl.a * sl.b * tc * (ta * ta - tb * tb)
    )
    return val / (sl.a * sl.b * sl.c * rho * rho)
