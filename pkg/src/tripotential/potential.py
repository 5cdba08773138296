"""Electrostatic potential and field of a uniformly charged triangle.

The potential is V(P) = integral over the triangle of 1/|PQ| dQ, with the
physical constants (Coulomb constant, charge density) normalized to 1.

Everything here works through the polar decomposition about the
evaluation point: the triangle is the signed union of the three cones
spanned at P by its edges, and inside each cone the radial part of the
integral is exact. For V that leaves the 1D angular integral of the
ray length R(phi), which has the elementary antiderivative
d * log tan(psi/2) per edge (``potential_closed``) and is also integrated
numerically as an independent cross-check (``potential_quadrature``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TooCloseToBoundary, ToleranceNotReached, NotInterior
from .geometry import (
    Point2,
    PointLocation,
    Triangle,
    cevian_angles,
    classify_point,
    diameter,
    distance_to_boundary,
    side_lengths,
)
from .quadrature import _NODES, _WK, integrate_adaptive

__all__ = [
    "FieldVector",
    "QuadratureConfig",
    "potential_closed",
    "potential_quadrature",
    "field_closed",
    "brute_force_max",
]

# Closed forms reject points closer to the boundary than this times the
# diameter: the log tan(psi/2) antiderivative loses all precision there.
BOUNDARY_EXCLUSION_RTOL = 1e-9


@dataclass(frozen=True)
class FieldVector:
    """A 2D field value (potential per unit length)."""

    ex: float
    ey: float

    def norm(self) -> float:
        return math.hypot(self.ex, self.ey)


@dataclass(frozen=True)
class QuadratureConfig:
    """Controls for the adaptive angular quadrature."""

    target_rel_tol: float = 1e-10
    max_subdivisions: int = 20

    def __post_init__(self):
        if not 0.0 < self.target_rel_tol <= 1e-2:
            raise ValueError(
                f"target_rel_tol must be in (0, 1e-2], got {self.target_rel_tol}"
            )
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


def cone_windows(tri: Triangle, p: Point2):
    """Angular windows of the three edge cones about p.

    Returns a list of (phi_start, delta, R) per non-degenerate cone, where
    the cone spans polar angles [phi_start, phi_start + delta] (delta is
    signed by orientation) and R(phi) is the vectorized distance from p to
    the edge's line along direction phi. Cones that collapse (p at a
    vertex or on an edge's line) are omitted; their integral contribution
    vanishes in the limit.
    """
    windows = []
    for v1, v2 in tri.edges():
        ux, uy = v1.x - p.x, v1.y - p.y
        wx, wy = v2.x - p.x, v2.y - p.y
        cr = ux * wy - uy * wx
        ru = math.hypot(ux, uy)
        rw = math.hypot(wx, wy)
        if ru == 0.0 or rw == 0.0 or abs(cr) <= 1e-15 * ru * rw:
            continue
        delta = math.atan2(cr, ux * wx + uy * wy)
        phi_start = math.atan2(uy, ux)
        ex, ey = v2.x - v1.x, v2.y - v1.y

        def ray_length(phis, ex=ex, ey=ey, cu=cr):
            return cu / (np.cos(phis) * ey - np.sin(phis) * ex)

        windows.append((phi_start, delta, ray_length))
    return windows


def _require_off_boundary(tri: Triangle, p: Point2) -> None:
    if distance_to_boundary(tri, p) <= BOUNDARY_EXCLUSION_RTOL * diameter(tri):
        raise TooCloseToBoundary(
            f"{p} is within {BOUNDARY_EXCLUSION_RTOL:g} * diameter of the boundary"
        )


def potential_closed(tri: Triangle, p: Point2) -> float:
    """Potential at p via the per-edge log-tangent antiderivative.

    Valid for interior and exterior points. Each edge cone (p, V1, V2)
    contributes sign * d * [log tan(psi/2)] between its entry and exit
    angles, where d is the distance from p to the edge's line and the
    sign is the cone's orientation; the signed cones sum to the triangle.

    Raises
    ------
    TooCloseToBoundary
        If p is within 1e-9 * diameter of a boundary segment.
    """
    _require_off_boundary(tri, p)
    total = 0.0
    for v1, v2 in tri.edges():
        ux, uy = v1.x - p.x, v1.y - p.y
        wx, wy = v2.x - p.x, v2.y - p.y
        cr = ux * wy - uy * wx
        ru = math.hypot(ux, uy)
        rw = math.hypot(wx, wy)
        if abs(cr) <= 1e-15 * ru * rw:
            continue  # collapsed cone: p on the edge's line, zero measure
        ex, ey = v2.x - v1.x, v2.y - v1.y
        d = abs(cr) / math.hypot(ex, ey)
        # Angles of the cone at the edge's endpoints, in (0, pi).
        theta1 = math.atan2(abs(cr), -(ux * ex + uy * ey))
        theta2 = math.atan2(abs(cr), wx * ex + wy * ey)
        # antiderivative log tan(psi/2) between psi=theta1 and psi=pi-theta2
        piece = math.log(math.tan(0.5 * (math.pi - theta2))) - math.log(
            math.tan(0.5 * theta1)
        )
        total += math.copysign(d, cr) * piece
    return total


def potential_quadrature(
    tri: Triangle, p: Point2, cfg: QuadratureConfig | None = None
) -> float:
    """Potential at p by adaptive angular quadrature (the oracle path).

    The radial integral of (1/r) * r dr is exact, so only the 1D integral
    of R(phi) over each edge cone remains; those are integrated
    adaptively. Handles interior, boundary, and exterior points (the cone
    of an edge containing p degenerates and is skipped).

    Raises
    ------
    ToleranceNotReached
        If the subdivision budget is exhausted before the target relative
        tolerance; the exception carries the achieved tolerance.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    windows = cone_windows(tri, p)
    if not windows:
        return 0.0
    # First-pass magnitudes set the absolute error budget per window.
    coarse = 0.0
    for phi_start, delta, ray in windows:
        est = abs(delta) * float(ray(np.array([phi_start + 0.5 * delta]))[0])
        coarse += abs(est)
    abs_tol = cfg.target_rel_tol * coarse / (2.0 * len(windows))

    total = 0.0
    err = 0.0
    for phi_start, delta, ray in windows:
        res = integrate_adaptive(
            ray,
            phi_start,
            phi_start + delta,
            abs_tol=abs_tol,
            max_depth=cfg.max_subdivisions,
        )
        total += float(res.value.real if np.iscomplexobj(res.value) else res.value)
        err += res.error
    achieved = err / abs(total) if total != 0.0 else err
    if achieved > cfg.target_rel_tol:
        raise ToleranceNotReached(
            f"angular quadrature reached {achieved:.3e} relative "
            f"(target {cfg.target_rel_tol:.3e})",
            achieved=achieved,
            target=cfg.target_rel_tol,
        )
    return total


def field_closed(tri: Triangle, p: Point2) -> FieldVector:
    """Field E = -grad V at a strictly interior point, in closed form.

    Assembles the per-edge antiderivative of the polar field integral;
    the vertex log-distance terms cancel pairwise between adjacent edges,
    leaving one log-tangent-product term per edge directed along that
    edge, rotated by -90 degrees:

        E = -i * sum_edges (unit edge vector) * log(tan(t1/2) tan(t2/2))

    with t1, t2 the angles the point subtends at the edge's endpoints.

    Raises
    ------
    NotInterior
        If p is outside or on the boundary (the field diverges there).
    TooCloseToBoundary
        If p is interior but within 1e-9 * diameter of the boundary.
    """
    if classify_point(tri, p) is not PointLocation.INTERIOR:
        raise NotInterior(f"field is only defined strictly inside, got {p}")
    _require_off_boundary(tri, p)
    ang = cevian_angles(tri, p)
    sl = side_lengths(tri)
    A, B, C = tri.vertices
    a_vec = complex(B.x - C.x, B.y - C.y) / sl.a  # direction of CB
    b_vec = complex(C.x - A.x, C.y - A.y) / sl.b  # direction of AC
    c_vec = complex(A.x - B.x, A.y - B.y) / sl.c  # direction of BA
    log_a = math.log(math.tan(0.5 * ang.beta1) * math.tan(0.5 * ang.gamma2))
    log_b = math.log(math.tan(0.5 * ang.gamma1) * math.tan(0.5 * ang.alpha2))
    log_c = math.log(math.tan(0.5 * ang.alpha1) * math.tan(0.5 * ang.beta2))
    e = -1j * (a_vec * log_a + b_vec * log_b + c_vec * log_c)
    return FieldVector(e.real, e.imag)


def _potential_quadrature_batch(tri: Triangle, px, py, panels: int):
    """Composite Kronrod-15 polar quadrature at many strictly interior
    points at once.

    Fixed-order version of ``potential_quadrature`` (same cone
    decomposition, `panels` equal sub-panels per window) vectorized over
    points; used for grid scans where per-point adaptivity would dominate
    the runtime. On interior windows the composite rule is accurate to
    roughly 1e-9 (4 panels) / 1e-12 (8 panels) relative.
    """
    offsets = (np.arange(panels) + 0.5) / panels
    values = np.zeros_like(px)
    for v1, v2 in tri.edges():
        ux, uy = v1.x - px, v1.y - py
        wx, wy = v2.x - px, v2.y - py
        cr = ux * wy - uy * wx
        delta = np.arctan2(cr, ux * wx + uy * wy)
        phi0 = np.arctan2(uy, ux)
        ex, ey = v2.x - v1.x, v2.y - v1.y
        phi = (
            phi0[:, None, None]
            + delta[:, None, None]
            * (offsets[None, :, None] + _NODES[None, None, :] / (2.0 * panels))
        )
        ray = cr[:, None, None] / (np.cos(phi) * ey - np.sin(phi) * ex)
        values += (delta / (2.0 * panels)) * (ray @ _WK).sum(axis=1)
    return values


def _interior_lattice(tri: Triangle, n: int):
    """Strictly interior barycentric lattice points, ~n^2/2 of them."""
    A, B, C = tri.vertices
    points = []
    for i in range(1, n):
        for j in range(1, n - i):
            k = n - i - j
            points.append(
                Point2(
                    (i * A.x + j * B.x + k * C.x) / n,
                    (i * A.y + j * B.y + k * C.y) / n,
                )
            )
    return points


def brute_force_max(
    tri: Triangle,
    grid_n: int = 64,
    refine_iters: int = 6,
    *,
    evaluator: str = "closed",
) -> Point2:
    """Locate the potential maximum by grid search plus local refinement.

    Scans a barycentric lattice of about grid_n^2 / 2 strictly interior
    points, then refines around the best point with a 9x9 local grid whose
    extent shrinks by a factor of 4 per round. Fully deterministic; ties
    resolve to the lowest grid index. The result is always interior.

    Parameters
    ----------
    evaluator : {"closed", "quadrature"}
        Which potential evaluation backs the scan. The quadrature mode
        uses the fixed-order composite polar rule (vectorized over grid
        points), keeping this maximizer independent of the closed forms
        it is used to check.
    """
    if grid_n < 16:
        raise ValueError(f"grid_n must be >= 16, got {grid_n}")
    if refine_iters < 0:
        raise ValueError("refine_iters must be >= 0")
    if evaluator not in ("closed", "quadrature"):
        raise ValueError(f"unknown evaluator {evaluator!r}")
    diam = diameter(tri)
    margin = 2.0 * BOUNDARY_EXCLUSION_RTOL * diam

    def evaluate(points, panels):
        if evaluator == "closed":
            return np.array([potential_closed(tri, q) for q in points])
        px = np.array([q.x for q in points])
        py = np.array([q.y for q in points])
        return _potential_quadrature_batch(tri, px, py, panels)

    lattice = _interior_lattice(tri, grid_n)
    values = evaluate(lattice, 4)
    best_p = lattice[int(np.argmax(values))]  # argmax takes the first max

    extent = diam / grid_n
    offsets = np.linspace(-1.0, 1.0, 9)
    for _ in range(refine_iters):
        # center first so it wins ties against its own probes
        candidates = [best_p]
        for dy in offsets:
            for dx in offsets:
                if dx == 0.0 and dy == 0.0:
                    continue
                q = Point2(best_p.x + dx * extent, best_p.y + dy * extent)
                if classify_point(tri, q) is not PointLocation.INTERIOR:
                    continue
                if distance_to_boundary(tri, q) <= margin:
                    continue
                candidates.append(q)
        panels = 4 if extent > 1e-3 * diam else 8
        values = evaluate(candidates, panels)
        best_p = candidates[int(np.argmax(values))]
        extent /= 4.0
    return best_p
