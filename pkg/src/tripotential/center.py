"""The electrostatic center: the unique interior maximum of the potential.

At the zero-field point the three quantities

    (1/a) * log((r_B + r_C - a)/(r_B + r_C + a))     (and cyclic)

coincide; writing their common value as -lambda/s turns the pairwise
vertex-distance sums into u = a*coth(a*lambda/2s) (and cyclic), and the
requirement that the three sub-triangles cut off by the point tile the
whole triangle becomes one scalar equation in lambda:

    sum_cyc sqrt((u^2 - a^2)(a^2 - (v - w)^2)) = 4 * area .

The left side is strictly decreasing in lambda, so the root is unique and
bracketing cannot fail. From the root, u, v, w give the distances to the
vertices and the center's Cartesian coordinates via a linear system.

Numerical care: the differences the equation consumes (u - a, v - w) are
evaluated through coth(x) - 1/x and 1/sinh(x) so that no catastrophic
cancellation occurs for small or large arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BracketFailure, NegativeRadicand, TripotentialError
from .estimates import initial_guess
from .geometry import (
    Point2,
    PointLocation,
    SideLengths,
    Triangle,
    Trilinears,
    cevian_angles,
    classify_point,
    heron_area,
    side_lengths,
    vertex_distances,
)

__all__ = [
    "LambdaSolution",
    "coth",
    "uvw",
    "lambda_residual",
    "solve_lambda",
    "point_from_uvw",
    "electrostatic_center",
    "stationarity_spreads",
    "center_function_trilinears",
    "kimberling_search_value",
]


def coth(x: float) -> float:
    """Hyperbolic cotangent for x > 0, stable at both ends.

    Uses the Laurent series below 1e-4 (preserving the 1/x pole
    accurately), 1/tanh in midrange, and 1 + 2*exp(-2x)*(1 + exp(-2x))
    above 20 where tanh saturates to 1.
    """
    if x < 1e-4:
        return 1.0 / x + x / 3.0 - x**3 / 45.0
    if x <= 20.0:
        return 1.0 / math.tanh(x)
    e2 = math.exp(-2.0 * x)
    return 1.0 + 2.0 * e2 * (1.0 + e2)


def _coth_less_inv(x: float) -> float:
    """coth(x) - 1/x without cancellation; this is what differences
    of the form b*coth(bt) - c*coth(ct) reduce to (the 1/t poles cancel
    exactly)."""
    if x <= 0.125:
        x2 = x * x
        # Laurent tail of coth: x/3 - x^3/45 + 2x^5/945 - x^7/4725 + ...
        return x * (
            1.0 / 3.0
            + x2
            * (
                -1.0 / 45.0
                + x2
                * (
                    2.0 / 945.0
                    + x2
                    * (-1.0 / 4725.0 + x2 * (2.0 / 93555.0 - x2 * 1382.0 / 638512875.0))
                )
            )
        )
    if x <= 20.0:
        return 1.0 / math.tanh(x) - 1.0 / x
    e2 = math.exp(-2.0 * x)
    return 1.0 - 1.0 / x + 2.0 * e2 * (1.0 + e2)


def _inv_sinh(x: float) -> float:
    """1/sinh(x) for x > 0; decays to 0 without overflow for large x."""
    if x <= 350.0:
        return 1.0 / math.sinh(x)
    return 2.0 * math.exp(-x)  # exp(-2x) correction is below underflow


@dataclass(frozen=True)
class LambdaSolution:
    """Root of the side-length equation with the derived quantities.

    Attributes
    ----------
    lam : float
        The dimensionless parameter solving the equation.
    u, v, w : float
        a*coth(a*lam/2s) and cyclic; the pairwise sums of vertex distances.
    r_a, r_b, r_c : float
        Distances from the center to vertices A, B, C.
    residual : float
        |LHS - RHS| at the accepted root.
    iterations : int
        Residual evaluations spent (bracketing included).
    """

    lam: float
    u: float
    v: float
    w: float
    r_a: float
    r_b: float
    r_c: float
    residual: float
    iterations: int


def uvw(sides: SideLengths, lam: float) -> tuple[float, float, float]:
    """The coth quantities u, v, w = a*coth(a*lam/2s) and cyclic."""
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")
    t = lam / (2.0 * sides.s)
    return (
        sides.a * coth(sides.a * t),
        sides.b * coth(sides.b * t),
        sides.c * coth(sides.c * t),
    )


def _rhs(sides: SideLengths) -> float:
    """Right-hand side of the lambda equation: 4*area, cross-checked
    against the equivalent quartic side-length polynomial."""
    a, b, c = sides.a, sides.b, sides.c
    rhs_heron = 4.0 * heron_area(sides)
    poly = 2.0 * (a * a * b * b + b * b * c * c + c * c * a * a) - (
        a**4 + b**4 + c**4
    )
    rhs_poly = math.sqrt(poly) if poly > 0.0 else 0.0
    if abs(rhs_poly - rhs_heron) > 1e-7 * rhs_heron:
        raise TripotentialError(
            f"area cross-check failed for sides {sides}: "
            f"{rhs_poly} (polynomial) vs {rhs_heron} (Heron)"
        )
    return rhs_heron


def _lhs_terms(sides: SideLengths, lam: float) -> tuple[float, float, float]:
    """The three square-root terms of the lambda equation.

    Each is computed as x/sinh(x*t) * sqrt(x^2 - (y*g(yt) - z*g(zt))^2)
    with g(x) = coth(x) - 1/x, which keeps both factors accurate. A
    radicand may graze zero from roundoff near the root; it is clamped
    at 0 if above -1e-12 relative, below which genuine negativity is an
    invariant violation.
    """
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")
    t = lam / (2.0 * sides.s)
    terms = []
    for x, y, z in (
        (sides.a, sides.b, sides.c),
        (sides.b, sides.c, sides.a),
        (sides.c, sides.a, sides.b),
    ):
        diff = y * _coth_less_inv(y * t) - z * _coth_less_inv(z * t)
        rad = (x - diff) * (x + diff)
        if rad < 0.0:
            if rad < -1e-12 * x * x:
                raise NegativeRadicand(
                    f"radicand {rad} for side {x} at lambda={lam}"
                )
            rad = 0.0
        terms.append(x * _inv_sinh(x * t) * math.sqrt(rad))
    return tuple(terms)


def lambda_residual(sides: SideLengths, lam: float) -> float:
    """LHS(lambda) - RHS of the side-length equation.

    Strictly decreasing in lambda: positive left of the root, negative
    right of it.
    """
    return math.fsum(_lhs_terms(sides, lam)) - _rhs(sides)


def solve_lambda(sides: SideLengths, tol: float = 1e-12) -> LambdaSolution:
    """Find the unique positive root of the lambda equation.

    Brackets the root by geometric expansion from the shape-based initial
    guess (guaranteed to terminate by strict monotonicity), then closes
    in with an Illinois-damped secant/bisection hybrid. Converged when
    the bracket width is below tol*lambda and the residual is below
    tol*RHS.

    Raises
    ------
    BracketFailure
        If no sign change appears within 60 doublings (degenerate input).
    """
    if tol < 1e-14:
        raise ValueError(f"tol must be >= 1e-14, got {tol}")
    rhs = _rhs(sides)
    residual = lambda lam: math.fsum(_lhs_terms(sides, lam)) - rhs  # noqa: E731

    guess = initial_guess(sides)
    lo, hi = guess / 8.0, 8.0 * guess
    evals = 2
    f_lo = residual(lo)
    f_hi = residual(hi)
    doublings = 0
    while f_lo <= 0.0:
        lo *= 0.5
        f_lo = residual(lo)
        evals += 1
        doublings += 1
        if doublings > 60:
            raise BracketFailure(f"no positive residual down to lambda={lo}")
    while f_hi >= 0.0:
        hi *= 2.0
        f_hi = residual(hi)
        evals += 1
        doublings += 1
        if doublings > 60:
            raise BracketFailure(f"no negative residual up to lambda={hi}")

    x = 0.5 * (lo + hi)
    fx = math.inf
    last_side = 0
    for _ in range(300):
        denom = f_hi - f_lo
        x = (lo * f_hi - hi * f_lo) / denom if denom != 0.0 else 0.5 * (lo + hi)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        fx = residual(x)
        evals += 1
        if fx > 0.0:
            lo, f_lo = x, fx
            if last_side == 1:
                f_hi *= 0.5  # Illinois trick against one-sided stagnation
            last_side = 1
        elif fx < 0.0:
            hi, f_hi = x, fx
            if last_side == -1:
                f_lo *= 0.5
            last_side = -1
        else:
            break
        if (hi - lo) < tol * x and abs(fx) < tol * rhs:
            break
    else:
        raise TripotentialError("lambda iteration failed to converge")

    t = x / (2.0 * sides.s)
    inv_t = 2.0 * sides.s / x
    ga = sides.a * _coth_less_inv(sides.a * t)
    gb = sides.b * _coth_less_inv(sides.b * t)
    gc = sides.c * _coth_less_inv(sides.c * t)
    return LambdaSolution(
        lam=x,
        u=inv_t + ga,
        v=inv_t + gb,
        w=inv_t + gc,
        r_a=0.5 * (inv_t + gb + gc - ga),
        r_b=0.5 * (inv_t + gc + ga - gb),
        r_c=0.5 * (inv_t + ga + gb - gc),
        residual=abs(fx),
        iterations=evals,
    )


def point_from_uvw(tri: Triangle, u: float, v: float, w: float) -> Point2:
    """Radical-center style coordinates from the pairwise distance sums.

    Subtracting the three vertex-distance circle equations pairwise
    yields a linear system whose solution is:

        x = [(|A|^2 - vw)(yB - yC) + (|B|^2 - wu)(yC - yA)
             + (|C|^2 - uv)(yA - yB)] / [2 xA (yB - yC) + cyclic]

    and the mirrored expression for y.
    """
    A, B, C = tri.vertices
    qa = A.x * A.x + A.y * A.y - v * w
    qb = B.x * B.x + B.y * B.y - w * u
    qc = C.x * C.x + C.y * C.y - u * v
    num_x = qa * (B.y - C.y) + qb * (C.y - A.y) + qc * (A.y - B.y)
    den_x = 2.0 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y))
    num_y = qa * (B.x - C.x) + qb * (C.x - A.x) + qc * (A.x - B.x)
    den_y = 2.0 * (A.y * (B.x - C.x) + B.y * (C.x - A.x) + C.y * (A.x - B.x))
    return Point2(num_x / den_x, num_y / den_y)


def point_from_coth_parts(
    tri: Triangle, inv_t: float, ga: float, gb: float, gc: float
) -> Point2:
    """Same point as ``point_from_uvw`` with u = inv_t + ga etc., but with
    the inv_t^2 products cancelled analytically.

    In the verbatim coordinate formula the products vw, wu, uv all carry
    the common pole inv_t^2 = (2s/lambda)^2, which multiplies the
    telescoping sums sum(yB - yC) = 0 and drops out exactly; evaluating
    it numerically destroys the result for small lambda. This form stays
    accurate down to lambda -> 0.
    """
    A, B, C = tri.vertices
    qa = A.x * A.x + A.y * A.y - gb * gc
    qb = B.x * B.x + B.y * B.y - gc * ga
    qc = C.x * C.x + C.y * C.y - ga * gb
    gy = ga * (B.y - C.y) + gb * (C.y - A.y) + gc * (A.y - B.y)
    gx = ga * (B.x - C.x) + gb * (C.x - A.x) + gc * (A.x - B.x)
    num_x = qa * (B.y - C.y) + qb * (C.y - A.y) + qc * (A.y - B.y) + inv_t * gy
    den_x = 2.0 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y))
    num_y = qa * (B.x - C.x) + qb * (C.x - A.x) + qc * (A.x - B.x) + inv_t * gx
    den_y = 2.0 * (A.y * (B.x - C.x) + B.y * (C.x - A.x) + C.y * (A.x - B.x))
    return Point2(num_x / den_x, num_y / den_y)


def coth_parts(sides: SideLengths, lam: float) -> tuple[float, float, float, float]:
    """(2s/lambda, a*g(at), b*g(bt), c*g(ct)) with g(x) = coth(x) - 1/x;
    u, v, w are inv_t plus the respective g part."""
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")
    t = lam / (2.0 * sides.s)
    return (
        2.0 * sides.s / lam,
        sides.a * _coth_less_inv(sides.a * t),
        sides.b * _coth_less_inv(sides.b * t),
        sides.c * _coth_less_inv(sides.c * t),
    )


def electrostatic_center(
    tri: Triangle, tol: float = 1e-12
) -> tuple[Point2, LambdaSolution]:
    """The unique interior point where the field vanishes (max of V).

    Solves the lambda equation for the triangle's sides, reconstructs the
    vertex distances, and intersects the distance circles. The returned
    point is verified to be interior and consistent with the solved
    distances (the system is overdetermined but consistent).
    """
    sides = side_lengths(tri)
    sol = solve_lambda(sides, tol)
    p = point_from_uvw(tri, sol.u, sol.v, sol.w)
    diam = max(sides.a, sides.b, sides.c)
    allowed = max(1e-9, 100.0 * tol) * diam
    da, db, dc = vertex_distances(tri, p)
    mismatch = max(abs(da - sol.r_a), abs(db - sol.r_b), abs(dc - sol.r_c))
    if mismatch > allowed:
        raise TripotentialError(
            f"vertex distances disagree with the lambda solution by {mismatch}"
        )
    if classify_point(tri, p) is not PointLocation.INTERIOR:
        raise TripotentialError(f"computed center {p} is not interior")
    return p, sol


def stationarity_spreads(tri: Triangle, p: Point2) -> tuple[float, float]:
    """How far p is from satisfying the zero-field characterizations.

    Returns (side_relation_spread, angle_relation_spread): the max-min
    spreads of the log-scaled vertex-distance triple

        (1/a) log((r_B + r_C - a)/(r_B + r_C + a))   (and cyclic)

    and of the log-scaled tangent triple

        (1/sin alpha) log(tan(beta1/2) tan(gamma2/2))   (and cyclic).

    Both spreads vanish exactly at the field's stationary point and only
    there; the log forms avoid the underflow the exponentiated relations
    suffer on thin triangles.
    """
    ang = cevian_angles(tri, p)  # validates interiority
    sl = side_lengths(tri)
    r_a, r_b, r_c = vertex_distances(tri, p)

    q = (
        math.log((r_b + r_c - sl.a) / (r_b + r_c + sl.a)) / sl.a,
        math.log((r_c + r_a - sl.b) / (r_c + r_a + sl.b)) / sl.b,
        math.log((r_a + r_b - sl.c) / (r_a + r_b + sl.c)) / sl.c,
    )
    alpha = ang.alpha1 + ang.alpha2
    beta = ang.beta1 + ang.beta2
    gamma = ang.gamma1 + ang.gamma2
    tq = (
        math.log(math.tan(0.5 * ang.beta1) * math.tan(0.5 * ang.gamma2))
        / math.sin(alpha),
        math.log(math.tan(0.5 * ang.gamma1) * math.tan(0.5 * ang.alpha2))
        / math.sin(beta),
        math.log(math.tan(0.5 * ang.alpha1) * math.tan(0.5 * ang.beta2))
        / math.sin(gamma),
    )
    return (max(q) - min(q), max(tq) - min(tq))


def center_function_trilinears(sides: SideLengths, tol: float = 1e-12) -> Trilinears:
    """Trilinears of the center from its triangle center function.

    The generating function is

        f(a, b, c) = sqrt((coth^2(a L / (a+b+c)) - 1)
                          * (a^2 - (b coth(b L / (a+b+c))
                                    - c coth(c L / (a+b+c)))^2))

    evaluated with the one lambda root L shared by all three cyclic
    permutations (the root is symmetric in the sides). f is homogeneous
    of order 1 and symmetric in its last two arguments.
    """
    sol = solve_lambda(sides, tol)
    t = sol.lam / (2.0 * sides.s)

    def f(x: float, y: float, z: float) -> float:
        diff = y * _coth_less_inv(y * t) - z * _coth_less_inv(z * t)
        rad = max((x - diff) * (x + diff), 0.0)
        return _inv_sinh(x * t) * math.sqrt(rad)

    a, b, c = sides.a, sides.b, sides.c
    return Trilinears(f(a, b, c), f(b, c, a), f(c, a, b))


def kimberling_search_value(sides: SideLengths, tol: float = 1e-12) -> float:
    """Distance from the center to side BC (the encyclopedia search key).

    For trilinears tau the distance to side a is
    2 * tau_a * area / (a*tau_a + b*tau_b + c*tau_c).
    """
    tau = center_function_trilinears(sides, tol)
    ar = heron_area(sides)
    den = sides.a * tau.tau_a + sides.b * tau.tau_b + sides.c * tau.tau_c
    return 2.0 * tau.tau_a * ar / den
