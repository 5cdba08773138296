"""How the root of the side-length equation tracks triangle shape.

For the equilateral triangle the equation collapses to a closed form,
lambda0 = 3 log(2 + sqrt(3)). For everything else the excess over
lambda0 correlates with one scale-free shape number,
t = log(s^2 / (27 rho^2)), with the ratio staying empirically inside
[1/2, 1]. That single observation is what makes the root solver start
close and bracket instantly.
"""

from tripotential import (
    SideLengths,
    initial_guess,
    lambda_equilateral,
    ratio_band_survey,
    shape_parameter,
    solve_lambda,
)

lam0 = lambda_equilateral()
print("equilateral root lambda0 =", lam0)

# ----------------------------------------------------------------------
# Shape parameter and guess quality across very different shapes.
print(f"\n{'sides':>16}  {'t':>8}  {'guess':>8}  {'root':>8}  {'ratio':>6}")
for sides in (
    SideLengths(1, 1, 1),
    SideLengths(3, 4, 5),
    SideLengths(4, 5, 6),
    SideLengths(6, 9, 13),
    SideLengths(1, 1, 1.9),
    SideLengths(1, 5, 5.5),
):
    t = shape_parameter(sides)
    guess = initial_guess(sides)
    root = solve_lambda(sides).lam
    ratio = (root - lam0) / t if t > 1e-12 else float("nan")
    label = f"({sides.a:g},{sides.b:g},{sides.c:g})"
    print(f"{label:>16}  {t:8.4f}  {guess:8.4f}  {root:8.4f}  {ratio:6.3f}")

# ----------------------------------------------------------------------
# The empirical band over a thousand random shapes, reproducibly.
summary = ratio_band_survey(1000, seed=12345)
print("\nratio (root - lambda0)/t over", summary.n_used, "random shapes:")
print(f"  min  = {summary.minimum:.4f}")
print(f"  max  = {summary.maximum:.4f}")
print(f"  mean = {summary.mean:.4f}")
print("(the band stays inside [1/2, 1]; only observed, not proved)")
