"""Acceptance checks shared by the `verify` CLI subcommand and the test suite.

Each check returns a CheckResult with the computed values in `detail`, so
both surfaces print the same one-line pass/fail report per criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import cylinder, orbits, sphere, wkb
from .orbits import BoundaryCondition, Sector
from .series import SeriesTailPlan, richardson_limit
from .specfun import bessel_j_zero, dawson, fresnel_cs, struve_combination

FIG2_GRID = (0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0)


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str


def check_sphere_headline() -> CheckResult:
    breakdown = sphere.sphere_sce()
    ratio = breakdown.total / sphere.BOYER_REFERENCE
    ok = abs(breakdown.total - 0.04668) <= 5e-5 and abs(ratio - 1.011) <= 0.002
    return CheckResult(1, "sphere headline", ok,
                       f"total={breakdown.total:.9g} (target 0.04668 +- 5e-5), "
                       f"ratio to 0.04617 = {ratio:.9g} (target 1.011 +- 0.002)")


def check_sphere_diameter() -> CheckResult:
    closed = math.pi ** 3 / 1440.0
    first = sphere.sphere_diameter_term(1)
    ok = (abs(sphere.sphere_diameter_sum() - closed) <= 1e-12
          and abs(first - 1.0 / (16.0 * math.pi)) <= 1e-15)
    return CheckResult(2, "sphere diameter sum", ok,
                       f"sum={sphere.sphere_diameter_sum():.12g} vs pi^3/1440={closed:.12g}, "
                       f"n=1 term={first:.9g} vs 1/(16 pi)={1.0 / (16.0 * math.pi):.9g}")


def check_sphere_tail(brute_force_n: int | None = None) -> CheckResult:
    totals = {
        n: sphere.sphere_sce(SeriesTailPlan(explicit_terms=n)).total
        for n in (30, 50, 70)
    }
    spread = max(totals.values()) - min(totals.values())
    ok = spread <= 1e-5
    detail = (f"totals(30,50,70)=({totals[30]:.9g}, {totals[50]:.9g}, "
              f"{totals[70]:.9g}), spread={spread:.3g}")
    if brute_force_n is not None:
        brute = sphere.DIAMETER_SUM + sphere.sphere_generic_brute_force(brute_force_n)
        gap = abs(brute - totals[50])
        ok = ok and gap <= 1e-5
        detail += f"; brute N={brute_force_n}: {brute:.9g}, gap={gap:.3g}"
    return CheckResult(3, "sphere tail robustness", ok, detail)


def check_cylinder_headline() -> CheckResult:
    quad_bd = cylinder.cylinder_sce(cylinder.AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC)
    fit_bd = cylinder.cylinder_sce(cylinder.AlphaIntegralVariant.EXPONENTIAL_FIT)
    unb_bd = cylinder.cylinder_sce(cylinder.AlphaIntegralVariant.UNBOUNDED)
    ok = (abs(quad_bd.total - cylinder.TOTAL_QUADRATIC_CLOSED) <= 1e-6
          and abs(quad_bd.total - (-0.0135940)) <= 1e-6
          and abs(fit_bd.total - (-0.013533)) <= 1e-5
          and unb_bd.total == 0.0)
    return CheckResult(4, "cylinder headline", ok,
                       f"quadratic={quad_bd.total:.9g} (closed {cylinder.TOTAL_QUADRATIC_CLOSED:.9g}), "
                       f"expfit={fit_bd.total:.9g} (target -0.013533), "
                       f"unbounded={unb_bd.total!r}")


def check_cylinder_identities() -> CheckResult:
    worst_rel = 0.0
    for n in range(1, 10001):
        lhs = cylinder.csc2_sum(n) - 0.5
        rhs = (4.0 * n * n - 1.0) / 6.0
        worst_rel = max(worst_rel, abs(lhs / rhs - 1.0))
    bd = cylinder.cylinder_sce(cylinder.AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC)
    series_gap = abs(bd.series_value - cylinder.SERIES_CLOSED_FORM)
    from scipy.integrate import quad
    alpha_quad, _ = quad(lambda a: (1.0 - 0.5 * a * a) ** -3.5, 0.0, 1.0,
                         epsabs=1e-13, epsrel=1e-13)
    alpha_gap = abs(alpha_quad - cylinder.ALPHA_FACTOR_QUADRATIC)
    ok = worst_rel <= 1e-12 and series_gap <= 1e-10 and alpha_gap <= 1e-10
    return CheckResult(5, "cylinder identities", ok,
                       f"csc2 worst rel={worst_rel:.3g} (n<=1e4), "
                       f"series gap={series_gap:.3g}, alpha-factor gap={alpha_gap:.3g}")


def check_diffractive() -> CheckResult:
    n1 = cylinder.cylinder_diffractive_n1()
    total = cylinder.cylinder_sce(cylinder.AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC).total
    ok = abs(n1 - (-0.0174077)) <= 1e-6 and abs(n1 - (-7.0 / (128.0 * math.pi))) <= 1e-12 \
        and abs(n1) > abs(total)
    return CheckResult(6, "cylinder diffractive n=1", ok,
                       f"n1={n1:.9g} (target -0.0174077 +- 1e-6), |n1|>|total|: "
                       f"{abs(n1):.9g} > {abs(total):.9g}")


def check_wkb_spectrum() -> CheckResult:
    offenders = []
    anomaly_seen = False
    for bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN):
        for row in wkb.spectrum_report(10, 10, bc):
            if row.flag == wkb.ANOMALY_FLAG:
                anomaly_seen = (row.ell, row.n, bc) == (0, 0, BoundaryCondition.NEUMANN) \
                    and abs(row.x_wkb - math.pi / 4) < 1e-12 and row.x_exact == 0.0
                continue
            bound = 0.01 if row.n >= 1 else 0.021
            if row.rel_error >= bound:
                offenders.append((row.ell, row.n, bc.value, row.rel_error))
    ok = anomaly_seen and not offenders
    worst = max(offenders, key=lambda t: t[3]) if offenders else None
    detail = f"anomaly row flagged: {anomaly_seen}"
    if offenders:
        detail += (f"; {len(offenders)} rows out of bounds, worst "
                   f"(ell={worst[0]}, n={worst[1]}, {worst[2]}): {worst[3]:.4f}")
    else:
        detail += "; all rows within bounds"
    return CheckResult(7, "wkb spectrum accuracy", ok, detail)


def check_fig2() -> CheckResult:
    worst_struve = 0.0
    ordering = True
    for x in FIG2_GRID:
        exact = cylinder.alpha_integral(x, cylinder.AlphaIntegralVariant.EXACT_QUADRATURE)
        semi = cylinder.alpha_integral(x, cylinder.AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC)
        worst_struve = max(worst_struve, abs(exact - struve_combination(x)))
        ordering = ordering and exact >= semi
    tail = 30.0 ** 2 * cylinder.alpha_integral(30.0, cylinder.AlphaIntegralVariant.EXACT_QUADRATURE)
    ok = worst_struve <= 1e-8 and ordering and 0.9 <= tail <= 1.1
    return CheckResult(8, "fig2 reproduction", ok,
                       f"max |exact - struve|={worst_struve:.3g}, exact>=semiclassical: "
                       f"{ordering}, x^2*exact at x=30: {tail:.9g}")


def check_surface_correction() -> CheckResult:
    values = [cylinder.surface_correction_check(e) for e in (0.5, 0.1, 0.001)]
    ok = all(v == 0.0 for v in values)
    return CheckResult(9, "surface correction", ok,
                       f"values for eps in (0.5, 0.1, 0.001): {values}")


def check_property_anchors() -> CheckResult:
    problems = []

    plan = SeriesTailPlan(explicit_terms=50, richardson_order=4)
    exact_tail = [3.0 + 1.0 / n - 2.0 / n ** 2 + 0.5 / n ** 3 + 1.0 / n ** 4
                  for n in range(1, 51)]
    limit, _ = richardson_limit(exact_tail, plan)
    if abs(limit - 3.0) > 1e-9:
        problems.append(f"richardson polynomial-tail error {abs(limit - 3.0):.3g}")

    for ell in range(0, 10):
        for k in range(1, 10):
            a = bessel_j_zero(ell, k, "function")
            b = bessel_j_zero(ell + 1, k, "function")
            c = bessel_j_zero(ell, k + 1, "function")
            if not (a < b < c):
                problems.append(f"interlacing fails at (ell={ell}, k={k})")

    h = 1e-5
    worst_ode = 0.0
    for i in range(51):
        z = 0.1 + 4.8 * i / 50.0
        dd = (dawson(z + h) - dawson(z - h)) / (2.0 * h)
        worst_ode = max(worst_ode, abs(dd + 2.0 * z * dawson(z) - 1.0))
    if worst_ode > 1e-8:
        problems.append(f"dawson ODE residual {worst_ode:.3g}")

    c50, s50 = fresnel_cs(50.0)
    if abs(c50 - 0.5) > 0.01 or abs(s50 - 0.5) > 0.01:
        problems.append(f"fresnel limit: C={c50:.6f}, S={s50:.6f}")

    if abs(orbits.orbit_length(Sector(4, 1))
           - math.sqrt(2.0) * orbits.orbit_length(Sector(2, 1))) > 1e-12:
        problems.append("length(4,1) != sqrt(2)*length(2,1)")
    for w in range(1, 6):
        if orbits.orbit_length(Sector(2 * w, w)) != 4.0 * w:
            problems.append(f"length(2w,w) != 4w at w={w}")

    ok = not problems
    detail = "; ".join(problems) if problems else (
        f"richardson exact, interlacing ok, dawson ODE residual {worst_ode:.3g}, "
        f"fresnel(50)=({c50:.4f}, {s50:.4f}), orbit identities exact")
    return CheckResult(10, "property anchors", ok, detail)


def run_all(brute_force_n: int | None = None) -> list[CheckResult]:
    return [
        check_sphere_headline(),
        check_sphere_diameter(),
        check_sphere_tail(brute_force_n),
        check_cylinder_headline(),
        check_cylinder_identities(),
        check_diffractive(),
        check_wkb_spectrum(),
        check_fig2(),
        check_surface_correction(),
        check_property_anchors(),
    ]
