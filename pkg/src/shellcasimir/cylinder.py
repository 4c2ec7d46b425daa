"""Electromagnetic semiclassical self-energy of a cylindrical metallic shell.

The coefficient of hbar*c*L/R^2 factorizes as

    total = prefactor * series * alpha_factor
    prefactor    = 15*sqrt(2)/(512 pi)
    series       = sum_{n>=1} (-1)^n (4n^2 - 1)/(6 n^4)
                 = -pi^2/18 + 7 pi^4/4320          (alternating-zeta sums)
    alpha_factor = integral_0^1 (1 - a^2/2)^{-7/2} da = 28*sqrt(2)/15

for the quadratic (Dawson-form) treatment of the longitudinal-momentum
integral, giving 7 pi (7 pi^2 - 240)/276480 = -0.0135943... The simple
exponential fit exp(-pi x/4) replaces alpha_factor by (4/pi)^4 and gives
(7 pi^2 - 240)/(288 pi^3 sqrt(2)) = -0.0135337... Removing the upper bound
of the fluctuation integral altogether (Fresnel factors replaced by their
mean 1/2) leaves a purely imaginary factor on the rotated frequency axis,
so that variant is exactly zero: the nonzero answer is all diffraction.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad

from .series import SeriesTailPlan, compensated_partial_sums, euler_averaged_limit
from .specfun import DomainError, dawson, zeta

SQRT2 = math.sqrt(2.0)

PREFACTOR = 15.0 * SQRT2 / (512.0 * math.pi)

ALPHA_FACTOR_QUADRATIC = 28.0 * SQRT2 / 15.0
ALPHA_FACTOR_EXPFIT = (4.0 / math.pi) ** 4

SERIES_CLOSED_FORM = -math.pi ** 2 / 18.0 + 7.0 * math.pi ** 4 / 4320.0

TOTAL_QUADRATIC_CLOSED = 7.0 * math.pi * (7.0 * math.pi ** 2 - 240.0) / 276480.0
TOTAL_EXPFIT_CLOSED = (7.0 * math.pi ** 2 - 240.0) / (288.0 * math.pi ** 3 * SQRT2)

DIFFRACTIVE_N1 = -7.0 / (128.0 * math.pi)

#: reference field-theoretic coefficient, used only for comparison
MILTON_DERAAD_REFERENCE = -0.0135613

ALPHA_EXACT_X_MAX = 60.0


class AlphaIntegralVariant(str, Enum):
    EXACT_QUADRATURE = "exact-quadrature"
    SEMICLASSICAL_QUADRATIC = "semiclassical-quadratic"
    EXPONENTIAL_FIT = "exponential-fit"
    UNBOUNDED = "unbounded"


class UnsupportedVariantError(ValueError):
    """Variant has no closed-form sector reduction."""


@dataclass(frozen=True)
class CylinderEnergyBreakdown:
    """Cylinder coefficient (units hbar*c*L/R^2) and its factorization."""

    variant: AlphaIntegralVariant
    prefactor: float
    per_n_terms: tuple[float, ...]
    series_value: float
    series_error: float
    alpha_factor: float
    total: float


@dataclass(frozen=True)
class Fig2Row:
    x: float
    exact: float
    semiclassical: float
    exp_fit: float


def csc2_sum(n) -> float:
    """sum_{w=1}^{n} 1/sin^2(w pi / 2n); analytically (2n^2 + 1)/3."""
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    w = np.arange(1, n + 1)
    return float(np.sum(1.0 / np.sin(w * (math.pi / (2.0 * n))) ** 2))


def cylinder_n_term(n) -> float:
    """(-1)^n (csc2_sum(n) - 1/2)/n^4, analytically (-1)^n (4n^2 - 1)/(6 n^4)."""
    n = operator.index(n)
    sign = -1.0 if n % 2 else 1.0
    return sign * (csc2_sum(n) - 0.5) / float(n) ** 4


def alpha_integral(x, variant: AlphaIntegralVariant) -> float:
    """Longitudinal-momentum integral in one of four treatments.

    exact-quadrature        adaptive quadrature of int_0^1 exp(-x sqrt(1-a^2)) da
    semiclassical-quadratic sqrt(2/x) exp(-x/2) D(sqrt(x/2))   (Dawson form)
    exponential-fit         exp(-pi x / 4)
    unbounded               0.0: with the Fresnel factors at their mean 1/2 the
                            fluctuation integral continues to a purely imaginary
                            value on the rotated frequency axis
    """
    variant = AlphaIntegralVariant(variant)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"x must be finite and >= 0, got {x}")
    if variant is AlphaIntegralVariant.EXACT_QUADRATURE:
        if x > ALPHA_EXACT_X_MAX:
            raise DomainError(f"exact quadrature supports x <= {ALPHA_EXACT_X_MAX}")
        if x == 0.0:
            return 1.0
        value, _ = quad(lambda a: math.exp(-x * math.sqrt(1.0 - a * a)),
                        0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
        return value
    if variant is AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC:
        if x == 0.0:
            return 1.0
        return math.sqrt(2.0 / x) * math.exp(-0.5 * x) * dawson(math.sqrt(0.5 * x))
    if variant is AlphaIntegralVariant.EXPONENTIAL_FIT:
        return math.exp(-0.25 * math.pi * x)
    return 0.0


def cylinder_sce(variant: AlphaIntegralVariant,
                 plan: SeriesTailPlan | None = None) -> CylinderEnergyBreakdown:
    """Cylinder coefficient for the quadratic, exponential-fit or unbounded variant.

    The exact-quadrature alpha dependence has no per-sector closed form and
    is rejected here; it is exposed through fig2_table instead.
    """
    variant = AlphaIntegralVariant(variant)
    if variant is AlphaIntegralVariant.EXACT_QUADRATURE:
        raise UnsupportedVariantError(
            "exact-quadrature has no closed-form sector reduction; "
            "use fig2_table for the exact alpha dependence")
    if plan is None:
        plan = SeriesTailPlan()
    terms = tuple(cylinder_n_term(n) for n in range(1, plan.explicit_terms + 1))
    partials = compensated_partial_sums(terms)
    series_value, series_error = euler_averaged_limit(partials)
    if series_error > plan.tolerance:
        raise ValueError(
            f"series error estimate {series_error:.3e} exceeds tolerance "
            f"{plan.tolerance:.1e}")
    if variant is AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC:
        alpha_factor = ALPHA_FACTOR_QUADRATIC
        total = PREFACTOR * series_value * alpha_factor
    elif variant is AlphaIntegralVariant.EXPONENTIAL_FIT:
        alpha_factor = ALPHA_FACTOR_EXPFIT
        total = PREFACTOR * series_value * alpha_factor
    else:
        alpha_factor = 0.0
        total = 0.0
    return CylinderEnergyBreakdown(
        variant=variant,
        prefactor=PREFACTOR,
        per_n_terms=terms,
        series_value=series_value,
        series_error=series_error,
        alpha_factor=alpha_factor,
        total=total,
    )


def cylinder_diffractive_n1() -> float:
    """Two-reflection (n = 1) term of the quadratic variant, -7/(128 pi).

    Larger in magnitude than the full coefficient: the alternating sum is
    dominated by, and mostly cancels against, its first term.
    """
    return PREFACTOR * (-0.5) * ALPHA_FACTOR_QUADRATIC


def sec_cubed_integral(eps) -> float:
    """Adaptive quadrature of int_0^{pi/2 - eps} dphi / cos^3(phi)."""
    eps = float(eps)
    if not (0.0 < eps < math.pi / 2):
        raise DomainError(f"eps must lie in (0, pi/2), got {eps}")
    value, _ = quad(lambda p: 1.0 / math.cos(p) ** 3,
                    0.0, math.pi / 2 - eps, epsabs=1e-12, epsrel=1e-12, limit=200)
    return value


def surface_correction_check(eps) -> float:
    """Surface term (3 zeta(3)/128) * Re(i * Q(eps)); identically zero.

    Q(eps) is real for every eps > 0, so the real part of i*Q vanishes
    before the eps -> 0 limit is ever taken.
    """
    q = sec_cubed_integral(eps)
    return 3.0 * zeta(3) / 128.0 * (1j * q).real + 0.0


def fig2_table(x_grid) -> list[Fig2Row]:
    """Exact, quadratic and exponential-fit alpha integrals on a grid."""
    rows = []
    for x in x_grid:
        x = float(x)
        rows.append(Fig2Row(
            x=x,
            exact=alpha_integral(x, AlphaIntegralVariant.EXACT_QUADRATURE),
            semiclassical=alpha_integral(x, AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC),
            exp_fit=alpha_integral(x, AlphaIntegralVariant.EXPONENTIAL_FIT),
        ))
    return rows
