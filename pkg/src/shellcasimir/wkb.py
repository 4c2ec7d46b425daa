"""Debye (WKB) spectrum of the cylindrical cavity and its validation.

The dimensionless interior wave numbers x_{n,ell} = kappa*R solve

    f_ell(x) = pi * (n + 1/2 + 1/4)   (Dirichlet)
    f_ell(x) = pi * (n + 1/2 - 1/4)   (Neumann)

with f_ell(x) = sqrt(x^2 - ell^2) - ell*arccos(ell/x). The exact
counterparts are the zeros of J_ell and J_ell'; the report pairs the WKB
index n with the (n+1)-th exact zero, which for Neumann ell = 0 keeps the
trivial zero of J_0' at x = 0 as the first entry (the one row where the
approximation has no finite relative error: WKB pi/4 against exact 0).
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .orbits import BoundaryCondition
from .specfun import DomainError, bessel_j_zero

MAX_ELL = 100
MAX_RADIAL = 100

ANOMALY_FLAG = "anomaly"


def f_ell(ell, x) -> float:
    """Radial phase integral sqrt(x^2 - ell^2) - ell*arccos(ell/x), x >= ell."""
    ell = operator.index(ell)
    if ell < 0:
        raise DomainError(f"ell must be >= 0, got {ell}")
    x = float(x)
    if not math.isfinite(x) or x < ell:
        raise DomainError(f"f_ell needs x >= ell, got x={x}, ell={ell}")
    if ell == 0:
        return x
    if x == ell:
        return 0.0
    return math.sqrt(x * x - ell * ell) - ell * math.acos(ell / x)


def _f_ell_derivative(ell: int, x: float) -> float:
    return math.sqrt(x * x - ell * ell) / x


def wkb_zero(ell, n, bc: BoundaryCondition) -> float:
    """Unique x > ell solving the Debye quantization condition."""
    ell = operator.index(ell)
    n = operator.index(n)
    if not 0 <= ell <= MAX_ELL:
        raise DomainError(f"ell must be in [0, {MAX_ELL}], got {ell}")
    if not 0 <= n <= MAX_RADIAL:
        raise DomainError(f"n must be in [0, {MAX_RADIAL}], got {n}")
    bc = BoundaryCondition(bc)
    offset = 0.25 if bc is BoundaryCondition.DIRICHLET else -0.25
    target = math.pi * (n + 0.5 + offset)
    if ell == 0:
        return target
    # f_ell(x) >= x - ell*pi/2, so hi always brackets; f is strictly monotone
    lo = float(ell)
    hi = ell * math.pi / 2 + target + 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if f_ell(ell, mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-6:
            break
    x = 0.5 * (lo + hi)
    for _ in range(8):
        step = (f_ell(ell, x) - target) / _f_ell_derivative(ell, x)
        x -= step
        if abs(step) < 1e-13 * x:
            break
    return x


@dataclass(frozen=True)
class WkbMode:
    """One semiclassical cavity mode; x is the dimensionless wave number."""

    ell: int
    n: int
    bc: BoundaryCondition
    x: float


def wkb_mode(ell, n, bc: BoundaryCondition) -> WkbMode:
    return WkbMode(ell=operator.index(ell), n=operator.index(n),
                   bc=BoundaryCondition(bc), x=wkb_zero(ell, n, bc))


@dataclass(frozen=True)
class SpectrumRow:
    ell: int
    n: int
    bc: BoundaryCondition
    x_wkb: float
    x_exact: float
    rel_error: float  # nan for the flagged anomaly
    flag: str


def spectrum_report(ell_max, n_max, bc: BoundaryCondition) -> list[SpectrumRow]:
    """WKB vs exact Bessel-zero table for ell <= ell_max, n <= n_max.

    Dirichlet rows compare against the (n+1)-th zero of J_ell, Neumann rows
    against the (n+1)-th zero of J_ell' (counting x = 0 for ell = 0).
    """
    ell_max = operator.index(ell_max)
    n_max = operator.index(n_max)
    if not 0 <= ell_max <= 20:
        raise DomainError(f"ell_max must be in [0, 20], got {ell_max}")
    if not 0 <= n_max <= 50:
        raise DomainError(f"n_max must be in [0, 50], got {n_max}")
    bc = BoundaryCondition(bc)
    kind = "function" if bc is BoundaryCondition.DIRICHLET else "derivative"
    rows = []
    for ell in range(ell_max + 1):
        for n in range(n_max + 1):
            xw = wkb_zero(ell, n, bc)
            xe = bessel_j_zero(ell, n + 1, kind)
            if xe == 0.0:
                rows.append(SpectrumRow(ell, n, bc, xw, xe, math.nan, ANOMALY_FLAG))
            else:
                rows.append(SpectrumRow(ell, n, bc, xw, xe, abs(xw - xe) / xe, ""))
    return rows
