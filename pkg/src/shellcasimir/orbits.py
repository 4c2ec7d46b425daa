"""Classical periodic rays of spherical and cylindrical cavities.

A sector (n, w) collects the closed interior rays with n reflections off
the shell and w windings about the center. Stationary (phase-stationary)
sectors require n >= 2w >= 2; the diameter sectors n = 2w bounce between
antipodes through the center and are flagged because the radial measure
vanishes at their stationary point, which routes them to a separate
closed-form sum in the sphere energy.

Lengths are dimensionless (units of the shell radius R); hbar = c = 1.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum


class BoundaryCondition(str, Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


class NoStationaryPointError(ValueError):
    """Sector has no classically allowed stationary point (w = 0 or n < 2w)."""


class DivergentCurvatureError(ValueError):
    """Gaussian fluctuation width is ill-defined (w = 0 sectors)."""


@dataclass(frozen=True, order=True)
class Sector:
    """Periodic-orbit class: n reflections / radial windings, w angular windings."""

    n: int
    w: int

    def __post_init__(self):
        n = operator.index(self.n)
        w = operator.index(self.w)
        if n < 1:
            raise ValueError(f"sector needs n >= 1, got n={n}")
        if w < 0:
            raise ValueError(f"sector needs w >= 0, got w={w}")

    @property
    def is_stationary(self) -> bool:
        return self.w >= 1 and self.n >= 2 * self.w

    @property
    def is_diameter(self) -> bool:
        return self.n == 2 * self.w


@dataclass(frozen=True)
class OrbitGeometry:
    """Geometry row for one stationary sector (both boundary conditions)."""

    sector: Sector
    stationary_z: float
    length_over_r: float
    maslov_dirichlet: int
    maslov_neumann: int
    curvature: float
    diameter: bool
    em_contributes: bool


def _require_stationary(sector: Sector) -> None:
    if not sector.is_stationary:
        raise NoStationaryPointError(
            f"sector (n={sector.n}, w={sector.w}) has no stationary point; "
            "need n >= 2w >= 2")


def stationary_z(sector: Sector) -> float:
    """Angular-momentum fraction cos(w*pi/n) at the stationary point.

    Exactly 0.0 for diameter sectors n = 2w (the rays carry L = 0).
    """
    _require_stationary(sector)
    if sector.is_diameter:
        return 0.0
    return math.cos(sector.w * math.pi / sector.n)


def orbit_length(sector: Sector) -> float:
    """Total orbit length 2*n*sin(w*pi/n) in units of R."""
    _require_stationary(sector)
    return 2.0 * sector.n * math.sin(sector.w * math.pi / sector.n)


def maslov_index(sector: Sector, bc: BoundaryCondition) -> int:
    """Keller-Maslov index: 0 (Dirichlet) or 2n (Neumann); depends on n only."""
    _require_stationary(sector)
    bc = BoundaryCondition(bc)
    return 0 if bc is BoundaryCondition.DIRICHLET else 2 * sector.n


def action_curvature(sector: Sector) -> float:
    """Second z-derivative n/sin(w*pi/n) of the phase at the stationary point."""
    if sector.w == 0:
        raise DivergentCurvatureError(
            f"sector (n={sector.n}, w=0) has vanishing fluctuation width")
    _require_stationary(sector)
    return sector.n / math.sin(sector.w * math.pi / sector.n)


def em_sector_filter(sector: Sector) -> bool:
    """True iff the sector survives the Dirichlet+Neumann pairing (even n)."""
    return sector.n % 2 == 0


def enumerate_sectors(n_max, em_only: bool = False) -> list[Sector]:
    """All stationary sectors with n <= n_max, ordered by (n, w)."""
    n_max = operator.index(n_max)
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    sectors = []
    for n in range(2, n_max + 1):
        for w in range(1, n // 2 + 1):
            s = Sector(n, w)
            if em_only and not em_sector_filter(s):
                continue
            sectors.append(s)
    return sectors


def orbit_geometry(sector: Sector) -> OrbitGeometry:
    """Full geometry record for a stationary sector."""
    return OrbitGeometry(
        sector=sector,
        stationary_z=stationary_z(sector),
        length_over_r=orbit_length(sector),
        maslov_dirichlet=maslov_index(sector, BoundaryCondition.DIRICHLET),
        maslov_neumann=maslov_index(sector, BoundaryCondition.NEUMANN),
        curvature=action_curvature(sector),
        diameter=sector.is_diameter,
        em_contributes=em_sector_filter(sector),
    )
