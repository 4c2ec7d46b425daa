import cmath
import math

import pytest

from shellcasimir.orbits import (
    BoundaryCondition,
    DivergentCurvatureError,
    NoStationaryPointError,
    Sector,
    action_curvature,
    em_sector_filter,
    enumerate_sectors,
    maslov_index,
    orbit_geometry,
    orbit_length,
    stationary_z,
)

D = BoundaryCondition.DIRICHLET
N = BoundaryCondition.NEUMANN


class TestStationaryZ:
    def test_examples(self):
        assert stationary_z(Sector(4, 1)) == pytest.approx(math.cos(math.pi / 4), abs=1e-12)
        assert stationary_z(Sector(2, 1)) == 0.0

    def test_diameter_sectors_exact_zero(self):
        for w in range(1, 8):
            assert stationary_z(Sector(2 * w, w)) == 0.0

    def test_non_stationary_sectors_raise(self):
        with pytest.raises(NoStationaryPointError):
            stationary_z(Sector(1, 0))
        with pytest.raises(NoStationaryPointError):
            stationary_z(Sector(3, 2))
        with pytest.raises(NoStationaryPointError):
            stationary_z(Sector(5, 0))


class TestOrbitLength:
    def test_examples(self):
        assert orbit_length(Sector(2, 1)) == 4.0
        assert orbit_length(Sector(4, 1)) == pytest.approx(5.656854, abs=1e-6)
        assert orbit_length(Sector(6, 2)) == pytest.approx(12.0 * math.sin(math.pi / 3), abs=1e-12)

    def test_square_is_sqrt2_times_diameter(self):
        assert orbit_length(Sector(4, 1)) == pytest.approx(
            math.sqrt(2.0) * orbit_length(Sector(2, 1)), abs=1e-12)

    def test_diameter_sectors_exact(self):
        for w in range(1, 8):
            assert orbit_length(Sector(2 * w, w)) == 4.0 * w

    def test_bounded_by_circumference_and_increasing_in_w(self):
        for n in range(2, 41):
            prev = 0.0
            for w in range(1, n // 2 + 1):
                length = orbit_length(Sector(n, w))
                assert length < 2.0 * math.pi * w
                assert length > prev
                prev = length


class TestMaslov:
    def test_examples(self):
        assert maslov_index(Sector(4, 1), D) == 0
        assert maslov_index(Sector(3, 1), N) == 6
        assert maslov_index(Sector(2, 1), N) == 4

    def test_neumann_dirichlet_gap_is_2n(self):
        for sector in enumerate_sectors(12):
            assert maslov_index(sector, N) - maslov_index(sector, D) == 2 * sector.n

    def test_em_filter_matches_phase_factors(self):
        # e^{-i pi beta/2} equal for both conditions exactly when n is even
        for sector in enumerate_sectors(12):
            phase_d = cmath.exp(-0.5j * math.pi * maslov_index(sector, D))
            phase_n = cmath.exp(-0.5j * math.pi * maslov_index(sector, N))
            assert (abs(phase_d - phase_n) < 1e-12) == em_sector_filter(sector)


class TestCurvature:
    def test_examples(self):
        assert action_curvature(Sector(2, 1)) == pytest.approx(2.0, abs=1e-12)
        assert action_curvature(Sector(4, 1)) == pytest.approx(5.656854, abs=1e-6)

    def test_w0_diverges(self):
        for n in (1, 2, 5):
            with pytest.raises(DivergentCurvatureError):
                action_curvature(Sector(n, 0))


class TestEnumerate:
    def test_examples(self):
        assert enumerate_sectors(2, em_only=True) == [Sector(2, 1)]
        assert enumerate_sectors(4, em_only=True) == [Sector(2, 1), Sector(4, 1), Sector(4, 2)]
        assert enumerate_sectors(3, em_only=False) == [Sector(2, 1), Sector(3, 1)]

    def test_all_emitted_sectors_are_stationary(self):
        for sector in enumerate_sectors(25):
            assert sector.is_stationary
            assert sector.n >= 2 * sector.w >= 2

    def test_em_only_keeps_even_n(self):
        assert all(s.n % 2 == 0 for s in enumerate_sectors(15, em_only=True))

    def test_n_max_validation(self):
        with pytest.raises(ValueError):
            enumerate_sectors(1)


class TestSectorAndGeometry:
    def test_sector_validation(self):
        with pytest.raises(ValueError):
            Sector(0, 0)
        with pytest.raises(ValueError):
            Sector(2, -1)

    def test_geometry_record(self):
        g = orbit_geometry(Sector(6, 2))
        assert g.stationary_z == pytest.approx(0.5, abs=1e-12)
        assert g.length_over_r == pytest.approx(orbit_length(Sector(6, 2)), abs=1e-15)
        assert g.maslov_dirichlet == 0
        assert g.maslov_neumann == 12
        assert g.em_contributes is True
        assert g.diameter is False
        assert orbit_geometry(Sector(4, 2)).diameter is True
