import math

import pytest

from shellcasimir.series import SeriesTailPlan
from shellcasimir.sphere import (
    DIAMETER_SUM,
    GENERIC_TERM_N2_LIMIT,
    SphereEnergyBreakdown,
    sphere_diameter_sum,
    sphere_diameter_term,
    sphere_generic_term,
    sphere_sce,
)

SQRT2 = math.sqrt(2.0)


class TestDiameterSum:
    def test_first_terms(self):
        assert sphere_diameter_term(1) == pytest.approx(1.0 / (16.0 * math.pi), abs=1e-18)
        assert sphere_diameter_term(1) == pytest.approx(0.019894, abs=1e-6)
        assert sphere_diameter_term(2) == pytest.approx(1.0 / (256.0 * math.pi), abs=1e-18)

    def test_closed_form_matches_zeta4(self):
        assert abs(sphere_diameter_sum() - (math.pi ** 4 / 90.0) / (16.0 * math.pi)) < 1e-14
        assert sphere_diameter_sum() == math.pi ** 3 / 1440.0

    def test_validation(self):
        with pytest.raises(ValueError):
            sphere_diameter_term(0)


class TestGenericTerm:
    def test_n2(self):
        closed = 15.0 * SQRT2 / 4096.0 * (math.cos(math.pi / 4) / math.sin(math.pi / 4) ** 2)
        assert sphere_generic_term(2) == pytest.approx(closed, abs=1e-15)
        assert sphere_generic_term(2) == pytest.approx(0.007324, abs=1e-6)

    def test_n3(self):
        inner = (math.cos(math.pi / 6) / math.sin(math.pi / 6) ** 2
                 + math.cos(math.pi / 3) / math.sin(math.pi / 3) ** 2)
        assert sphere_generic_term(3) == pytest.approx(15.0 * SQRT2 / 20736.0 * inner, abs=1e-15)
        assert sphere_generic_term(3) == pytest.approx(0.004226, abs=1e-6)

    def test_inverse_square_asymptotics(self):
        scaled = 1e4 ** 2 * sphere_generic_term(10 ** 4)
        assert scaled == pytest.approx(GENERIC_TERM_N2_LIMIT, abs=1e-3)

    def test_positivity(self):
        assert all(sphere_generic_term(n) > 0.0 for n in range(2, 60))

    def test_validation(self):
        with pytest.raises(ValueError):
            sphere_generic_term(1)


class TestSphereSce:
    def test_headline_coefficient(self):
        breakdown = sphere_sce()
        assert breakdown.total == pytest.approx(0.04668, abs=1e-5)
        assert breakdown.total > 0.0
        assert breakdown.tail_error <= 1e-5

    def test_one_percent_above_field_theory_reference(self):
        ratio = sphere_sce().total / 0.04617
        assert ratio - 1.0 == pytest.approx(0.011, abs=2e-3)

    def test_decomposition(self):
        breakdown = sphere_sce()
        assert breakdown.total == breakdown.diameter_sum + breakdown.generic_sum
        assert breakdown.diameter_sum == DIAMETER_SUM
        assert breakdown.explicit_terms_used == 50

    def test_tail_consistency_across_plans(self):
        results = {n: sphere_sce(SeriesTailPlan(explicit_terms=n)) for n in (30, 40, 50, 60)}
        items = list(results.values())
        for i, a in enumerate(items):
            for b in items[i + 1:]:
                assert abs(a.total - b.total) <= max(a.tail_error, b.tail_error)

    def test_custom_plan_used(self):
        breakdown = sphere_sce(SeriesTailPlan(explicit_terms=30))
        assert isinstance(breakdown, SphereEnergyBreakdown)
        assert breakdown.explicit_terms_used == 30
