"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`. Criterion 3 includes the
10^5-term brute-force cross-check and dominates the runtime.
"""

import pytest

from shellcasimir import verify


def _report(result):
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] criterion {result.criterion:2d} ({result.name}): {result.detail}")
    assert result.passed, f"criterion {result.criterion} ({result.name}): {result.detail}"


def test_criterion_1_sphere_headline():
    _report(verify.check_sphere_headline())


def test_criterion_2_sphere_diameter_sum():
    _report(verify.check_sphere_diameter())


def test_criterion_3_sphere_tail_robustness():
    _report(verify.check_sphere_tail(brute_force_n=100000))


def test_criterion_4_cylinder_headline():
    _report(verify.check_cylinder_headline())


def test_criterion_5_cylinder_identities():
    _report(verify.check_cylinder_identities())


def test_criterion_6_diffractive_term():
    _report(verify.check_diffractive())


def test_criterion_7_wkb_spectrum():
    _report(verify.check_wkb_spectrum())


def test_criterion_8_fig2_reproduction():
    _report(verify.check_fig2())


def test_criterion_9_surface_correction():
    _report(verify.check_surface_correction())


def test_criterion_10_property_suites():
    _report(verify.check_property_anchors())
