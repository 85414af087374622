import math

import numpy as np
import pytest

import asymptotics
import kernels
from asymptotics import EnvelopeBounds, WatsonCoeffs
from kernels import KernelKind
from laberrors import DomainError, InvariantError
from quadrature import integrate_semi_infinite

SQRT2 = math.sqrt(2)


def lead(alpha):
    return math.sqrt(2 * math.pi / alpha) * math.exp(-alpha)


def test_watson_coefficient_tables():
    up0 = asymptotics.watson_coeffs(0, "upper")
    assert up0.a[0] == pytest.approx(1 / (2 * SQRT2))
    assert up0.a[1] == pytest.approx(-1 / 6)
    assert up0.a[2] == pytest.approx(-5 / (12 * SQRT2))
    up1 = asymptotics.watson_coeffs(1, "upper")
    assert up1.a[1] == pytest.approx(1 / 3)
    assert up1.a[3] == pytest.approx(-49 / 270)
    assert asymptotics.watson_coeffs(0, "lower").a[1] == pytest.approx(1 / 6)


@pytest.mark.parametrize("k", [0, 1])
def test_branch_symmetry(k):
    up = asymptotics.watson_coeffs(k, "upper")
    low = asymptotics.watson_coeffs(k, "lower")
    for n in (1, 3, 5):
        assert up.a[n] + low.a[n] == 0.0
    for n in (0, 2, 4):
        assert up.a[n] == low.a[n]


def test_broken_symmetry_is_rejected():
    with pytest.raises(InvariantError):
        WatsonCoeffs(0, "lower", (1 / (2 * SQRT2), -1 / 6))
    with pytest.raises(DomainError):
        asymptotics.watson_coeffs(2, "upper")


def test_shifted_coefficients_reduce_to_the_table():
    up = asymptotics.watson_coeffs_shifted(0.0, "upper")
    assert up.a == pytest.approx(asymptotics.watson_coeffs(0, "upper").a[:2])
    shifted = asymptotics.watson_coeffs_shifted(1.5, "lower")
    assert shifted.a[1] == pytest.approx(math.exp(-1.5) * 5.5 / 6)


def test_normalized_single_branch_terms():
    # one-branch expansions in units of sqrt(2 pi/a) e^-a
    terms0 = asymptotics.normalized_terms(asymptotics.watson_coeffs(0, "upper"))
    root = math.sqrt(2 * math.pi)
    assert terms0[0] == pytest.approx(0.25)
    assert terms0[1] == pytest.approx(-1 / (6 * root))
    assert terms0[3] == pytest.approx(43 / 135 / root)
    assert terms0[5] == pytest.approx(-746 / 1134 / root)
    terms1 = asymptotics.normalized_terms(asymptotics.watson_coeffs(1, "upper"))
    assert terms1[5] == pytest.approx(5 / 567 / root)


def test_combined_series_reproduces_the_closed_expansions():
    for alpha in (20.0, 40.0):
        assert asymptotics.watson_series(0, alpha) == pytest.approx(asymptotics.G_asympt(alpha, "G_aa", 2), rel=1e-13)
        assert asymptotics.watson_series(1, alpha) == pytest.approx(asymptotics.G_asympt(alpha, "G_a1a", 2), rel=1e-13)


def test_single_branch_against_quadrature():
    alpha = 40.0
    integral = integrate_semi_infinite(lambda t: np.exp(alpha * (np.log(t) - t)) / (1 + t * t), 1.0).value
    series = asymptotics.branch_series(asymptotics.watson_coeffs(0, "upper"), alpha)
    assert series == pytest.approx(integral, rel=1e-4)


@pytest.mark.parametrize("variant,k", [("G_aa", 0), ("G_a1a", 1)])
def test_expansion_remainder_is_third_order(variant, k):
    residuals = []
    for alpha in (20.0, 40.0, 80.0):
        quad = kernels.kernel_eval(KernelKind.G, alpha + k, alpha)
        residuals.append(abs(asymptotics.G_asympt(alpha, variant, 2) / quad - 1) * alpha ** 3)
    assert max(residuals) <= 3.0
    assert max(residuals) / min(residuals) <= 1.5


def test_order_two_difference():
    alpha = 40.0
    diff = asymptotics.G_asympt(alpha, "G_a1a", 2) - asymptotics.G_asympt(alpha, "G_aa", 2)
    assert diff == pytest.approx(lead(alpha) / (4 * alpha ** 2), rel=1e-12)
    quad = kernels.kernel_eval(KernelKind.G, alpha + 1, alpha) - kernels.kernel_eval(KernelKind.G, alpha, alpha)
    assert quad == pytest.approx(lead(alpha) / (4 * alpha ** 2), rel=0.2)


def test_shifted_leading_term():
    alpha, c = 30.0, 1.5
    ratio = kernels.kernel_eval(KernelKind.G, alpha, alpha + c) / kernels.kernel_eval(KernelKind.G, alpha, alpha)
    assert abs(ratio * math.exp(c) - 1) <= 5 / alpha
    assert asymptotics.G_asympt(alpha, "G_aac", 0, c) == pytest.approx(lead(alpha) * math.exp(-c) / 2)


def test_expansion_orders():
    with pytest.raises(DomainError):
        asymptotics.G_asympt(10.0, "G_aa", 3)
    with pytest.raises(DomainError):
        asymptotics.G_asympt(10.0, "G_aac", 1, 0.5)
    with pytest.raises(DomainError):
        asymptotics.G_asympt(10.0, "G_xx", 0)


@pytest.mark.parametrize("alpha", [20.0, 50.0])
def test_gap_is_positive(alpha):
    assert asymptotics.degree_shift_gap(alpha) > 0


def test_envelope_at_four():
    b = asymptotics.envelope_bounds(4.0)
    C4 = kernels.C_const(4.0)
    assert b.lower == pytest.approx(C4 / 9 * 0.5)
    assert b.upper == pytest.approx(C4 / 9 * 2)
    assert b.lower <= b.point_value <= b.norm <= b.upper


def test_envelope_at_two():
    b = asymptotics.envelope_bounds(2.0)
    assert b.lower == pytest.approx(kernels.C_const(2.0) / 5 * (1 - 1 / SQRT2))


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [8.0, 16.0, 32.0])
def test_envelope_chain(alpha):
    b = asymptotics.envelope_bounds(alpha)
    assert b.norm >= b.point_value
    assert b.upper / b.lower == pytest.approx((1 + 2 / math.sqrt(alpha)) / (1 - 1 / math.sqrt(alpha)))


def test_envelope_invariant():
    with pytest.raises(InvariantError):
        EnvelopeBounds(4.0, 1.0, 0.5, 2.0, 3.0)
    with pytest.raises(DomainError):
        asymptotics.envelope_bounds(1.5)


def test_R_diag_changes_sign():
    assert asymptotics.R_diag(2.4) < 0
    assert asymptotics.R_diag(3.0) > 0


def test_alpha0():
    root = asymptotics.find_alpha0(1e-6)
    assert 2.54288 < root < 2.54289


def test_alpha0_bracket_without_sign_change():
    with pytest.raises(DomainError):
        asymptotics.find_alpha0(1e-6, bracket=(3.0, 4.0))
    with pytest.raises(DomainError):
        asymptotics.find_alpha0(1e-9)


@pytest.mark.parametrize("alpha,x_hi", [(3.0, 3 + 6 * math.pi), (10.0, 40.0), (25.0, 25 + 6 * math.pi)])
def test_H1_decreasing_beyond_alpha(alpha, x_hi):
    assert asymptotics.monotonicity_check(alpha, x_hi)


def test_monotonicity_below_three_still_reports():
    assert asymptotics.monotonicity_check(1.5, 10.0) in (True, False)


@pytest.mark.slow
def test_norm_ratio_tends_to_one():
    gaps = []
    for alpha in (10.0, 20.0, 40.0, 80.0):
        ratio = asymptotics.ratio_thm53(alpha)
        assert 1 - 1 / math.sqrt(alpha) - 0.02 <= ratio <= 1 + 2 / math.sqrt(alpha) + 0.02
        gaps.append(abs(ratio - 1))
    assert all(b <= a for a, b in zip(gaps, gaps[1:]))


def test_shift_ratio():
    ratios = [abs(asymptotics.shift_ratio(a) - 1) for a in (20.0, 40.0, 80.0)]
    assert ratios[0] <= 0.25
    assert ratios[0] > ratios[1] > ratios[2]
