import numpy as np
import pytest

from sufpoly.errors import SingularParameter
from sufpoly.gfamily import (GFamilyParams, ZetaEstimate, fejer_coeffs, g_coeffs,
                             g_limit_check, zeta_estimate)
from sufpoly.suffridge import SuffridgeParams, coeffs
from sufpoly.univalence import univalence_report


def test_params_validation():
    with pytest.raises(ValueError):
        GFamilyParams(1, 0.0)
    with pytest.raises(ValueError):
        GFamilyParams(5, -5.0)


@pytest.mark.parametrize("N", [2, 3, 7, 11, 30])
def test_special_cases(N):
    np.testing.assert_allclose(g_coeffs(GFamilyParams(N, 1.0)).coeffs,
                               coeffs(SuffridgeParams(N, 1)).coeffs, atol=1e-14)
    np.testing.assert_allclose(g_coeffs(GFamilyParams(N, 0.0)).coeffs,
                               (N + 1 - np.arange(1, N + 1)) / N, atol=1e-14)
    np.testing.assert_allclose(g_coeffs(GFamilyParams(N, 0.0)).coeffs, fejer_coeffs(N).coeffs, atol=1e-14)
    expect = np.zeros(N)
    expect[0], expect[-1] = 1, 1 / N
    np.testing.assert_array_equal(g_coeffs(GFamilyParams(N, -1.0)).coeffs, expect)


def test_limit_convention_is_continuous():
    near = g_coeffs(GFamilyParams(9, -1 + 1e-9)).coeffs
    np.testing.assert_allclose(near, g_coeffs(GFamilyParams(9, -1.0)).coeffs, atol=1e-7)


def test_coefficients_finite_on_unit_interval():
    for mu in np.linspace(-0.99, 1, 50):
        c = g_coeffs(GFamilyParams(11, mu)).coeffs
        assert c[0] == 1.0 and np.all(np.isfinite(c))


def test_singular_parameter():
    # N + mu = 2 makes sin(pi * 2 / 2) vanish at j = 2
    with pytest.raises(SingularParameter):
        g_coeffs(GFamilyParams(4, -2.0))


@pytest.mark.parametrize("mu", [1.0, 0.0, 0.5])
def test_limit_check_decreases(mu):
    errs = [g_limit_check(N, 0.5, mu) for N in (25, 50, 100)]
    assert errs[0] > errs[1] > errs[2]


def test_limit_check_zero_radius_and_range():
    assert g_limit_check(10, 0.0, 0.3) == 0.0
    with pytest.raises(ValueError):
        g_limit_check(10, 1.0, 0.3)


def test_g11_grid_passes():
    worst = 0.0
    for mu in np.linspace(-1, 1, 21):
        rep = univalence_report(g_coeffs(GFamilyParams(11, float(mu))))
        assert rep.verdict == "pass"
        worst = max(worst, rep.max_root_deviation)
    assert worst <= 1e-5


def test_g11_boundary_case_recorded():
    assert univalence_report(g_coeffs(GFamilyParams(11, -1.15))).verdict == "pass"
    assert univalence_report(g_coeffs(GFamilyParams(11, -1.2))).verdict == "fail"


def test_g3_mu_one_passes():
    assert univalence_report(g_coeffs(GFamilyParams(3, 1.0))).verdict == "pass"


def test_zeta_estimate_n11():
    est = zeta_estimate(11, 0.01, 1e-4)
    assert isinstance(est, ZetaEstimate)
    assert est.coarse_grid_pass and not est.no_failure_found
    assert est.mu_lo <= est.mu_hi and est.mu_hi - est.mu_lo <= 1e-4
    assert all(m >= est.mu_lo for m in est.certified_pass)
    assert {1.0, 0.5, 0.0, -0.5, -1.0} <= set(est.certified_pass)
    assert est.threshold <= -1
    assert est.threshold == pytest.approx(-1.18184, abs=2e-4)


@pytest.mark.parametrize("step,tol", [(0.0, 1e-4), (0.1, 1e-4), (0.01, 1e-2)])
def test_zeta_estimate_validation(step, tol):
    with pytest.raises(ValueError):
        zeta_estimate(5, step, tol)
