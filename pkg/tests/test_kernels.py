import math

import numpy as np
import pytest

from sufpoly.errors import PoleProximity
from sufpoly.kernels import (KernelSpec, approx_error, dimitrov_interval,
                             dimitrov_interval_check, kernel_eval, normalized_image_curve,
                             rho, subordination_check)
from sufpoly.poly_core import winding_number
from sufpoly.suffridge import SuffridgeParams


def test_kernel_spec_validation():
    with pytest.raises(ValueError):
        KernelSpec("cauchy")
    for q in (None, 0.0, 1.0):
        with pytest.raises(ValueError):
            KernelSpec("generalized", q)


def test_koebe_at_minus_one():
    assert kernel_eval(KernelSpec("koebe"), -1.0) == pytest.approx(-0.25, abs=1e-15)


def test_koebe_taylor_coefficients():
    # FFT on a small circle recovers the Taylor coefficients k z^k
    n, r = 64, 0.2
    z = r * np.exp(2j * np.pi * np.arange(n) / n)
    c = np.fft.fft(kernel_eval(KernelSpec("koebe"), z)) / n / r ** np.arange(n)
    np.testing.assert_allclose(c[1:11].real, np.arange(1, 11), rtol=1e-9)


def test_generalized_half_is_two_symmetric():
    rng = np.random.default_rng(3)
    z = 0.9 * np.sqrt(rng.uniform(size=20)) * np.exp(2j * np.pi * rng.uniform(size=20))
    np.testing.assert_allclose(kernel_eval(KernelSpec("generalized", 0.5), z),
                               kernel_eval(KernelSpec("two_symmetric"), z), atol=1e-15)


@pytest.mark.parametrize("spec,z", [(KernelSpec("koebe"), 1.0),
                                    (KernelSpec("two_symmetric"), -1j),
                                    (KernelSpec("generalized", 0.3), np.exp(-0.3j * math.pi))])
def test_kernel_pole(spec, z):
    with pytest.raises(PoleProximity):
        kernel_eval(spec, z)


def test_koebe_real_segment_monotone():
    x = np.linspace(-0.999, 0.999, 2001)
    k = kernel_eval(KernelSpec("koebe"), x).real
    assert np.all(np.diff(k) > 0) and k[0] > -0.25


def test_rho_values():
    assert rho(5) == pytest.approx(0.5887907064808636, abs=1e-15)
    assert rho(10) > rho(5)
    assert abs(1e4 * (1 - rho(10_000)) - math.pi) < 0.01
    with pytest.raises(ValueError):
        rho(0)


@pytest.mark.parametrize("N", [5, 10, 20])
def test_subordination_passes(N):
    rep = subordination_check(N)
    assert rep.all_inside and rep.outside == 0 and rep.margin > 0


def test_subordination_needs_samples():
    with pytest.raises(ValueError):
        subordination_check(5, samples=100)


def test_far_point_outside_normalized_image():
    c = normalized_image_curve(5)
    w = 10 * kernel_eval(KernelSpec("koebe"), rho(5))
    assert winding_number(c, w) == 0


@pytest.mark.parametrize("N", [2, 5])
def test_dimitrov_interval_passes(N):
    assert dimitrov_interval_check(N).all_inside


def test_point_right_of_dimitrov_interval_outside():
    c = normalized_image_curve(5)
    assert winding_number(c, dimitrov_interval(5)[1] + 0.1) == 0


def test_dimitrov_rejects_degree_one():
    with pytest.raises(ValueError):
        dimitrov_interval_check(1)


def test_approx_error_at_zero_radius():
    assert approx_error(SuffridgeParams(5, 1), 0.0, KernelSpec("koebe")) == 0.0


def test_approx_error_decreases_along_n():
    errs = [approx_error(SuffridgeParams(N, 1), 0.5, KernelSpec("koebe")) for N in (25, 50, 100, 200)]
    assert all(b <= a * 1.05 for a, b in zip(errs, errs[1:]))


def test_approx_error_frozen_value():
    e = approx_error(SuffridgeParams(50, 1), 0.5, KernelSpec("koebe"))
    assert e == pytest.approx(0.0935600124779381, rel=1e-9)


def test_approx_error_radius_range():
    with pytest.raises(ValueError):
        approx_error(SuffridgeParams(5, 1), 1.0, KernelSpec("koebe"))
