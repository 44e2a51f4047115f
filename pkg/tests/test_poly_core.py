import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sufpoly.errors import DegenerateSegment, PointOnCurve
from sufpoly.poly_core import (CurveSamples, Polynomial, RealPolynomial, boundary_curve,
                               derivative, distance_to_curve, horner, roots,
                               self_intersections, winding_number)
from sufpoly.suffridge import SuffridgeParams, coeffs

S52 = [1, 4 / 5, 0, -2 / 5, -1 / 5]


def circle(n=64, r=1.0):
    t = 2 * np.pi * np.arange(n) / n
    return CurveSamples(t, r * np.exp(1j * t))


def test_eval_identity_polynomial():
    assert RealPolynomial([1.0])(1j) == 1j


def test_eval_example_at_one():
    assert RealPolynomial(S52)(1.0) == pytest.approx(6 / 5, abs=1e-15)


def test_eval_matches_term_sum():
    z = 0.3 + 0.1j
    direct = sum(a * z**k for k, a in enumerate(S52, 1))
    assert abs(RealPolynomial(S52)(z) - direct) <= 1e-14


def test_eval_vectorized_shape():
    z = np.linspace(-1, 1, 7).reshape(7, 1) * np.ones((1, 3))
    assert RealPolynomial(S52)(z).shape == (7, 3)


@pytest.mark.parametrize("bad", [[], [1.0, 0.0], [1.0, np.nan], [np.inf]])
def test_real_polynomial_rejects(bad):
    with pytest.raises(ValueError):
        RealPolynomial(bad)


def test_derivative_examples():
    np.testing.assert_array_equal(derivative(RealPolynomial([1.0])).coeffs, [1.0])
    N = 7
    c = np.zeros(N)
    c[0], c[-1] = 1, 1 / N
    d = derivative(RealPolynomial(c)).coeffs
    expect = np.zeros(N)
    expect[0], expect[-1] = 1, 1
    np.testing.assert_allclose(d, expect, atol=1e-15)
    np.testing.assert_allclose(derivative(RealPolynomial(S52)).coeffs,
                               [1, 8 / 5, 0, -8 / 5, -1], atol=1e-15)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-2, 2), min_size=1, max_size=12).filter(lambda c: abs(c[-1]) > 1e-3),
       st.floats(0, 1), st.floats(0, 2 * np.pi))
def test_derivative_matches_central_difference(c, r, th):
    p = RealPolynomial(c)
    z = r * np.exp(1j * th)
    h = 1e-5
    fd = (p(z + h) - p(z - h)) / (2 * h)
    assert abs(derivative(p)(z) - fd) <= 1e-7 * (1 + np.sum(np.abs(c)) * len(c) ** 3)


def test_roots_trivial():
    np.testing.assert_allclose(np.sort(roots(Polynomial([-1, 0, 1])).real), [-1, 1], atol=1e-14)


def test_roots_suffridge_derivative_on_circle():
    r = roots(derivative(coeffs(SuffridgeParams(5, 1))))
    assert r.size == 4
    assert np.max(np.abs(np.abs(r) - 1)) <= 1e-8


def test_roots_residual_bound_random_degree_six():
    rng = np.random.default_rng(7)
    c = rng.normal(size=7)
    r = roots(Polynomial(c))
    assert r.size == 6
    scale = np.max(np.abs(c)) * np.maximum(1, np.abs(r)) ** 6
    assert np.all(np.abs(horner(c, r)) <= 1e-10 * scale)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 25), st.integers(0, 10_000))
def test_roots_reexpand_to_monic(deg, seed):
    c = np.random.default_rng(seed).uniform(-1, 1, deg + 1)
    c[-1] = np.sign(c[-1]) * max(abs(c[-1]), 0.1)
    r = roots(Polynomial(c))
    back = np.poly(r)[::-1].real
    np.testing.assert_allclose(back, c / c[-1], atol=1e-8 * np.max(np.abs(c / c[-1])))


def test_roots_rejects_constant():
    with pytest.raises(ValueError):
        roots(Polynomial([3.0]))


def test_circle_has_no_self_intersections():
    assert self_intersections(circle()) == []


@pytest.mark.parametrize("n,offset", [(64, 0.0), (400, 0.0), (401, 0.0), (400, 0.37)])
def test_figure_eight_single_crossing(n, offset):
    t = 2 * np.pi * (np.arange(n) + offset) / n
    c = CurveSamples(t, np.sin(2 * t) + 1j * np.sin(t))
    assert len(self_intersections(c)) == 1


def test_suffridge_11_1_boundary_simple():
    assert self_intersections(boundary_curve(coeffs(SuffridgeParams(11, 1)), 4096)) == []


def test_self_intersections_degenerate_segment():
    t = np.linspace(0, 6, 20)
    w = np.exp(1j * t)
    w[5] = w[4]
    with pytest.raises(DegenerateSegment):
        self_intersections(CurveSamples(t, w))


def test_self_intersections_needs_sixteen_points():
    with pytest.raises(ValueError):
        self_intersections(circle(8))


def test_winding_examples():
    assert winding_number(circle(), 0) == 1
    assert winding_number(circle(), 2) == 0
    assert winding_number(boundary_curve(coeffs(SuffridgeParams(5, 2)), 4096), 0.1) == 1


def test_winding_point_on_curve():
    with pytest.raises(PointOnCurve):
        winding_number(circle(), 1.0)


@pytest.mark.parametrize("shift", [1, 17, 63])
def test_winding_rotation_and_reversal(shift):
    c = boundary_curve(coeffs(SuffridgeParams(7, 3)), 512)
    w = 0.05 + 0.02j
    assert winding_number(c.rotated(shift), w) == winding_number(c, w) == 1
    assert winding_number(c.reversed(), w) == -1


def test_curve_samples_validation():
    with pytest.raises(ValueError):
        CurveSamples([0, 1, 1], [0, 1, 2])
    with pytest.raises(ValueError):
        CurveSamples([0, 1], [0])


def test_distance_to_curve_circle():
    d = distance_to_curve(circle(4096), [0.0, 0.5, 2.0])
    np.testing.assert_allclose(d, [1, 0.5, 1], atol=1e-6)
