"""Numerical univalency and quasi-extremality tests, the one-parameter
family S_N(z, mu) with its sign function Phi, and the extremal objective over
real-axis crossings."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (DegenerateSegment, InconclusiveAtResolution,
                     NormalizationFailure, PointOnCurve)
from .poly_core import (RealPolynomial, boundary_curve, derivative, distance_to_curve,
                        roots, self_intersections, winding_numbers)

TOL_QE = 1e-6
BOUNDARY_SAMPLES = 4096
PROBE_RADII = (0.25, 0.5, 0.75, 0.9)
PROBE_ANGLES = 24


@dataclass(frozen=True)
class RobustFamilyParams:
    N: int
    mu: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N}")
        if not 0 < self.mu < math.pi:
            raise ValueError(f"mu must lie in (0, pi), got {self.mu}")


@dataclass(frozen=True)
class UnivalenceReport:
    typically_real: bool
    min_im_upper_half: float
    derivative_root_moduli: list[float]
    boundary_simple: bool
    winding_ok: bool
    verdict: str
    crossings: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def max_root_deviation(self) -> float:
        if not self.derivative_root_moduli:
            return 0.0
        return float(np.max(np.abs(np.asarray(self.derivative_root_moduli) - 1)))


def sn_mu_coeffs(p: RobustFamilyParams) -> RealPolynomial:
    """Coefficients ((N+1-k)/N) sin(k mu)/sin(mu)."""
    N, mu = p.N, p.mu
    k = np.arange(1, N + 1)
    return RealPolynomial((N + 1 - k) / N * np.sin(k * mu) / math.sin(mu))


def phi(N: int, t, mu: float):
    """Sign function of Im S_N(e^{it}, mu) on (0, pi)."""
    t = np.asarray(t, dtype=float)
    return (2 * np.sin(t) * math.sin(mu)
            + np.sin(N * t) * math.sin((N + 2) * mu)
            - 2 * np.sin((N + 1) * t) * math.sin((N + 1) * mu)
            + np.sin((N + 2) * t) * math.sin(N * mu))


def phi_identity_rhs(N: int, mu: float) -> float:
    return -4 * math.sin(math.pi / (N + 1)) ** 2 * math.sin((N + 1) * mu) ** 2


def phi_identity_residual(N: int, mu: float) -> float:
    """max over both signs of |Phi(mu +- 2pi/(N+1), mu) - rhs|."""
    shift = 2 * math.pi / (N + 1)
    rhs = phi_identity_rhs(N, mu)
    return float(max(abs(phi(N, mu + s * shift, mu) - rhs) for s in (1, -1)))


def negativity_witnesses(N: int, mu: float) -> list[float]:
    """The points mu +- 2pi/(N+1) that fall in (0, pi)."""
    shift = 2 * math.pi / (N + 1)
    return [t for t in (mu + shift, mu - shift) if 0 < t < math.pi]


def _refine_minima(f, t: np.ndarray, v: np.ndarray, iters: int = 60) -> float:
    """Golden-section refinement of every interior grid local minimum."""
    i = np.flatnonzero((v[1:-1] <= v[:-2]) & (v[1:-1] <= v[2:])) + 1
    if i.size == 0:
        return float(np.min(v))
    lo, hi = t[i - 1].copy(), t[i + 1].copy()
    g = (math.sqrt(5) - 1) / 2
    for _ in range(iters):
        x1, x2 = hi - g * (hi - lo), lo + g * (hi - lo)
        left = f(x1) < f(x2)
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
    return float(min(np.min(v), np.min(f(0.5 * (lo + hi)))))


def typically_real_check(p: RealPolynomial, grid_size: int | None = None):
    """(min Im p(e^{it}) over t in [0, pi] >= -tol, that minimum).

    Grid minima are refined locally so that narrow negative dips (mu close
    to, but off, a Suffridge node) are not stepped over.
    """
    grid_size = grid_size or 64 * p.degree
    if grid_size < 8 * p.degree:
        raise ValueError("grid_size must be at least 8 * degree")

    def im(t):
        return np.imag(p(np.exp(1j * t)))

    t = np.linspace(0.0, math.pi, grid_size + 1)
    low = _refine_minima(im, t, im(t))
    tol = 1e-10 * (1 + float(np.max(np.abs(p.coeffs))))
    return low >= -tol, low


def interior_probes(p: RealPolynomial) -> np.ndarray:
    """Images of interior points; univalent p covers each exactly once."""
    th = 2 * np.pi * (np.arange(PROBE_ANGLES) + 0.25) / PROBE_ANGLES
    z = np.concatenate([[0.0], *(r * np.exp(1j * th) for r in PROBE_RADII)])
    return p(z)


def _boundary_facts(p: RealPolynomial, samples: int):
    curve = boundary_curve(p, samples)
    try:
        crossings = self_intersections(curve)
    except DegenerateSegment as exc:
        raise InconclusiveAtResolution(str(exc)) from exc
    probes = interior_probes(p)
    wn = np.empty(probes.size, dtype=int)
    for i, w in enumerate(probes):
        try:
            wn[i] = winding_numbers(curve, [w])[0]
        except PointOnCurve:
            # An interior value on the boundary image already rules out
            # injectivity; flag it with an impossible winding number.
            wn[i] = -1
    return crossings, wn


def min_boundary_distance(p: RealPolynomial, samples: int = BOUNDARY_SAMPLES) -> float:
    """Distance from p(0) = 0 to the sampled image of |z| = 1."""
    return float(distance_to_curve(boundary_curve(p, samples), [0.0])[0])


def derivative_root_moduli(p: RealPolynomial) -> list[float]:
    if p.degree < 2:
        return []
    return sorted(np.abs(roots(derivative(p))).tolist())


@dataclass(frozen=True)
class QuasiExtremalReport:
    roots_on_circle: bool
    max_root_deviation: float
    boundary_simple: bool
    winding_ok: bool
    passed: bool
    undecided: str = ("existence of the domain Omega and the boundary-contact "
                      "angles tau_j are not decided numerically")


def quasi_extremal_check(p: RealPolynomial, samples: int = BOUNDARY_SAMPLES,
                         tol: float = TOL_QE) -> QuasiExtremalReport:
    """Decidable part of quasi-extremality: derivative zeros on |z| = 1,
    simple sampled boundary, and winding number 1 around interior images."""
    if p.degree < 2:
        raise ValueError("quasi_extremal_check needs degree >= 2")
    dev = float(np.max(np.abs(np.asarray(derivative_root_moduli(p)) - 1)))
    crossings, wn = _boundary_facts(p, samples)
    on_circle = dev <= tol
    simple = not crossings
    wind = bool(np.all(wn == 1))
    return QuasiExtremalReport(on_circle, dev, simple, wind, on_circle and simple and wind)


def univalence_report(p: RealPolynomial, samples: int = BOUNDARY_SAMPLES) -> UnivalenceReport:
    """Argument-principle verdict: pass iff the sampled boundary is simple and
    winds once around every interior probe image.  Typical realness and the
    derivative-root moduli are reported as evidence only."""
    tr, low = typically_real_check(p)
    moduli = derivative_root_moduli(p)
    notes = []
    try:
        crossings, wn = _boundary_facts(p, samples)
    except InconclusiveAtResolution as exc:
        notes.append(str(exc))
        return UnivalenceReport(tr, low, moduli, False, False, "inconclusive", 0, notes)
    simple = not crossings
    wind = bool(np.all(wn == 1))
    if not wind:
        notes.append(f"winding numbers seen: {sorted(set(wn.tolist()))}")
    if np.any(wn == -1):
        notes.append("an interior probe image lies on the boundary curve")
    verdict = "pass" if simple and wind else "fail"
    return UnivalenceReport(tr, low, moduli, simple, wind, verdict, len(crossings), notes)


def _im_zero_angles(coeffs: np.ndarray, resolution: int, tol_t: float = 1e-12,
                    tangency: float = 1e-9, include_tangential: bool = False) -> np.ndarray:
    k = np.arange(1, coeffs.size + 1)

    def im(t):
        return np.sin(np.multiply.outer(t, k)) @ coeffs

    t = np.linspace(0.0, math.pi, resolution + 1)
    v = im(t)
    found = [0.0, math.pi]
    # Values within rounding noise carry no sign, so a tangential touch of the
    # real axis is not mistaken for a crossing.
    noise = 64 * np.finfo(float).eps * float(np.sum(np.abs(coeffs)))
    sgn = np.where(np.abs(v) <= noise, 0.0, np.sign(v))
    nz = np.flatnonzero(sgn)
    flips = np.flatnonzero(sgn[nz[:-1]] != sgn[nz[1:]])
    for f in flips:
        lo, hi = t[nz[f]], t[nz[f + 1]]
        slo = sgn[nz[f]]
        while hi - lo > tol_t:
            mid = 0.5 * (lo + hi)
            fm = float(im(np.array([mid]))[0])
            if fm == 0.0:
                lo = hi = mid
                break
            if np.sign(fm) == slo:
                lo = mid
            else:
                hi = mid
        found.append(0.5 * (lo + hi))
    if include_tangential:
        a = np.abs(v)
        inner = np.arange(1, resolution)
        local_min = ((a[inner] <= a[inner - 1]) & (a[inner] <= a[inner + 1])
                     & (a[inner] < tangency))
        found.extend(t[inner[local_min]].tolist())
    return np.unique(np.asarray(found))


def dk_objective(p: RealPolynomial, resolution: int = 8192,
                 include_tangential: bool = False) -> float:
    """min Re F(e^{it}) over the points where the boundary image crosses the
    real axis (plus t = 0 and t = pi), F being p rescaled to coefficient sum 1.

    With ``include_tangential`` the points where the image only touches the
    real axis are counted as well.  Suffridge polynomials touch it at their
    real cusps, so under that reading they are no longer optimal.
    """
    total = float(np.sum(p.coeffs))
    if abs(total) < 1e-14 * max(1.0, float(np.max(np.abs(p.coeffs)))):
        raise NormalizationFailure("coefficients sum to zero")
    c = p.coeffs / total
    t = _im_zero_angles(c, resolution, include_tangential=include_tangential)
    k = np.arange(1, c.size + 1)
    re = np.cos(np.multiply.outer(t, k)) @ c
    return float(np.min(re))


def random_feasible_coeffs(rng: np.random.Generator, N: int) -> RealPolynomial:
    """Random real degree-N coefficients with a_1 = 1, kept away from the
    zero-sum hyperplane so the renormalization F(1) = 1 is well defined."""
    while True:
        c = np.concatenate(([1.0], rng.uniform(-1.0, 1.0, N - 1)))
        if abs(c.sum()) > 1e-3 and c[-1] != 0:
            return RealPolynomial(c)


def dk_trials(p: RealPolynomial, trials: int = 100, seed: int = 0,
              resolution: int = 8192) -> tuple[float, np.ndarray]:
    """dk_objective of ``p`` and of ``trials`` seeded random competitors of
    the same degree."""
    rng = np.random.default_rng(seed)
    base = dk_objective(p, resolution)
    others = np.array([dk_objective(random_feasible_coeffs(rng, p.degree), resolution)
                       for _ in range(trials)])
    return base, others
