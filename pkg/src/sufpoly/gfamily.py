"""The one-parameter family

    G_{N,mu}(z) = z + sum_{k=2}^N (1 - (k-1)/N)
                      prod_{j=1}^{k-1} sin(pi(j+mu)/(N+mu)) / sin(pi j/(N+mu)) z^k

which passes through S_{N,1} (mu = 1), the Fejer polynomial (mu = 0) and
z + z^N/N (mu = -1), together with a search for the parameter below -1 at
which univalency is lost.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SingularParameter
from .poly_core import RealPolynomial
from .univalence import univalence_report

COARSE_GRID = (1.0, 0.5, 0.0, -0.5, -1.0)


@dataclass(frozen=True)
class GFamilyParams:
    N: int
    mu: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N}")
        if not self.N + self.mu > 0:
            raise ValueError(f"need N + mu > 0, got N={self.N}, mu={self.mu}")


@dataclass
class ZetaEstimate:
    N: int
    mu_lo: float
    mu_hi: float
    certified_pass: list[float] = field(default_factory=list)
    first_fail: float | None = None
    no_failure_found: bool = False
    coarse_grid_pass: bool = True
    max_root_deviation: float = 0.0
    sweep_steps: int = 0

    @property
    def threshold(self) -> float:
        """Midpoint of the final bracket [mu_lo, mu_hi]."""
        return 0.5 * (self.mu_lo + self.mu_hi)


def g_coeffs(p: GFamilyParams, sing_tol: float = 1e-12) -> RealPolynomial:
    N, mu = p.N, p.mu
    if mu == -1.0:
        # 0/0 at k = N; the limit mu -> -1 of the product is 1 there and 0 below.
        c = np.zeros(N)
        c[0], c[-1] = 1.0, 1.0 / N
        return RealPolynomial(c)
    L = N + mu
    j = np.arange(1, N)
    den = np.sin(math.pi * j / L)
    if np.any(np.abs(den) < sing_tol):
        bad = int(j[np.argmax(np.abs(den) < sing_tol)])
        raise SingularParameter(f"sin(pi*{bad}/(N+mu)) vanishes for N={N}, mu={mu}")
    ratios = np.sin(math.pi * (j + mu) / L) / den
    k = np.arange(2, N + 1)
    c = np.empty(N)
    c[0] = 1.0
    c[1:] = (1 - (k - 1) / N) * np.cumprod(ratios)
    return RealPolynomial(c)


def fejer_coeffs(N: int) -> RealPolynomial:
    k = np.arange(1, N + 1)
    return RealPolynomial((N + 1 - k) / N)


def g_limit_target(mu: float, z):
    """z / (1 - z)^{1+mu} on the principal branch."""
    z = np.asarray(z, dtype=complex)
    return z / (1 - z) ** (1 + mu)


def g_limit_check(N: int, radius: float, mu: float, samples: int = 2048) -> float:
    """sup_{|z| = radius} |G_{N,mu}(z) - z/(1-z)^{1+mu}|."""
    if not 0 <= radius < 1:
        raise ValueError("radius must lie in [0, 1)")
    if radius == 0:
        return 0.0
    z = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    g = g_coeffs(GFamilyParams(N, mu))
    return float(np.max(np.abs(g(z) - g_limit_target(mu, z))))


def _verdict(N: int, mu: float):
    try:
        rep = univalence_report(g_coeffs(GFamilyParams(N, mu)))
    except SingularParameter:
        return "fail", None
    return rep.verdict, rep


def zeta_estimate(N: int, mu_step: float = 0.01, tol: float = 1e-4) -> ZetaEstimate:
    """Sweep mu downward from -1 until the univalency verdict fails, then
    bisect the bracket down to width ``tol``.

    The coarse grid of [-1, 1] is checked first; the largest derivative-root
    deviation from |z| = 1 among passing parameters is recorded.
    """
    if not 0 < mu_step <= 0.05:
        raise ValueError("mu_step must lie in (0, 0.05]")
    if not 0 < tol <= 1e-3:
        raise ValueError("tol must lie in (0, 1e-3]")
    floor = -N + 0.5
    est = ZetaEstimate(N, floor, -1.0)
    dev = 0.0

    for mu in COARSE_GRID:
        verdict, rep = _verdict(N, mu)
        if verdict == "pass":
            est.certified_pass.append(mu)
            dev = max(dev, rep.max_root_deviation)
        else:
            est.coarse_grid_pass = False

    hi = -1.0
    steps = 0
    while True:
        steps += 1
        mu = round(-1.0 - steps * mu_step, 12)
        if mu < floor:
            est.no_failure_found = True
            est.mu_lo, est.mu_hi = floor, hi
            break
        verdict, rep = _verdict(N, mu)
        if verdict == "pass":
            est.certified_pass.append(mu)
            dev = max(dev, rep.max_root_deviation)
            hi = mu
            continue
        lo = mu
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            verdict, rep = _verdict(N, mid)
            if verdict == "pass":
                est.certified_pass.append(mid)
                dev = max(dev, rep.max_root_deviation)
                hi = mid
            else:
                lo = mid
        est.mu_lo, est.mu_hi, est.first_fail = lo, hi, lo
        break
    est.sweep_steps = steps
    est.max_root_deviation = dev
    return est
