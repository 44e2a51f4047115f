"""Koebe-type target maps and the approximation/subordination checks."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InconclusiveAtResolution, PointOnCurve, PoleProximity
from .poly_core import TOL_GEOM, boundary_curve, distance_to_curve, winding_numbers
from .suffridge import SuffridgeParams, coeffs, value_at_minus_one

KINDS = ("koebe", "two_symmetric", "generalized")


@dataclass(frozen=True)
class KernelSpec:
    kind: str
    q: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "generalized" and (self.q is None or not 0 < self.q < 1):
            raise ValueError("generalized kernel needs q in (0, 1)")

    def poles(self) -> np.ndarray:
        if self.kind == "koebe":
            return np.array([1.0 + 0j])
        if self.kind == "two_symmetric":
            return np.array([1j, -1j])
        return np.exp(np.array([1j, -1j]) * math.pi * self.q)


def kernel_eval(spec: KernelSpec, z, tol: float = TOL_GEOM):
    """K(z) = z/(1-z)^2, z/(1+z^2) or z/(1 - 2z cos(q pi) + z^2)."""
    z = np.asarray(z, dtype=complex)
    dist = np.min(np.abs(z[..., None] - spec.poles()), axis=-1)
    if np.any(dist <= tol):
        raise PoleProximity(f"{spec.kind} kernel evaluated at a pole")
    if spec.kind == "koebe":
        out = z / (1 - z) ** 2
    elif spec.kind == "two_symmetric":
        out = z / (1 + z * z)
    else:
        out = z / (1 - 2 * z * math.cos(math.pi * spec.q) + z * z)
    return out[()] if out.ndim == 0 else out


def rho(N: int) -> float:
    """Radius of the Koebe disc subordinate to the normalized S_{N,1}."""
    if N < 1:
        raise ValueError("N must be >= 1")
    s = math.sin(math.pi / (2 * N + 2))
    return (1 - s) / (1 + s)


def normalized_image_curve(N: int, samples: int = 4096):
    """Boundary of (-1/(4 S_{N,1}(-1))) S_{N,1}(D), which passes through -1/4."""
    scale = -1.0 / (4.0 * value_at_minus_one(N))
    p = coeffs(SuffridgeParams(N, 1))
    return boundary_curve(lambda z: scale * p(z), samples)


@dataclass(frozen=True)
class InclusionReport:
    N: int
    all_inside: bool
    margin: float
    points: int
    outside: int


def _inclusion(N: int, pts: np.ndarray, curve_samples: int) -> InclusionReport:
    curve = normalized_image_curve(N, max(curve_samples, 4096))
    try:
        wn = winding_numbers(curve, pts)
    except PointOnCurve as exc:
        raise InconclusiveAtResolution(str(exc)) from exc
    margin = float(np.min(distance_to_curve(curve, pts)))
    outside = int(np.count_nonzero(wn != 1))
    return InclusionReport(N, outside == 0, margin, int(pts.size), outside)


def subordination_check(N: int, samples: int = 256,
                        curve_samples: int = 4096) -> InclusionReport:
    """Check that K(rho_N e^{it}) lies inside the normalized S_{N,1} image.

    The inclusion is sharp: K(rho_N) is the image's rightmost boundary point.
    The t-grid is therefore offset by half a step so that no sample sits on
    that contact point.
    """
    if samples < 256:
        raise ValueError("subordination_check needs samples >= 256")
    t = 2 * np.pi * (np.arange(samples) + 0.5) / samples
    pts = kernel_eval(KernelSpec("koebe"), rho(N) * np.exp(1j * t))
    return _inclusion(N, pts, curve_samples)


def dimitrov_interval(N: int) -> tuple[float, float]:
    return -0.25, 0.25 / math.tan(math.pi / (2 * N + 2)) ** 2


def dimitrov_interval_check(N: int, points: int = 201,
                            curve_samples: int = 4096) -> InclusionReport:
    """Real points of (-1/4, cot^2(pi/(2N+2))/4), shrunk by 1e-3 of its
    length at each end, must lie inside the normalized image."""
    if N < 2:
        raise ValueError("dimitrov_interval_check needs N >= 2")
    lo, hi = dimitrov_interval(N)
    eps = 1e-3 * (hi - lo)
    pts = np.linspace(lo + eps, hi - eps, points).astype(complex)
    return _inclusion(N, pts, curve_samples)


def approx_error(params: SuffridgeParams, radius: float, target: KernelSpec,
                 samples: int = 4096) -> float:
    """max_{|z| = radius} |S_{N,j}(z) - K(z)|."""
    if not 0 <= radius < 1:
        raise ValueError("radius must lie in [0, 1)")
    if radius == 0:
        return 0.0
    z = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    diff = coeffs(params)(z) - kernel_eval(target, z)
    return float(np.max(np.abs(diff)))
