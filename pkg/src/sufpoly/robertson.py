"""Chebyshev-U machinery and Robertson measures of typically real polynomials.

A polynomial f(z) = sum b_k z^k has the representation

    f(z) = int_{-1}^{1} z dmu(t) / (1 - 2tz + z^2),
    dmu/dt = (2/pi) sqrt(1 - t^2) sum_k b_k U_{k-1}(t),

and f is typically real exactly when that density is nonnegative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureNonConvergence
from .poly_core import RealPolynomial
from .suffridge import SuffridgeParams, coeffs


@dataclass(frozen=True, eq=False)
class MeasureTable:
    grid: np.ndarray
    mu: np.ndarray
    density: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        if g[0] != -1.0 or g[-1] != 1.0 or np.any(np.diff(g) <= 0):
            raise ValueError("grid must increase strictly from -1 to 1")
        if not (g.shape == np.shape(self.mu) == np.shape(self.density)):
            raise ValueError("grid, mu and density must have equal length")


def chebyshev_U_all(kmax: int, t, derivs: int = 0):
    """U_0..U_kmax at ``t`` (rows), plus first/second derivatives if asked.

    Derivatives follow from differentiating U_{k+1} = 2t U_k - U_{k-1}:
        U'_{k+1}  = 2 U_k  + 2t U'_k  - U'_{k-1}
        U''_{k+1} = 4 U'_k + 2t U''_k - U''_{k-1}
    """
    t = np.asarray(t, dtype=float)
    shape = (kmax + 1,) + t.shape
    u = np.zeros(shape)
    du = np.zeros(shape)
    d2u = np.zeros(shape)
    u[0] = 1.0
    if kmax >= 1:
        u[1] = 2 * t
        du[1] = 2.0
    for k in range(1, kmax):
        u[k + 1] = 2 * t * u[k] - u[k - 1]
        du[k + 1] = 2 * u[k] + 2 * t * du[k] - du[k - 1]
        d2u[k + 1] = 4 * du[k] + 2 * t * d2u[k] - d2u[k - 1]
    return (u, du, d2u)[: derivs + 1] if derivs else u


def chebyshev_U(k: int, t):
    if k < 0:
        raise ValueError("k must be nonnegative")
    if np.any(np.abs(np.asarray(t)) > 1):
        raise ValueError("t must lie in [-1, 1]")
    return chebyshev_U_all(k, t)[k]


def chebyshev_identity_residual(k: int, t, normalization: str = "k(k+2)"):
    """|U_k - (3t U'_k - (1-t^2) U''_k) / c_k|.

    The Chebyshev differential equation gives c_k = k(k+2).  Passing
    ``normalization="k(k+1)"`` evaluates the variant with c_k = k(k+1),
    which does not hold (residual 0.3 already at k=1, t=0.3).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    c = {"k(k+2)": k * (k + 2), "k(k+1)": k * (k + 1)}[normalization]
    u, du, d2u = chebyshev_U_all(k, t, derivs=2)
    t = np.asarray(t, dtype=float)
    return np.abs(u[k] - (3 * t * du[k] - (1 - t * t) * d2u[k]) / c)


def density(p: RealPolynomial, t):
    """(2/pi) sqrt(1-t^2) sum_k b_k U_{k-1}(t)."""
    t = np.asarray(t, dtype=float)
    u = chebyshev_U_all(p.degree - 1, t)
    s = np.tensordot(p.coeffs, u, axes=1)
    return 2 / math.pi * np.sqrt(np.clip(1 - t * t, 0.0, None)) * s


def _raw_measure(params: SuffridgeParams, t):
    # Antiderivative of the density, constant not yet fixed:
    #   int sqrt(1-x^2) U_0 = (arcsin t + t sqrt(1-t^2))/2
    #   int sqrt(1-x^2) U_m = -(1-t^2)^{3/2} U'_m(t) / (m(m+2)),  m >= 1
    N = params.N
    t = np.asarray(t, dtype=float)
    s = np.sqrt(np.clip(1 - t * t, 0.0, None))
    out = (np.arcsin(t) + t * s) / math.pi
    if N >= 2:
        _, du = chebyshev_U_all(N - 1, t, derivs=1)
        uc = chebyshev_U_all(N - 1, math.cos(params.alpha))
        k = np.arange(2, N + 1)
        w = (N - k + 1) / (k * k - 1) * uc[1:]
        out = out - 2 / (math.pi * N) * s**3 * np.tensordot(w, du[1:], axes=1)
    return out


def measure(params: SuffridgeParams, t):
    """Robertson measure mu(t) of S_{N,j}, normalized so that mu(-1) = 0."""
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1):
        raise ValueError("t must lie in [-1, 1]")
    return _raw_measure(params, t) - _raw_measure(params, -1.0)


def printed_measure(params: SuffridgeParams, t):
    """The closed form exactly as usually printed (constant -1/2, factor
    sqrt(1-t^2) on the U' sum).  For auditing only; not a measure."""
    N = params.N
    t = np.asarray(t, dtype=float)
    s = np.sqrt(np.clip(1 - t * t, 0.0, None))
    out = -0.5 + (np.arcsin(t) + t * s) / math.pi
    if N >= 2:
        _, du = chebyshev_U_all(N - 1, t, derivs=1)
        uc = chebyshev_U_all(N - 1, math.cos(params.alpha))
        k = np.arange(2, N + 1)
        w = (N - k + 1) / (k * k - 1) * uc[1:]
        out = out - 2 / (math.pi * N) * s * np.tensordot(w, du[1:], axes=1)
    return out


def quadrature_measure(p: RealPolynomial, t, nodes: int | None = None):
    """int_{-1}^t density, via x = cos(theta) and Gauss-Legendre in theta.

    Independent of the closed form: the integrand becomes the trigonometric
    polynomial (2/pi) sin(theta) sum_k b_k sin(k theta).
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    n = nodes or 2 * p.degree + 16
    x, w = np.polynomial.legendre.leggauss(n)
    lo = np.arccos(np.clip(t, -1, 1))  # theta from arccos(t) up to pi
    half = (math.pi - lo) / 2
    theta = lo[:, None] + half[:, None] * (x[None, :] + 1)
    k = np.arange(1, p.degree + 1)
    f = np.sin(theta) * (np.sin(theta[..., None] * k) @ p.coeffs)
    return 2 / math.pi * half * (f @ w)


def gauss_chebyshev_u(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights for int_{-1}^1 sqrt(1-t^2) g(t) dt, exact for deg g < 2n."""
    i = np.arange(1, n + 1)
    ang = i * math.pi / (n + 1)
    return np.cos(ang), math.pi / (n + 1) * np.sin(ang) ** 2


def representation_check(p: RealPolynomial, z, tol: float = 1e-13,
                         max_nodes: int = 1 << 14) -> float:
    """|int z density(t) / (1 - 2tz + z^2) dt - p(z)| by Gauss-Chebyshev
    (second kind) quadrature with node doubling.

    The kernel carries the factor z: without it the integral reproduces
    p(z)/z, since the generating function yields z^{k-1} per U_{k-1} mode.
    """
    z = complex(z)
    if abs(z) >= 1:
        raise ValueError("representation requires |z| < 1")
    n = 4 * (p.degree + 1)
    prev = None
    while n <= max_nodes:
        x, w = gauss_chebyshev_u(n)
        u = chebyshev_U_all(p.degree - 1, x)
        g = z * (p.coeffs @ u) / (1 - 2 * x * z + z * z)
        val = 2 / math.pi * np.sum(w * g)
        if prev is not None and abs(val - prev) <= tol * max(1.0, abs(val)):
            return float(abs(val - p(z)))
        prev = val
        n *= 2
    raise QuadratureNonConvergence(f"no convergence with {max_nodes} nodes at z={z}")


def mass(p: RealPolynomial) -> float:
    """Total mass int density dt; equals b_1 by orthogonality."""
    x, w = gauss_chebyshev_u(4 * (p.degree + 1))
    return float(2 / math.pi * np.sum(w * (p.coeffs @ chebyshev_U_all(p.degree - 1, x))))


def measure_table(params: SuffridgeParams, points: int = 401) -> MeasureTable:
    grid = np.cos(np.linspace(math.pi, 0, points))
    grid[0], grid[-1] = -1.0, 1.0
    return MeasureTable(grid, measure(params, grid), density(coeffs(params), grid))


def step_limit(q: float, t):
    """Limit measure: 0 below cos(q pi), 1 from cos(q pi) on (right-closed).

    For S_{N,j} the matching threshold is q = j/(N+1).
    """
    return np.where(np.asarray(t) >= math.cos(q * math.pi), 1.0, 0.0)
