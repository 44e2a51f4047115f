"""Suffridge polynomials S_{N,j} and their equivalent representations.

    S_{N,j}(z) = sum_{k=1}^N ((N+1-k)/N) sin(k a)/sin(a) z^k,  a = j pi/(N+1)

Four evaluation routes are provided: the coefficient sum (:func:`coeffs`),
the rational closed form (:func:`closed_form_eval`), Suffridge's printed
boundary formula (:func:`boundary_formula_eval`, audited rather than
trusted) and Brandt's typically-real representation (:func:`brandt_eval`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import SingularDenominator
from .poly_core import TOL_GEOM, RealPolynomial, eval_poly

SWITCH_TOL = 1e-6


@dataclass(frozen=True)
class SuffridgeParams:
    N: int
    j: int
    alpha: float = field(init=False)

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N}")
        if int(self.j) != self.j or not 1 <= self.j <= self.N:
            raise ValueError(f"j must lie in [1, N={self.N}], got {self.j}")
        object.__setattr__(self, "alpha", self.j * math.pi / (self.N + 1))


@dataclass(frozen=True)
class TrigSumParams:
    alpha: float
    N: int

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")


def coeffs(params: SuffridgeParams) -> RealPolynomial:
    N, a = params.N, params.alpha
    k = np.arange(1, N + 1)
    return RealPolynomial((N + 1 - k) / N * np.sin(k * a) / math.sin(a))


def direct_sum(params: SuffridgeParams, z):
    return eval_poly(coeffs(params), z)


def _quadratic(alpha: float, z):
    return 1 - 2 * math.cos(alpha) * z + z * z


def _check_denominator(den, tol: float = TOL_GEOM) -> None:
    if np.any(np.abs(den) <= tol):
        raise SingularDenominator("1 - 2cos(alpha) z + z^2 vanishes at z = e^{+-i alpha}")


def sine_sum_closed(p: TrigSumParams, z):
    """sum_{k=1}^N sin(k alpha) z^k as a rational function of z."""
    a, N = p.alpha, p.N
    z = np.asarray(z, dtype=complex)
    den = _quadratic(a, z)
    _check_denominator(den)
    num = math.sin(a) - math.sin((N + 1) * a) * z**N + math.sin(N * a) * z ** (N + 1)
    out = z * num / den
    return out[()] if out.ndim == 0 else out


def cosine_sum_closed(p: TrigSumParams, z):
    """sum_{k=1}^N cos(k alpha) z^k as a rational function of z."""
    a, N = p.alpha, p.N
    z = np.asarray(z, dtype=complex)
    den = _quadratic(a, z)
    _check_denominator(den)
    num = (math.cos(a) - z - math.cos((N + 1) * a) * z**N
           + math.cos(N * a) * z ** (N + 1))
    out = z * num / den
    return out[()] if out.ndim == 0 else out


def weighted_sine_sum_closed(p: TrigSumParams, z):
    """sum_{k=1}^N k sin(k alpha) z^k, i.e. z d/dz of the sine sum."""
    a, N = p.alpha, p.N
    s, c = math.sin, math.cos(a)
    z = np.asarray(z, dtype=complex)
    den = _quadratic(a, z)
    _check_denominator(den)
    num = (s(a)
           - s(a) * z**2
           - (N + 1) * s((N + 1) * a) * z**N
           + ((N + 2) * s(N * a) + 2 * N * c * s((N + 1) * a)) * z ** (N + 1)
           - ((N - 1) * s((N + 1) * a) + 2 * (N + 1) * c * s(N * a)) * z ** (N + 2)
           + N * s(N * a) * z ** (N + 3))
    out = z * num / den**2
    return out[()] if out.ndim == 0 else out


def closed_form_numerator(params: SuffridgeParams, z):
    """N - 2(N+1)cos(a) z + (N+2) z^2 + (-1)^j z^{N+1} - (-1)^j z^{N+3}."""
    N, a = params.N, params.alpha
    sign = -1.0 if params.j % 2 else 1.0
    return (N - 2 * (N + 1) * math.cos(a) * z + (N + 2) * z**2
            + sign * z ** (N + 1) - sign * z ** (N + 3))


def closed_form_eval(params: SuffridgeParams, z, switch_tol: float = SWITCH_TOL):
    """S_{N,j}(z) from the rational closed form.

    The double pole at e^{+-i alpha} is removable; within ``switch_tol`` of it
    the coefficient sum is used instead.
    """
    N, a = params.N, params.alpha
    z = np.asarray(z, dtype=complex)
    den = _quadratic(a, z)
    near = np.abs(den) < switch_tol
    with np.errstate(divide="ignore", invalid="ignore"):
        out = z * closed_form_numerator(params, z) / (N * den**2)
    if np.any(near):
        out = np.where(near, direct_sum(params, z), out)
    return out[()] if out.ndim == 0 else out


def lemma_form_eval(params: SuffridgeParams, z):
    """S_{N,j} = ((N+1)/N) S_N/sin(a) - (1/N) T_N/sin(a), from the closed
    sine sum S_N and weighted sine sum T_N."""
    N, a = params.N, params.alpha
    tp = TrigSumParams(a, N)
    return ((N + 1) * sine_sum_closed(tp, z) - weighted_sine_sum_closed(tp, z)) / (N * math.sin(a))


class BoundaryAudit(NamedTuple):
    value: complex
    direct: complex
    discrepancy: float


def boundary_formula_eval(params: SuffridgeParams, t: float) -> BoundaryAudit:
    """Suffridge's boundary formula evaluated exactly as printed.

    Returns the printed value, the coefficient-sum value S_{N,j}(e^{it}) and
    their distance.  The printed formula is known to disagree with the
    polynomial (already at N = 1), so only ``direct`` should be relied on.
    """
    N, a, j = params.N, params.alpha, params.j
    d = math.cos(t) - math.cos(a)
    if abs(d) <= TOL_GEOM:
        raise SingularDenominator("cos t = cos alpha")
    re = (N + 1) / (2 * N * d)
    im = math.sin(t) * (1 - (-1) ** j * np.exp(1j * (N + 1) * t)) / (2 * N * d)
    value = complex(re + 1j * im)
    direct = complex(direct_sum(params, np.exp(1j * t)))
    return BoundaryAudit(value, direct, abs(value - direct))


def value_at_minus_one(N: int) -> float:
    """S_{N,1}(-1) = -(1/4)((N+1)/N) sec^2(pi/(2(N+1)))."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return -0.25 * (N + 1) / N / math.cos(math.pi / (2 * (N + 1))) ** 2


def value_at_plus_one(N: int) -> float:
    """S_{N,1}(1) = (1/4)((N+1)/N) csc^2(pi/(2(N+1))), the maximal modulus."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return 0.25 * (N + 1) / N / math.sin(math.pi / (2 * (N + 1))) ** 2


def _brandt_odd(n: int, b, bp, z):
    # Odd-index form over nodes cos((2k-1)pi/n).  Repairs relative to the
    # commonly printed statement, each forced by f(0) = 0 and by equality with
    # the closed form:
    #   "(1+z^2)" multiplying the b-square     -> (1+z)^2
    #   "(1+z^2)" multiplying the b'-square    -> (1-z)^2
    #   first constant "(sum b'_k)^2"          -> (sum b_k)^2
    b = np.asarray(b, dtype=float)
    bp = np.asarray(bp, dtype=float)
    m_lin, m_b = n // 2, (n + 1) // 2
    k = np.arange(1, max(m_lin, m_b) + 1)
    half = (2 * k - 1) * np.pi / (2 * n)
    dens = [1 - 2 * z * math.cos(2 * h) + z * z for h in half]

    out = 0.0
    for i in range(m_lin):
        w = b[i] ** 2 * math.cos(half[i]) ** 2 + bp[i] ** 2 * math.sin(half[i]) ** 2
        if w:
            out = out + 4 * n * w * z / dens[i]
    sb = sum(b[i] / dens[i] for i in range(m_b) if b[i])
    sbp = sum(bp[i] / dens[i] for i in range(m_lin) if bp[i])
    common = (1 + z**n) * (1 - z * z)
    out = out - common * (1 + z) ** 2 * sb**2 + common * (1 - z) ** 2 * sbp**2
    return out + b[:m_b].sum() ** 2 - bp[:m_lin].sum() ** 2


def _brandt_even(n: int, c, cp, z):
    # Even-index form over nodes cos(2k pi/n).  Same repairs as the odd form,
    # plus the c-square denominator "cos((k pi)/n)" -> cos(2k pi/n) and the
    # unbalanced "cos^2((k pi)/n" read as cos^2(k pi/n).
    c = np.asarray(c, dtype=float)
    cp = np.asarray(cp, dtype=float)
    m_lin, m_c = (n - 1) // 2, n // 2
    k = np.arange(1, max(m_lin, m_c) + 1)
    ang = k * np.pi / n
    dens = [1 - 2 * z * math.cos(2 * h) + z * z for h in ang]

    out = 0.0
    for i in range(m_lin):
        w = c[i] ** 2 * math.cos(ang[i]) ** 2 + cp[i] ** 2 * math.sin(ang[i]) ** 2
        if w:
            out = out + 4 * n * w * z / dens[i]
    sc = sum(c[i] / dens[i] for i in range(m_c) if c[i])
    scp = sum(cp[i] / dens[i] for i in range(m_lin) if cp[i])
    common = (1 - z**n) * (1 - z * z)
    out = out - common * (1 + z) ** 2 * sc**2 + common * (1 - z) ** 2 * scp**2
    return out + c[:m_c].sum() ** 2 - cp[:m_lin].sum() ** 2


def brandt_coefficients(params: SuffridgeParams) -> tuple[int, np.ndarray, np.ndarray]:
    """(n, b, b') with n = N+1 and a single nonzero entry 1/(2 sqrt N) at
    index floor((j+1)/2)."""
    n = params.N + 1
    k = (params.j + 1) // 2
    b = np.zeros(n)
    b[k - 1] = 1 / (2 * math.sqrt(params.N))
    return n, b, b.copy()


def brandt_eval(params: SuffridgeParams, z):
    z = np.asarray(z, dtype=complex)
    _check_denominator(_quadratic(params.alpha, z))
    n, b, bp = brandt_coefficients(params)
    form = _brandt_odd if params.j % 2 else _brandt_even
    out = np.asarray(form(n, b, bp, z), dtype=complex)
    return out[()] if out.ndim == 0 else out
