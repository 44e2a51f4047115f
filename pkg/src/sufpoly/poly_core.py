"""Polynomial arithmetic, root finding and closed-curve geometry.

Every polynomial family in this package is normalized by f(0) = 0, so the
workhorse type :class:`RealPolynomial` stores only a_1..a_N.  Derivatives
carry a constant term and are returned as a general :class:`Polynomial`.
Complex points are plain Python/NumPy complex numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSegment, NonConvergence, PointOnCurve

TOL_ROOT = 1e-10
TOL_GEOM = 1e-12
MAX_ITER = 500


def _frozen_array(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True).ravel()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Real polynomial c_0 + c_1 z + ... + c_n z^n (ascending order)."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = _frozen_array(self.coeffs)
        if c.size == 0:
            raise ValueError("polynomial needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if nz.size else 0

    def __call__(self, z):
        return horner(self.coeffs, z)

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs.tolist()})"


@dataclass(frozen=True, eq=False)
class RealPolynomial:
    """a_1 z + a_2 z^2 + ... + a_N z^N with a tight degree N >= 1."""

    coeffs: np.ndarray
    degree: int = field(init=False)

    def __post_init__(self):
        c = _frozen_array(self.coeffs)
        if c.size == 0:
            raise ValueError("RealPolynomial needs degree >= 1")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        if c[-1] == 0.0:
            raise ValueError("leading coefficient a_N must be nonzero")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "degree", int(c.size))

    def __call__(self, z):
        return eval_poly(self, z)

    def __repr__(self) -> str:
        return f"RealPolynomial({self.coeffs.tolist()})"

    def full_coeffs(self) -> np.ndarray:
        """Ascending coefficients including the zero constant term."""
        return np.concatenate(([0.0], self.coeffs))

    def equals(self, other: "RealPolynomial", tol: float = 0.0) -> bool:
        return self.degree == other.degree and bool(
            np.all(np.abs(self.coeffs - other.coeffs) <= tol)
        )


@dataclass(frozen=True, eq=False)
class CurveSamples:
    """Ordered samples w_m = f(e^{i t_m}) of a (closed) image curve."""

    t: np.ndarray
    w: np.ndarray
    closed: bool = True

    def __post_init__(self):
        t = _frozen_array(self.t)
        w = _frozen_array(self.w, dtype=complex)
        if t.shape != w.shape:
            raise ValueError("t and w must have the same length")
        if t.size > 1 and np.any(np.diff(t) <= 0):
            raise ValueError("t must be strictly increasing")
        if not np.all(np.isfinite(w)):
            raise ValueError("curve samples must be finite")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "w", w)

    def __len__(self) -> int:
        return int(self.t.size)

    def rotated(self, shift: int) -> "CurveSamples":
        """Same closed curve starting at a different sample (t re-based)."""
        n = len(self)
        shift %= n
        t = np.concatenate((self.t[shift:], self.t[:shift] + 2 * np.pi))
        return CurveSamples(t - t[0], np.roll(self.w, -shift), self.closed)

    def reversed(self) -> "CurveSamples":
        w = self.w[::-1]
        t = np.concatenate(([0.0], 2 * np.pi - self.t[:0:-1]))
        return CurveSamples(t, np.concatenate((w[-1:], w[:-1])), self.closed)


def horner(coeffs, z):
    """Evaluate ascending ``coeffs`` at scalar or array ``z``."""
    z = np.asarray(z)
    acc = np.zeros(z.shape, dtype=np.result_type(z, float)) + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def eval_poly(p: RealPolynomial, z):
    """Sum a_k z^k by nested multiplication (vectorized over ``z``)."""
    z = np.asarray(z)
    acc = np.zeros(z.shape, dtype=np.result_type(z, float)) + p.coeffs[-1]
    for c in p.coeffs[-2::-1]:
        acc = acc * z + c
    out = acc * z
    return out[()] if out.ndim == 0 else out


def derivative(p: RealPolynomial | Polynomial) -> Polynomial:
    if isinstance(p, RealPolynomial):
        k = np.arange(1, p.degree + 1)
        return Polynomial(k * p.coeffs)
    c = p.coeffs
    if c.size == 1:
        return Polynomial([0.0])
    return Polynomial(np.arange(1, c.size) * c[1:])


def _as_ascending(p) -> np.ndarray:
    if isinstance(p, RealPolynomial):
        return p.full_coeffs()
    if isinstance(p, Polynomial):
        return p.coeffs
    return np.asarray(p, dtype=float)


def _residual_ok(c: np.ndarray, r: np.ndarray, tol: float) -> np.ndarray:
    n = c.size - 1
    scale = np.max(np.abs(c)) * np.maximum(1.0, np.abs(r)) ** n
    return np.abs(horner(c, r)) <= tol * scale


def _aberth(c: np.ndarray, max_iter: int) -> tuple[np.ndarray, bool]:
    n = c.size - 1
    dc = np.arange(1, n + 1) * c[1:]
    # Start on a circle at the geometric-mean root radius, angularly offset so
    # no start point sits on the real axis.
    radius = abs(c[0] / c[-1]) ** (1.0 / n) if c[0] != 0 else 0.5
    radius = radius if radius > 0 else 1.0
    z = radius * 1.05 * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    eye = np.eye(n, dtype=bool)
    for _ in range(max_iter):
        pz = horner(c, z)
        dpz = horner(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            diff[eye] = 1.0
            inv = 1.0 / diff
            inv[eye] = 0.0
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        step = np.where(pz == 0, 0.0, step)
        if not np.all(np.isfinite(step)):
            return z, False
        z = z - step
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(z))):
            return z, True
    return z, False


def _companion_roots(c: np.ndarray) -> np.ndarray:
    return np.roots(c[::-1]).astype(complex)


def _newton_polish(c: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    dc = np.arange(1, c.size) * c[1:]
    for _ in range(steps):
        d = horner(dc, z)
        ok = d != 0
        z = np.where(ok, z - horner(c, z) / np.where(ok, d, 1.0), z)
    return z


def roots(p, tol: float = TOL_ROOT, max_iter: int = MAX_ITER) -> np.ndarray:
    """All roots of ``p`` with multiplicity.

    Aberth-Ehrlich simultaneous iteration, falling back to companion-matrix
    eigenvalues (Newton-polished) if the residual bound is not met.
    Real-coefficient input gives conjugate-symmetric output up to rounding.
    """
    c = np.trim_zeros(_as_ascending(p).astype(float), "b")
    n = c.size - 1
    if n < 1:
        raise ValueError("roots() needs degree >= 1")
    if n == 1:
        return np.array([complex(-c[0] / c[1])])
    z, _ = _aberth(c, max_iter)
    if np.all(np.isfinite(z)) and np.all(_residual_ok(c, z, tol)):
        return np.sort_complex(z)
    z = _newton_polish(c, _companion_roots(c))
    if np.all(_residual_ok(c, z, tol)):
        return np.sort_complex(z)
    raise NonConvergence(
        f"root finder missed residual bound {tol:g} within {max_iter} iterations"
    )


def boundary_curve(p, samples: int = 4096) -> CurveSamples:
    """Sample t -> p(e^{it}) at ``samples`` equispaced t in [0, 2pi)."""
    t = 2 * np.pi * np.arange(samples) / samples
    w = p(np.exp(1j * t))
    return CurveSamples(t, w, closed=True)


def _segments(c: CurveSamples) -> tuple[np.ndarray, np.ndarray]:
    w = c.w
    if c.closed:
        return w, np.roll(w, -1)
    return w[:-1], w[1:]


def _cross(u, v):
    return u.real * v.imag - u.imag * v.real


def self_intersections(c: CurveSamples, tol: float = TOL_GEOM,
                       chunk: int = 2_000_000) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, of non-adjacent polyline segments that cross
    transversally.  Segment i joins sample i to sample i+1 (cyclically)."""
    if len(c) < 16:
        raise ValueError("geometry queries need at least 16 samples")
    a, b = _segments(c)
    n = a.size
    scale = max(1.0, float(np.max(np.abs(c.w))))
    seglen = np.abs(b - a)
    if np.any(seglen <= tol * scale):
        k = int(np.argmax(seglen <= tol * scale))
        raise DegenerateSegment(f"samples {k} and {(k + 1) % len(c)} coincide")

    xmin = np.minimum(a.real, b.real)
    xmax = np.maximum(a.real, b.real)
    ymin = np.minimum(a.imag, b.imag)
    ymax = np.maximum(a.imag, b.imag)
    order = np.argsort(xmin, kind="stable")
    xs = xmin[order]
    hi = np.searchsorted(xs, xmax[order], side="right")
    counts = np.maximum(hi - np.arange(1, n + 1), 0)

    found: list[tuple[int, int]] = []
    touches: list[tuple[int, int]] = []
    start = 0
    while start < n:
        # Block of sweep positions whose candidate lists fit in one chunk.
        cum = np.cumsum(counts[start:])
        stop = start + max(1, int(np.searchsorted(cum, chunk, side="right")))
        cnt = counts[start:stop]
        total = int(cnt.sum())
        if total:
            pos = np.repeat(np.arange(start, stop), cnt)
            offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
            i = order[pos]
            j = order[pos + 1 + offs]
            keep = (ymin[i] <= ymax[j]) & (ymin[j] <= ymax[i])
            d = np.abs(i - j)
            keep &= d > 1
            if c.closed:
                keep &= d < n - 1
            i, j = i[keep], j[keep]
            a1, b1, a2, b2 = a[i], b[i], a[j], b[j]
            e1, e2 = b1 - a1, b2 - a2
            o1 = _cross(e1, a2 - a1)
            o2 = _cross(e1, b2 - a1)
            o3 = _cross(e2, a1 - a2)
            o4 = _cross(e2, b1 - a2)
            # Transversal only: every endpoint must clear the other segment's
            # line by more than the geometric tolerance (tangential contacts
            # on the real axis otherwise register as rounding-noise crossings).
            l1, l2 = np.abs(e1), np.abs(e2)
            clear = np.minimum(np.minimum(np.abs(o1), np.abs(o2)) / l1,
                               np.minimum(np.abs(o3), np.abs(o4)) / l2)
            strict = (o1 * o2 < 0) & (o3 * o4 < 0)
            hit = strict & (clear > tol * scale)
            lo, hi_ = np.minimum(i[hit], j[hit]), np.maximum(i[hit], j[hit])
            found.extend(zip(lo.tolist(), hi_.tolist()))
            near = (clear <= tol * scale) & (o1 * o2 <= 0) & (o3 * o4 <= 0)
            near |= strict & ~hit
            touches.extend(zip(i[near].tolist(), j[near].tolist()))
        start = stop
    found.extend(_vertex_crossings(c, tol * scale))
    found.extend(_vertex_on_segment_crossings(c, a, b, touches, tol * scale))
    return sorted(set(found))


def _point_segment_distance(p, a, b) -> float:
    e = b - a
    u = min(max(((p - a) * np.conj(e)).real / abs(e) ** 2, 0.0), 1.0)
    return abs(a + u * e - p)


def _vertex_on_segment_crossings(c, a, b, touches, tol):
    w, n = c.w, len(c)
    out = set()
    for s, u in touches:
        for seg, other in ((s, u), (u, s)):
            for v in (seg, (seg + 1) % n):
                if not c.closed and v in (0, n - 1):
                    continue
                pv = w[v]
                if _point_segment_distance(pv, a[other], b[other]) > tol:
                    continue
                if abs(pv - a[other]) <= tol or abs(pv - b[other]) <= tol:
                    continue  # vertex-vertex contact, classified separately
                if other in (v, (v - 1) % n):
                    continue
                ap, an = w[v - 1] - pv, w[(v + 1) % n] - pv
                bp, bn = a[other] - pv, b[other] - pv
                if _ccw_between(ap, an, bp) != _ccw_between(ap, an, bn):
                    out.add((min(v, other), max(v, other)))
    return sorted(out)


def _coincident_vertices(w: np.ndarray, tol: float) -> list[tuple[int, int]]:
    order = np.argsort(w.real, kind="stable")
    ws = w[order]
    pairs = []
    for d in range(1, ws.size):
        close = (ws.real[d:] - ws.real[:-d]) <= tol
        if not close.any():
            break
        hit = close & (np.abs(ws[d:] - ws[:-d]) <= tol)
        for k in np.flatnonzero(hit):
            i, j = sorted((int(order[k]), int(order[k + d])))
            pairs.append((i, j))
    return pairs


def _ccw_between(start, end, x) -> bool:
    two_pi = 2 * np.pi
    a0 = np.angle(start)
    return (np.angle(x) - a0) % two_pi < (np.angle(end) - a0) % two_pi


def _vertex_crossings(c: CurveSamples, tol: float) -> list[tuple[int, int]]:
    # A crossing exactly at a shared sample point is invisible to the proper
    # segment test; classify it by whether the two local paths interleave.
    w, n = c.w, len(c)
    out = []
    for i, j in _coincident_vertices(w, tol):
        if not c.closed and (i in (0, n - 1) or j in (0, n - 1)):
            continue
        gap = j - i
        if gap <= 1 or (c.closed and gap >= n - 1):
            continue
        p = 0.5 * (w[i] + w[j])
        ap, an = w[i - 1] - p, w[(i + 1) % n] - p
        bp, bn = w[j - 1] - p, w[(j + 1) % n] - p
        if _ccw_between(ap, an, bp) != _ccw_between(ap, an, bn):
            out.append((i, j))
    return out


def winding_numbers(c: CurveSamples, w, tol: float = TOL_GEOM) -> np.ndarray:
    """Vectorized :func:`winding_number` over an array of points."""
    pts = np.atleast_1d(np.asarray(w, dtype=complex))
    out = np.empty(pts.size, dtype=int)
    verts = c.w if not c.closed else np.concatenate((c.w, c.w[:1]))
    for s in range(0, pts.size, 64):
        block = pts[s:s + 64]
        rel = verts[None, :] - block[:, None]
        if np.any(np.abs(rel) <= tol * max(1.0, float(np.max(np.abs(c.w))))):
            raise PointOnCurve("query point lies on a curve sample")
        turn = np.angle(rel[:, 1:] / rel[:, :-1]).sum(axis=1)
        out[s:s + 64] = np.rint(turn / (2 * np.pi)).astype(int)
    return out


def winding_number(c: CurveSamples, w: complex, tol: float = TOL_GEOM) -> int:
    """Winding number of the closed polyline through ``c`` around ``w``."""
    return int(winding_numbers(c, [w], tol)[0])


def distance_to_curve(c: CurveSamples, w) -> np.ndarray:
    """Euclidean distance from each point in ``w`` to the polyline."""
    a, b = _segments(c)
    e = b - a
    ee = np.abs(e) ** 2
    pts = np.atleast_1d(np.asarray(w, dtype=complex))
    out = np.empty(pts.size)
    for s in range(0, pts.size, 64):
        q = pts[s:s + 64, None]
        u = np.clip(((q - a) * e.conj()).real / ee, 0.0, 1.0)
        out[s:s + 64] = np.min(np.abs(a + u * e - q), axis=1)
    return out
