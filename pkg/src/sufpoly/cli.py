"""``suffridge`` command-line interface.

Every subcommand prints one JSON document (or CSV table) to stdout, or writes
it atomically to ``-o PATH``.  Exit codes: 0 success, 2 invalid input,
1 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from . import gfamily, kernels, robertson, suffridge, univalence
from .errors import NumericError
from .poly_core import CurveSamples, RealPolynomial, boundary_curve, derivative, roots

FAMILIES = ("suffridge", "sn-mu", "g", "fejer")


# output plumbing -----------------------------------------------------------

def _atomic_write(path: str, text: str) -> None:
    target = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        try:
            _atomic_write(path, text)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name.lower(): _jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _jsonable(obj.real), "im": _jsonable(obj.imag)}
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else None
    return obj


def to_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2) + "\n"


def _fmt(x) -> str:
    return format(float(x), ".17g")


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def curve_csv(c: CurveSamples) -> str:
    return to_csv(["t", "re", "im"], zip(c.t.tolist(), c.w.real.tolist(), c.w.imag.tolist()))


def emit_curve_csv(c: CurveSamples, path: str) -> None:
    """Write ``t,re,im`` rows with 17 significant digits and LF endings."""
    _emit(curve_csv(c), path)


# rendering -----------------------------------------------------------------

@dataclass(frozen=True)
class RenderSpec:
    width: int = 640
    height: int = 640
    samples: int = 4096
    stroke: str = "black"
    output_path: str | None = None

    def __post_init__(self):
        if self.samples < 256:
            raise ValueError("render needs samples >= 256")
        if self.width < 64 or self.height < 64:
            raise ValueError("width and height must be >= 64")


def render_svg(p: RealPolynomial, spec: RenderSpec) -> str:
    """Image curve of |z| = 1 fitted into the viewBox with a 5% margin; dots
    mark the images of the derivative roots."""
    w = boundary_curve(p, spec.samples).w
    marks = p(roots(derivative(p))) if p.degree >= 2 else np.array([], dtype=complex)
    lo_x, hi_x = float(w.real.min()), float(w.real.max())
    lo_y, hi_y = float(w.imag.min()), float(w.imag.max())
    inner_w, inner_h = 0.9 * spec.width, 0.9 * spec.height
    scale = min(inner_w / max(hi_x - lo_x, 1e-300), inner_h / max(hi_y - lo_y, 1e-300))
    ox = 0.05 * spec.width + (inner_w - scale * (hi_x - lo_x)) / 2
    oy = 0.05 * spec.height + (inner_h - scale * (hi_y - lo_y)) / 2

    def xy(v):
        return ox + scale * (v.real - lo_x), oy + scale * (hi_y - v.imag)

    pts = [xy(v) for v in w]
    d = "M " + " L ".join(f"{x:.4f} {y:.4f}" for x, y in pts) + " Z"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<path d="{d}" fill="none" stroke="{spec.stroke}" stroke-width="1"/>',
    ]
    for v in marks:
        x, y = xy(v)
        lines.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="3" fill="red"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# argument helpers ----------------------------------------------------------

def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"{args.command} requires {', '.join(missing)}")


def _polynomial(args) -> RealPolynomial:
    fam = args.family
    if fam == "suffridge":
        _need(args, "n", "j")
        return suffridge.coeffs(suffridge.SuffridgeParams(args.n, args.j))
    if fam == "sn-mu":
        _need(args, "n", "mu")
        return univalence.sn_mu_coeffs(univalence.RobustFamilyParams(args.n, args.mu))
    if fam == "g":
        _need(args, "n", "mu")
        return gfamily.g_coeffs(gfamily.GFamilyParams(args.n, args.mu))
    _need(args, "n")
    return gfamily.fejer_coeffs(args.n)


def _suffridge_params(args) -> suffridge.SuffridgeParams:
    _need(args, "n", "j")
    return suffridge.SuffridgeParams(args.n, args.j)


def _circle_points(rng, count):
    r = np.sqrt(rng.uniform(0, 0.98, count))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, count))


# subcommands ---------------------------------------------------------------

def cmd_coeffs(args):
    p = _polynomial(args)
    if args.format == "csv":
        return to_csv(["k", "a_k"], ((k, a) for k, a in enumerate(p.coeffs.tolist(), 1)))
    return to_json(p.coeffs)


def cmd_eval(args):
    params = _suffridge_params(args)
    if args.z is None:
        raise ValueError("eval requires --z")
    z = complex(args.z.replace(" ", ""))
    out = {"n": params.N, "j": params.j, "z": z,
           "direct": complex(suffridge.direct_sum(params, z)),
           "closed_form": complex(suffridge.closed_form_eval(params, z))}
    try:
        out["lemma_form"] = complex(suffridge.lemma_form_eval(params, z))
        out["brandt"] = complex(suffridge.brandt_eval(params, z))
    except ZeroDivisionError:
        out["lemma_form"] = out["brandt"] = None
    return to_json(out)


def boundary_audit_rows(params: suffridge.SuffridgeParams, samples: int):
    """Rows (t, printed, direct, closed, lemma, delta_printed, spread) on a half-offset
    grid; lemma is None where cos t = cos alpha."""
    rows = []
    for m in range(samples):
        t = 2 * math.pi * (m + 0.5) / samples
        z = complex(math.cos(t), math.sin(t))
        direct = complex(suffridge.direct_sum(params, z))
        closed = complex(suffridge.closed_form_eval(params, z))
        try:
            printed = suffridge.boundary_formula_eval(params, t).value
            lemma = complex(suffridge.lemma_form_eval(params, z))
        except ZeroDivisionError:
            printed = lemma = None
        forms = [v for v in (direct, closed, lemma) if v is not None]
        spread = max(abs(a - b) for a in forms for b in forms) / (1 + abs(direct))
        delta = abs(printed - direct) if printed is not None else None
        rows.append((t, printed, direct, closed, lemma, delta, spread))
    return rows


def cmd_boundary_audit(args):
    params = _suffridge_params(args)
    samples = args.samples or 64
    if samples < 4:
        raise ValueError("samples must be >= 4")
    rows = boundary_audit_rows(params, samples)
    if args.format == "csv":
        def parts(v):
            return ("", "") if v is None else (v.real, v.imag)
        return to_csv(
            ["t", "printed_re", "printed_im", "direct_re", "direct_im", "closed_re", "closed_im",
             "lemma_re", "lemma_im", "delta_printed", "spread"],
            ((t, *parts(e), *parts(d), *parts(c), *parts(l), "" if dl is None else dl, s)
             for t, e, d, c, l, dl, s in rows))
    deltas = [r[5] for r in rows if r[5] is not None]
    return to_json({
        "n": params.N, "j": params.j,
        "max_delta_printed": max(deltas) if deltas else None,
        "max_spread": max(r[6] for r in rows),
        "rows": [{"t": t, "printed": e, "direct": d, "closed_form": c, "lemma_form": l,
                  "delta_printed": dl, "spread": s} for t, e, d, c, l, dl, s in rows],
    })


def cmd_extremal(args):
    _need(args, "n")
    p = suffridge.coeffs(suffridge.SuffridgeParams(args.n, 1))
    return to_json({
        "n": args.n,
        "value_at_minus_one": suffridge.value_at_minus_one(args.n),
        "direct_at_minus_one": float(p(-1.0).real),
        "value_at_plus_one": suffridge.value_at_plus_one(args.n),
        "direct_at_plus_one": float(p(1.0).real),
        "limit_at_minus_one": -0.25,
    })


def cmd_brandt_check(args):
    params = _suffridge_params(args)
    rng = np.random.default_rng(args.seed)
    z = _circle_points(rng, args.samples or 32)
    closed = suffridge.closed_form_eval(params, z)
    brandt = suffridge.brandt_eval(params, z)
    rel = np.abs(brandt - closed) / np.maximum(1.0, np.abs(closed))
    return to_json({"n": params.N, "j": params.j, "points": int(z.size),
                    "seed": args.seed, "max_relative_difference": float(rel.max())})


def cmd_approx(args):
    params = _suffridge_params(args)
    radius = 0.5 if args.radius is None else args.radius
    spec = kernels.KernelSpec(args.target, args.q)
    err = kernels.approx_error(params, radius, spec, args.samples or 4096)
    return to_json({"n": params.N, "j": params.j, "radius": radius, "target": args.target,
                    "q": args.q, "error": err, "n_times_error": params.N * err})


def cmd_subordination(args):
    _need(args, "n")
    out = {"n": args.n, "rho": kernels.rho(args.n),
           "subordination": kernels.subordination_check(args.n, args.samples or 256)}
    if args.n >= 2:
        out["dimitrov_interval"] = kernels.dimitrov_interval(args.n)
        out["dimitrov_check"] = kernels.dimitrov_interval_check(args.n)
    return to_json(out)


def cmd_robertson(args):
    params = _suffridge_params(args)
    points = args.samples or 401
    if points < 3:
        raise ValueError("samples must be >= 3")
    table = robertson.measure_table(params, points)
    if args.format == "csv":
        return to_csv(["t", "mu", "density"],
                      zip(table.grid.tolist(), table.mu.tolist(), table.density.tolist()))
    p = suffridge.coeffs(params)
    q = params.j / (params.N + 1) if args.q is None else args.q
    quad = robertson.quadrature_measure(p, table.grid)
    return to_json({
        "n": params.N, "j": params.j, "q": q,
        "mass": robertson.mass(p),
        "mu_at_one": float(table.mu[-1]),
        "min_density": float(table.density.min()),
        "nondecreasing": bool(np.all(np.diff(table.mu) >= -1e-12)),
        "closed_vs_quadrature": float(np.max(np.abs(quad - table.mu))),
        "sup_distance_to_step": float(np.max(np.abs(table.mu - robertson.step_limit(q, table.grid)))),
        "table": {"t": table.grid, "mu": table.mu, "density": table.density},
    })


def _phi_entry(N: int, mu: float) -> dict:
    p = univalence.sn_mu_coeffs(univalence.RobustFamilyParams(N, mu))
    ok, low = univalence.typically_real_check(p)
    wit = univalence.negativity_witnesses(N, mu)
    return {"mu": mu, "identity_residual": univalence.phi_identity_residual(N, mu),
            "typically_real": ok, "min_im_upper_half": low,
            "witnesses": [{"t": t, "phi": float(univalence.phi(N, t, mu))} for t in wit]}


def cmd_phi_check(args):
    _need(args, "n")
    if args.mu is not None:
        return to_json({"n": args.n, "entries": [_phi_entry(args.n, args.mu)]})
    rng = np.random.default_rng(args.seed)
    mus = np.sort(rng.uniform(0.0, math.pi, args.samples or 50))
    entries = [_phi_entry(args.n, float(m)) for m in mus if 0 < m < math.pi]
    return to_json({"n": args.n, "seed": args.seed,
                    "max_identity_residual": max(e["identity_residual"] for e in entries),
                    "typically_real_count": sum(e["typically_real"] for e in entries),
                    "entries": entries})


def cmd_univalence(args):
    p = _polynomial(args)
    samples = args.samples or univalence.BOUNDARY_SAMPLES
    rep = univalence.univalence_report(p, samples)
    out = {"family": args.family, "coeffs": p.coeffs, "report": rep,
           "max_root_deviation": rep.max_root_deviation,
           "min_boundary_distance": univalence.min_boundary_distance(p, samples)}
    if p.degree >= 2:
        out["quasi_extremal"] = univalence.quasi_extremal_check(p, samples)
    return to_json(out)


def cmd_gfamily(args):
    _need(args, "n", "mu")
    p = gfamily.g_coeffs(gfamily.GFamilyParams(args.n, args.mu))
    radius = 0.5 if args.radius is None else args.radius
    rep = univalence.univalence_report(p)
    return to_json({"n": args.n, "mu": args.mu, "coeffs": p.coeffs, "radius": radius,
                    "limit_error": gfamily.g_limit_check(args.n, radius, args.mu),
                    "verdict": rep.verdict, "max_root_deviation": rep.max_root_deviation})


def cmd_zeta(args):
    _need(args, "n")
    est = gfamily.zeta_estimate(args.n, args.step or 0.01, args.tol or 1e-4)
    return to_json({**_jsonable(est), "threshold": est.threshold})


def cmd_render(args):
    p = _polynomial(args)
    if args.format == "csv":
        return curve_csv(boundary_curve(p, args.samples or 4096))
    spec = RenderSpec(samples=args.samples or 4096, output_path=args.o)
    return render_svg(p, spec)


def cmd_dk_objective(args):
    _need(args, "n")
    j = args.j or 1
    p = suffridge.coeffs(suffridge.SuffridgeParams(args.n, j))
    base, others = univalence.dk_trials(p, args.samples or 100, args.seed)
    target = -math.tan(math.pi / (2 * (args.n + 1))) ** 2
    return to_json({"n": args.n, "j": j, "seed": args.seed, "objective": base,
                    "expected": target if j == 1 else None,
                    "best_random": float(others.max()), "margin": base - float(others.max()),
                    "trials": int(others.size)})


COMMANDS = {
    "coeffs": cmd_coeffs, "eval": cmd_eval, "boundary-audit": cmd_boundary_audit,
    "extremal": cmd_extremal, "brandt-check": cmd_brandt_check, "approx": cmd_approx,
    "subordination": cmd_subordination, "robertson": cmd_robertson,
    "phi-check": cmd_phi_check, "univalence": cmd_univalence, "gfamily": cmd_gfamily,
    "zeta": cmd_zeta, "render": cmd_render, "dk-objective": cmd_dk_objective,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--j", type=int)
    common.add_argument("--mu", type=float)
    common.add_argument("--q", type=float)
    common.add_argument("--radius", type=float)
    common.add_argument("--samples", type=int)
    common.add_argument("--step", type=float)
    common.add_argument("--tol", type=float)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("-o", metavar="PATH")
    common.add_argument("--family", choices=FAMILIES, default="suffridge")
    common.add_argument("--target", choices=kernels.KINDS, default="koebe")
    common.add_argument("--z", help="complex point, e.g. 0.3+0.2j")

    parser = argparse.ArgumentParser(prog="suffridge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"suffridge {args.command}: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"suffridge {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    try:
        _emit(text, args.o)
    except OSError as exc:
        print(f"suffridge {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
