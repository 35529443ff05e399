"""Command-line front end.

Subcommands: ``radius``, ``boundary``, ``extremal``, ``verify`` and
``inclusion-geometry``. Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from . import radii
from .errors import ComputationError, DomainError
from .extremal import FunctionSpec, evaluate, f0_coefficients, log_derivative
from .kernel import ASINH1
from .petal import DEFAULT_SAMPLES, DiskSpec, InclusionGeometry, boundary, inclusion_geometry
from .verify import SCOPES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt(x) -> str:
    """Fixed 12-significant-digit formatting used for every numeric field."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    return f"{float(x):.12g}"


def csv_text(header: Sequence[str], rows: List[Sequence]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(v if isinstance(v, str) else fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def svg_text(curves: List[np.ndarray], size: int = 480) -> str:
    """A static SVG with one polyline per curve, y pointing up."""
    pts = np.concatenate([np.asarray(c) for c in curves])
    xmin, xmax = float(pts.real.min()), float(pts.real.max())
    ymin, ymax = float(pts.imag.min()), float(pts.imag.max())
    pad = 0.05 * max(xmax - xmin, ymax - ymin, 1e-9)
    xmin, xmax, ymin, ymax = xmin - pad, xmax + pad, ymin - pad, ymax + pad
    scale = size / max(xmax - xmin, ymax - ymin)
    w = int(round((xmax - xmin) * scale))
    h = int(round((ymax - ymin) * scale))
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    colours = ("black", "blue", "crimson", "seagreen", "darkorange", "purple", "teal", "gray")
    for i, c in enumerate(curves):
        c = np.asarray(c)
        xs = (c.real - xmin) * scale
        ys = (ymax - c.imag) * scale
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(xs, ys))
        colour = colours[i % len(colours)]
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{coords}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- radius ----------------------------------------------------------------------

RADIUS_CLASSES = (
    "s-alpha", "m-beta", "k-st", "k-alpha", "s-n", "f", "cs-n", "janowski",
    "lemniscate", "rl", "cardioid", "exponential", "crescent", "booth", "f1", "f2", "f3",
)


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise DomainError(f"--{name} is required for class {args.cls}")
    return v


def compute_radius(args) -> radii.RadiusResult:
    c = args.cls
    if c == "s-alpha":
        return radii.starlike_order_radius(_need(args, "alpha"))
    if c == "m-beta":
        return radii.m_beta_radius(_need(args, "beta"))
    if c == "k-st":
        return radii.k_st_radius(_need(args, "k"))
    if c == "k-alpha":
        return radii.convex_order_radius(args.alpha if args.alpha is not None else 0.0)
    if c == "s-n":
        return radii.radius_Sn(_need(args, "n"))
    if c == "f":
        return radii.radius_F()
    if c == "cs-n":
        return radii.radius_CSn(_need(args, "n"), _need(args, "alpha"))
    if c == "janowski":
        return radii.radius_janowski(args.n or 1, _need(args, "C"), _need(args, "D"))
    if c == "booth":
        return radii.named_class_radius("booth", _need(args, "alpha"))
    if c in ("f1", "f2", "f3"):
        return radii.ratio_class_radius(c, args.n or 1)
    return radii.named_class_radius(c)


def table_rows():
    """The table of stated constants."""
    return [
        radii.named_class_radius("lemniscate"),
        radii.named_class_radius("rl"),
        radii.named_class_radius("cardioid"),
        radii.named_class_radius("exponential"),
        radii.named_class_radius("crescent"),
        radii.named_class_radius("booth", 1.0),
        radii.named_class_radius("booth", 0.0),
        radii.radius_F(),
        radii.convex_order_radius(0.0),
        radii.k_st_radius(1.0),
    ]


def cmd_radius(args) -> tuple[str, int]:
    results = table_rows() if args.table else [compute_radius(args)]
    fmt_ = args.format or "json"
    if fmt_ == "csv":
        rows = [[r.source_class, json.dumps(r.params, sort_keys=True).replace(",", ";"), r.value,
                 r.method.value, r.sharp, r.ref.replace(",", ";")] for r in results]
        return csv_text(["class", "params", "value", "method", "sharp", "ref"], rows), EXIT_OK
    if fmt_ != "json":
        raise DomainError("radius supports --format json or csv")
    payload = [r.to_dict() for r in results]
    text = json.dumps(payload if args.table else payload[0], indent=2, sort_keys=True)
    return text + "\n", EXIT_OK


# --- boundary ----------------------------------------------------------------------

CURVES = tuple(f"gamma{i}" for i in range(8))


def curve(name: str, samples: int):
    """``(param, points)`` for the domain boundary and the curves bounding it."""
    geo = inclusion_geometry()
    extent = 2.0
    if name == "gamma0":
        return boundary(samples)
    if name in ("gamma1", "gamma2"):
        x = geo.alpha_max if name == "gamma1" else geo.beta_min
        y = np.linspace(-extent, extent, samples)
        return y, x + 1j * y
    if name == "gamma3":
        return geo.sector.sample(samples, extent=extent)
    if name == "gamma4":
        return geo.parabola.sample(samples, extent=extent)
    if name == "gamma5":
        return InclusionGeometry.ellipse_at(geo.k_min).sample(samples)
    if name in ("gamma6", "gamma7"):
        disk = DiskSpec(1.0, ASINH1 if name == "gamma6" else math.pi / 2)
        th = 2.0 * np.pi * np.arange(samples) / samples
        return th, disk.sample(samples)
    raise DomainError(f"unknown curve {name!r}; expected one of {CURVES}")


def cmd_boundary(args) -> tuple[str, int]:
    if args.samples < 4:
        raise DomainError("boundary needs --samples >= 4")
    names = CURVES if args.curve == "all" else (args.curve,)
    fmt_ = args.format or "csv"
    if fmt_ == "svg":
        return svg_text([np.append(pts, pts[0]) if n in ("gamma0", "gamma5", "gamma6", "gamma7") else pts
                         for n, (_, pts) in ((n, curve(n, args.samples)) for n in names)]), EXIT_OK
    rows, header = [], ["theta_or_param", "re", "im"]
    if len(names) > 1:
        header = ["curve"] + header
    for n in names:
        param, pts = curve(n, args.samples)
        for t, w in zip(param, pts):
            row = [t, w.real, w.imag]
            rows.append([n] + row if len(names) > 1 else row)
    if fmt_ == "json":
        return json.dumps([dict(zip(header, [v if isinstance(v, str) else float(v) for v in r]))
                           for r in rows]) + "\n", EXIT_OK
    return csv_text(header, rows), EXIT_OK


# --- extremal ----------------------------------------------------------------------

EXTREMAL_IDS = {
    "f0": "f0_petal", "table1-f1": "table1_f1", "table1-f2": "table1_f2", "table1-f3": "table1_f3",
    "lemniscate": "lemniscate_ext", "rl": "rl_ext", "cardioid": "cardioid_ext", "exp": "exp_ext",
    "crescent": "crescent_ext", "booth": "booth_ext", "sn": "sn_ext", "csn": "csn_ext",
    "f1": "f1_pair", "f2": "f2_pair", "f3": "f3_pair",
}


def _function(args) -> FunctionSpec:
    fid = EXTREMAL_IDS.get(args.id)
    if fid is None:
        raise DomainError(f"unknown function id {args.id!r}; expected one of {sorted(EXTREMAL_IDS)}")
    params = {}
    if fid in ("booth_ext", "csn_ext"):
        params["alpha"] = args.alpha if args.alpha is not None else 0.0
    if fid in ("sn_ext", "csn_ext", "f1_pair", "f2_pair", "f3_pair"):
        params["n"] = args.n or 1
    return FunctionSpec.closed_form(fid, **params)


def cauchy_coefficients(f: FunctionSpec, N: int, radius: float = 0.5, points: int = 256):
    """Taylor coefficients ``a_1..a_N`` from samples on ``|z| = radius``."""
    th = 2.0 * np.pi * np.arange(points) / points
    z = radius * np.exp(1j * th)
    vals = np.array([evaluate(f, zz) for zz in z])
    c = np.fft.fft(vals) / points
    return [float((c[k] / radius**k).real) for k in range(1, N + 1)]


def cmd_extremal(args) -> tuple[str, int]:
    f = _function(args)
    fmt_ = args.format or "csv"
    if args.coeffs is not None:
        N = args.coeffs
        if N < 1:
            raise DomainError("--coeffs needs N >= 1")
        if args.id == "f0":
            coeffs = list(f0_coefficients(N, exact=True).coeffs[1:])
        else:
            coeffs = cauchy_coefficients(f, N)
        if fmt_ == "json":
            return json.dumps([fmt(c) for c in coeffs]) + "\n", EXIT_OK
        return csv_text(["power", "coefficient"], [[k, c] for k, c in enumerate(coeffs, 1)]), EXIT_OK
    if args.eval is None:
        raise DomainError("extremal needs --coeffs N or --eval re,im")
    try:
        re_, im_ = (float(s) for s in args.eval.split(","))
    except ValueError:
        raise DomainError(f"--eval expects 're,im', got {args.eval!r}") from None
    z = complex(re_, im_)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| must be < 1, got {abs(z)}")
    val = evaluate(f, z)
    ld = complex(log_derivative(f, z))
    if fmt_ == "json":
        return json.dumps({"z": [z.real, z.imag], "f": [val.real, val.imag],
                           "zf'/f": [ld.real, ld.imag]}) + "\n", EXIT_OK
    return csv_text(["z_re", "z_im", "f_re", "f_im", "logderiv_re", "logderiv_im"],
                    [[z.real, z.imag, val.real, val.imag, ld.real, ld.imag]]), EXIT_OK


# --- verify ----------------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    reports = run_suite(args.scope, samples=args.samples, r_tol=args.tol)
    rows = [[r.claim, r.claimed_value, r.oracle_value, r.abs_diff, r.passed] for r in reports]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    if (args.format or "csv") == "json":
        return json.dumps([dict(zip(("claim", "claimed", "oracle", "diff", "passed"),
                                    [r[0], *map(float, r[1:4]), bool(r[4])])) for r in rows],
                          indent=2) + "\n", code
    return csv_text(["claim", "claimed", "oracle", "diff", "passed"], rows), code


def cmd_inclusion_geometry(args) -> tuple[str, int]:
    geo = inclusion_geometry()
    ell = InclusionGeometry.ellipse_at(geo.k_min)
    values = {
        "alpha_max": geo.alpha_max, "beta_min": geo.beta_min, "k_min": geo.k_min,
        "gamma_min": geo.gamma_min, "t": geo.t,
        "parabola_focus": geo.parabola.focus, "parabola_vertex": geo.parabola.vertex,
        "sector_half_angle": geo.sector.half_angle,
        "ellipse_x0": ell.x0, "ellipse_a": ell.a, "ellipse_b": ell.b,
    }
    if (args.format or "json") == "csv":
        return csv_text(["name", "value"], [[k, v] for k, v in values.items()]), EXIT_OK
    return json.dumps(values, indent=2) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # subparsers must not reset flags already given before the subcommand
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--format", choices=("csv", "json", "svg"), default=d(None))
        g.add_argument("--out", default=d(None), help="output path (default stdout)")
        g.add_argument("--samples", type=int, default=d(DEFAULT_SAMPLES))
        g.add_argument("--tol", type=float, default=d(1e-6), help="oracle bisection tolerance")
        return g

    common = global_flags(suppress=True)
    p = argparse.ArgumentParser(prog="petalstar", parents=[global_flags(suppress=False)],
                                description="Radius constants and geometry of the petal starlike class.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("radius", parents=[common], help="compute a radius constant")
    r.add_argument("--class", dest="cls", choices=RADIUS_CLASSES)
    r.add_argument("--table", action="store_true", help="print the table of stated constants")
    for name, typ in (("alpha", float), ("beta", float), ("k", float), ("n", int), ("C", float), ("D", float)):
        r.add_argument(f"--{name}", type=typ, default=None)
    r.set_defaults(func=cmd_radius)

    b = sub.add_parser("boundary", parents=[common], help="emit the domain boundary or a bounding curve")
    b.add_argument("--curve", default="gamma0", choices=CURVES + ("all",))
    b.set_defaults(func=cmd_boundary)

    e = sub.add_parser("extremal", parents=[common], help="coefficients or values of extremal functions")
    e.add_argument("--id", required=True)
    e.add_argument("--coeffs", type=int, default=None)
    e.add_argument("--eval", default=None, metavar="RE,IM")
    e.add_argument("--alpha", type=float, default=None)
    e.add_argument("--n", type=int, default=None)
    e.set_defaults(func=cmd_extremal)

    v = sub.add_parser("verify", parents=[common], help="run the verification suite")
    v.add_argument("--scope", default="all", choices=SCOPES)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("inclusion-geometry", parents=[common], help="constants of the inclusion relations")
    g.set_defaults(func=cmd_inclusion_geometry)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "radius" and not args.table and args.cls is None:
        parser.error("radius needs --class or --table")
    try:
        text, code = args.func(args)
    except (DomainError, ComputationError) as exc:
        print(f"petalstar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
