"""Acceptance criteria, one check per criterion at its stated tolerance.

Each check returns ``(passed, detail)``; the pytest wrapper records a
PASS/FAIL line that ``conftest.py`` prints in the terminal summary. Run
``python tests/test_acceptance.py`` to print the lines without pytest.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from petalstar import radii
from petalstar.extremal import f0_coefficients, log_derivative, sharpness_witness
from petalstar.kernel import ASINH1, rho
from petalstar.petal import (
    InclusionGeometry,
    boundary,
    contains,
    inclusion_geometry,
    symmetry_residuals,
)
from petalstar.verify import certify, estimate_k0_radius

A = ASINH1
RESULTS = []


def constant_reproduction():
    t0 = time.perf_counter()
    table = [
        (radii.named_class_radius("lemniscate"), 0.985928, 1e-6),
        (radii.named_class_radius("rl"), 0.964694, 1e-6),
        (radii.named_class_radius("cardioid"), 0.523831, 1e-6),
        (radii.named_class_radius("exponential"), 0.632002, 1e-6),
        (radii.named_class_radius("crescent"), 0.674924, 1e-6),
        (radii.named_class_radius("booth", 1.0), 0.58241, 1e-5),
        (radii.named_class_radius("booth", 0.0), 0.881374, 1e-6),
        (radii.radius_F(), 0.178105, 1e-6),
    ]
    elapsed = time.perf_counter() - t0
    worst = max(abs(r.value - v) - tol for r, v, tol in table)
    return worst <= 0 and elapsed < 1.0, f"max excess over tol {worst:.2e}, {elapsed * 1e3:.1f} ms"


def root_equation():
    t0 = time.perf_counter()
    res = radii.convex_order_radius(0.0)
    elapsed = time.perf_counter() - t0
    resid = abs(radii.rconv_lhs(res.value))
    ok = abs(res.value - 0.37198) <= 5e-5 and resid < 1e-10 and elapsed < 0.1
    return ok, f"root {res.value:.8f}, residual {resid:.1e}, {elapsed * 1e3:.2f} ms"


def f0_coefficient_check():
    exact = f0_coefficients(6, exact=True).coeffs[1:]
    want = [Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 9), Fraction(-1, 72), Fraction(-1, 225)]
    approx = f0_coefficients(6).coeffs[1:]
    fl = max(abs(a - float(b)) for a, b in zip(approx, want))
    return list(exact) == want and fl <= 1e-14, f"exact match {list(exact) == want}, float err {fl:.1e}"


JANOWSKI = [(1, 1.0, -1.0), (1, 0.5, -0.5), (2, 1.0, -0.5), (1, 1.0, 0.0), (1, 1.0, 0.5), (2, 1.0, 0.3)]


def closed_form_grid():
    out = [radii.starlike_order_radius(a) for a in (0.2, 0.5, 0.8)]
    out += [radii.m_beta_radius(b) for b in (1.2, 1.5, 1.8)]
    out += [radii.k_st_radius(k) for k in (0.5, 1.0, 2.0)]
    out += [radii.radius_Sn(n) for n in (1, 2, 3)]
    out += [radii.radius_CSn(n, a) for n in (1, 2, 3) for a in (0.0, 0.5)]
    out += [radii.radius_janowski(n, C, D) for n, C, D in JANOWSKI]
    out += [radii.named_class_radius(c) for c in ("lemniscate", "rl", "cardioid", "exponential", "crescent")]
    out += [radii.named_class_radius("booth", a) for a in (0.0, 0.5, 1.0)]
    out += [radii.ratio_class_radius(c, n) for c in ("f1", "f2", "f3") for n in (1, 2)]
    return out


def oracle_equivalence():
    t0 = time.perf_counter()
    grid = closed_form_grid()
    diffs = [abs(certify(r).oracle_value - r.value) for r in grid]
    elapsed = time.perf_counter() - t0
    return max(diffs) < 1e-4 and elapsed < 60, f"{len(grid)} radii, max |diff| {max(diffs):.1e}, {elapsed:.1f} s"


def sharpness_touches():
    sharp = [r for r in closed_form_grid() if r.sharp]
    worst = 0.0
    for r in sharp:
        wit = sharpness_witness(r)
        worst = max(worst, abs(complex(log_derivative(wit.f, wit.z_star)) - wit.expected_w))
    return worst < 1e-6, f"{len(sharp)} witnesses, max touch residual {worst:.1e}"


def geometry_checks():
    rng = np.random.default_rng(0)
    z = np.sqrt(rng.uniform(0, 1, 10_000)) * np.exp(1j * rng.uniform(0, 2 * np.pi, 10_000))
    z = z[np.abs(z) < 1]
    member = bool(np.all(contains(rho(z))))
    _, w = boundary(4096)
    level = float(np.max(np.abs(np.abs(np.sinh(w - 1)) - 1)))
    sym = symmetry_residuals()
    convex = float(np.min((1 / (1 + z * z)).real))
    outer = float(np.max(np.abs(w - 1)))
    geo = inclusion_geometry()
    p = geo.parabola
    peak = max(abs(complex(p.vertex + y * y / (4 * p.focus), y) - (1 + 1j * y)) for y in (math.pi / 2, -math.pi / 2))
    ell = InclusionGeometry.ellipse_at(geo.k_min)
    tang = abs(ell.x0 + ell.a - (1 + A))
    checks = {
        "membership": member and level < 1e-9,
        "symmetry": sym.conj_residual < 1e-9 and sym.vertical_residual < 1e-9,
        "convexity": convex > 0 and z.size >= 9_900,
        "outer_disk": outer <= math.pi / 2 + 1e-12,
        "parabola_peak": peak < 1e-9,
        "ellipse_tangency": tang < 1e-12,
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, "all six" if not failed else f"failed {failed}"


def experimental_estimator():
    k0 = estimate_k0_radius()
    ok = getattr(k0, "experimental", False) and abs(float(k0) - 0.400435) <= 1e-3 and float(k0) > 0.37198
    return ok, f"estimate {float(k0):.6f} (experimental)"


def cli_end_to_end():
    cmd = [sys.executable, "-m", "petalstar", "verify", "--scope", "all"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    same = first.stdout == second.stdout
    failed = [l for l in first.stdout.decode().split("\n") if l.endswith(",false")]
    ok = first.returncode == 0 and same
    return ok, f"exit {first.returncode}, byte-identical {same}, failed rows {failed}"


CRITERIA = [
    ("constant reproduction", constant_reproduction),
    ("root equation", root_equation),
    ("f0 coefficients", f0_coefficient_check),
    ("oracle equivalence", oracle_equivalence),
    ("sharpness touches", sharpness_touches),
    ("geometry suite", geometry_checks),
    ("experimental estimator", experimental_estimator),
    ("CLI end-to-end", cli_end_to_end),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, check):
    passed, detail = check()
    line = f"{'PASS' if passed else 'FAIL'}  {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert passed, line


if __name__ == "__main__":
    status = 0
    for name, check in CRITERIA:
        passed, detail = check()
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
        status |= not passed
    sys.exit(status)
