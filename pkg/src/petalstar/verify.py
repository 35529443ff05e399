"""Independent numerical oracles for the radius constants and inclusion claims.

The central tool is :func:`sup_radius_oracle`, which recovers a radius by
brute force: the largest ``r`` for which the sampled image of ``|z| = r``
under a map lies in a target set. It never looks at the closed forms.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from . import radii
from .errors import ComputationError, DomainError
from .extremal import FunctionSpec, log_derivative, sharpness_witness, table1_generator
from .kernel import ASINH1, rho, sinh_c
from .petal import (
    DEFAULT_SAMPLES,
    DiskSpec,
    InclusionGeometry,
    bounds,
    boundary,
    contains,
    golden_max,
    inclusion_geometry,
    symmetry_residuals,
    unit_circle,
)
from .radii import RadiusResult

log = logging.getLogger(__name__)

A = ASINH1

ORACLE_TOL = 1e-4
TOUCH_TOL = 1e-6
RESIDUAL_TOL = 1e-10
GEOMETRY_TOL = 1e-9


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check.

    For two-sided claims ``abs_diff = |oracle - claimed|``; for one-sided bound
    claims it is the amount by which the bound is exceeded (0 when it holds).
    Sharp radius certificates also carry the witness touch residual.
    """

    claim: str
    oracle_value: float
    claimed_value: float
    abs_diff: float
    passed: bool
    samples: int
    tol: float
    touch_residual: Optional[float] = None
    note: str = ""


def _report(claim, oracle, claimed, diff, samples, tol, touch=None, note=""):
    ok = diff <= tol and (touch is None or touch < TOUCH_TOL)
    return VerificationReport(claim, float(oracle), float(claimed), float(diff), bool(ok),
                              int(samples), tol, touch, note)


def _two_sided(claim, oracle, claimed, samples, tol, note=""):
    return _report(claim, oracle, claimed, abs(oracle - claimed), samples, tol, note=note)


def _upper_bound(claim, oracle, bound, samples, tol, note=""):
    return _report(claim, oracle, bound, max(0.0, oracle - bound), samples, tol, note=note)


# --- targets --------------------------------------------------------------------

def petal_target(tol: float = 0.0):
    return lambda w: contains(w, tol)


def starlike_target(alpha: float):
    return lambda w: w.real > alpha


def m_beta_target(beta: float):
    return lambda w: w.real < beta


def k_st_target(k: float):
    return lambda w: w.real > k * np.abs(w - 1.0)


def witness_map(f: FunctionSpec):
    """``(r, theta) -> z f'(z)/f(z)`` on the circle ``|z| = r``."""
    return lambda r, th: log_derivative(f, unit_circle(th, r))


# --- sup-radius oracle -----------------------------------------------------------

def _holds(w_map, target, r: float, th: np.ndarray) -> bool:
    with np.errstate(all="ignore"):
        w = np.asarray(w_map(r, th), dtype=complex)
        if not np.all(np.isfinite(w)):
            return False
        return bool(np.all(target(w)))


def sup_radius_oracle(
    w_map: Callable,
    target: Callable,
    r_tol: float = 1e-6,
    angles: int = 1024,
    coarse: int = 64,
) -> float:
    """Largest ``r`` in (0, 1) whose sampled circle image lies in ``target``.

    A coarse scan over ``coarse`` radii establishes that failure is monotone
    in ``r``; the crossing is then bisected to width ``r_tol``. If the target
    holds up to the search cap ``1 - r_tol`` the cap is returned.

    Raises:
        ComputationError: if the coarse scan sees a failure followed by a pass.
    """
    th = 2.0 * np.pi * np.arange(angles) / angles
    if not _holds(w_map, target, r_tol, th):
        log.warning("target already fails at r = %g; degenerate radius 0", r_tol)
        return 0.0
    cap = 1.0 - r_tol
    grid = cap * np.arange(1, coarse + 1) / coarse
    ok = [_holds(w_map, target, float(r), th) for r in grid]
    if all(ok):
        return cap
    first_fail = ok.index(False)
    if any(ok[first_fail:]):
        raise ComputationError(
            f"non-monotone target: fails at r={grid[first_fail]:.4f} but holds further out"
        )
    lo = float(grid[first_fail - 1]) if first_fail else r_tol
    hi = float(grid[first_fail])
    while hi - lo > r_tol:
        mid = 0.5 * (lo + hi)
        if _holds(w_map, target, mid, th):
            lo = mid
        else:
            hi = mid
    return lo


# --- certification of radius results ---------------------------------------------

def _registered(result: RadiusResult):
    p = result.params
    src, tgt = result.source_class, result.target_class
    f0 = FunctionSpec.closed_form("f0_petal")
    if tgt == "S_alpha":
        return witness_map(f0), starlike_target(p["alpha"])
    if tgt == "M_beta":
        return witness_map(f0), m_beta_target(p["beta"])
    if tgt == "K_ST":
        return witness_map(f0), k_st_target(p["k"])
    if src == "Janowski_n":
        n, C, D = int(p["n"]), p["C"], p["D"]

        def w_map(r, th):
            zn = unit_circle(th, r) ** n
            return (1.0 + C * zn) / (1.0 + D * zn)

        return w_map, petal_target()
    if src == "F":
        # F is the class S_1; its extremal is z(1+z)/(1-z)
        return witness_map(FunctionSpec.closed_form("sn_ext", n=1)), petal_target()
    if result.sharp:
        return witness_map(sharpness_witness(result).f), petal_target()
    raise DomainError(f"no oracle registered for {src} -> {tgt}")


def touch_residual(result: RadiusResult) -> float:
    """``|z f'/f - w_expected|`` for the witness of a sharp result at its touch point."""
    wit = sharpness_witness(result)
    return abs(complex(log_derivative(wit.f, wit.z_star)) - wit.expected_w)


def _label(result: RadiusResult) -> str:
    if result.params:
        args = ",".join(f"{k}={v:g}" for k, v in result.params.items())
        return f"radius:{result.source_class}->{result.target_class}({args})"
    return f"radius:{result.source_class}->{result.target_class}"


def certify(result: RadiusResult, r_tol: float = 1e-6, angles: int = 1024) -> VerificationReport:
    """Compare a radius with the sup-radius oracle run on its witness.

    Whole-disk results (value 1) pass when the oracle reaches the search cap.
    Sharp results must also touch the expected boundary value within 1e-6.
    """
    w_map, target = _registered(result)
    oracle = sup_radius_oracle(w_map, target, r_tol=r_tol, angles=angles)
    touch = None
    note = ""
    if result.whole_disk:
        note = "whole disk; oracle at search cap" if oracle >= 1.0 - r_tol else "whole disk"
    if result.sharp and not result.whole_disk:
        touch = touch_residual(result)
    return _report(_label(result), oracle, result.value, abs(oracle - result.value), angles,
                   ORACLE_TOL, touch=touch, note=note)


# --- inclusion relations -----------------------------------------------------------

INCLUSION_RELATIONS = ("half_plane_lower", "half_plane_upper", "sector", "parabola", "ellipse_kmin")


def _polished_max(func: Callable[[np.ndarray], np.ndarray], samples: int, period: float = 2 * np.pi):
    """Max of a periodic function: sampled, then golden-section on the best cell."""
    th = period * np.arange(samples) / samples
    vals = func(th)
    i = int(np.argmax(vals))
    h = period / samples
    scalar = lambda t: float(func(np.array([t]))[0])
    _, v = golden_max(scalar, th[i] - h, th[i] + h, tol=1e-13)
    return max(v, float(vals[i]))


def check_inclusion(relation: str, samples: int = DEFAULT_SAMPLES) -> VerificationReport:
    """Numerical check of one inclusion relation of the petal domain."""
    geo = inclusion_geometry()
    petal = lambda th: np.asarray(rho(unit_circle(th)))
    if relation == "half_plane_lower":
        oracle = -_polished_max(lambda th: -petal(th).real, samples)
        return _two_sided("inclusion:half_plane_lower", oracle, geo.alpha_max, samples, GEOMETRY_TOL,
                          note="min Re over boundary")
    if relation == "half_plane_upper":
        oracle = _polished_max(lambda th: petal(th).real, samples)
        return _two_sided("inclusion:half_plane_upper", oracle, geo.beta_min, samples, GEOMETRY_TOL,
                          note="max Re over boundary")
    if relation == "sector":
        oracle = _polished_max(lambda th: np.abs(np.angle(petal(th))), samples)
        bound = math.atan(1.0 / geo.t)
        return _upper_bound("inclusion:sector", oracle, bound, samples, GEOMETRY_TOL,
                            note="max |arg w| over boundary")
    if relation == "parabola":
        a, b = geo.parabola.focus, geo.parabola.vertex

        def excess(th):
            w = petal(th)
            return w.imag**2 - 4.0 * a * (w.real - b)

        oracle = _polished_max(excess, samples)
        return _upper_bound("inclusion:parabola", oracle, 0.0, samples, GEOMETRY_TOL,
                            note="max of Y^2 - 4a(X - b) over boundary")
    if relation == "ellipse_kmin":
        ell = InclusionGeometry.ellipse_at(geo.k_min)

        def modulus(th):
            w = ell.x0 + ell.a * np.cos(th) + 1j * ell.b * np.sin(th)
            return np.abs(np.asarray(sinh_c(w - 1.0)))

        oracle = _polished_max(modulus, samples)
        _, pts = ell.sample(samples)
        inside = bool(np.all(contains(pts, -GEOMETRY_TOL)))
        return _upper_bound("inclusion:ellipse_kmin", oracle, 1.0, samples, GEOMETRY_TOL,
                            note="max |sinh(w - 1)| on the k_min ellipse"
                            + ("" if inside else "; points outside"))
    raise DomainError(f"unknown inclusion relation {relation!r}; expected one of {INCLUSION_RELATIONS}")


# --- Janowski subset and P_n bounds  -----------------------------------------------

def janowski_subset(C: float, D: float) -> bool:
    """Sufficient condition for ``S*[C, D]`` to lie inside the petal class."""
    if not -1.0 < D < C <= 1.0:
        raise DomainError(f"need -1 < D < C <= 1, got C={C}, D={D}")
    one_d2 = 1.0 - D * D
    one_cd = 1.0 - C * D
    first = (1.0 - A) * one_d2 < one_cd <= one_d2 and C - D <= (1.0 - D) * A
    second = one_d2 <= one_cd < (1.0 + A) * one_d2 and C - D <= (1.0 + D) * A
    return first or second


def pn_alpha_bound(n: int, alpha: float, r: float) -> float:
    """Bound on ``|z p'(z)/p(z)|`` over ``|z| = r`` for ``p`` in ``P_n(alpha)``."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    if n < 1 or not 0.0 <= alpha < 1.0:
        raise DomainError("need n >= 1 and 0 <= alpha < 1")
    rn = r**n
    return 2.0 * (1.0 - alpha) * n * rn / ((1.0 - rn) * (1.0 + (1.0 - 2.0 * alpha) * rn))


def pn_cd_disk(n: int, C: float, D: float, r: float) -> DiskSpec:
    """Disk containing ``p(|z| = r)`` for ``p`` in ``P_n[C, D]``."""
    if not -1.0 <= D < C <= 1.0:
        raise DomainError(f"need -1 <= D < C <= 1, got C={C}, D={D}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    r2n = r ** (2 * n)
    den = 1.0 - D * D * r2n
    return DiskSpec((1.0 - C * D * r2n) / den, (C - D) * r**n / den)


# --- experimental convexity radius ----------------------------------------------

class ExperimentalEstimate(float):
    """A float flagged as a non-certified numerical estimate."""

    experimental = True
    note = "numerical estimate; no proof of sharpness"

    def __repr__(self):
        return f"ExperimentalEstimate({float(self)!r})"


def f0_convexity_map(r, th):
    """``1 + z f0''/f0'`` on ``|z| = r``; equals ``p + z p'/p`` with ``p = 1 + asinh z``."""
    z = unit_circle(th, r)
    p = np.asarray(rho(z))
    return p + z / (p * np.sqrt(1.0 + z * z))


def estimate_k0_radius(samples: int = 4096, r_tol: float = 1e-9) -> ExperimentalEstimate:
    """Largest ``r`` with ``min Re(1 + z f0''/f0') >= 0`` on ``|z| = r`` (experimental)."""
    if samples < 1024:
        raise DomainError("need at least 1024 angular samples")
    value = sup_radius_oracle(f0_convexity_map, lambda w: w.real >= 0.0, r_tol=r_tol, angles=samples)
    return ExperimentalEstimate(value)


# --- suites ---------------------------------------------------------------------

JANOWSKI_PAIRS = ((1, 1.0, -1.0), (1, 0.5, -0.5), (2, 1.0, -0.5), (1, 1.0, 0.0), (1, 1.0, 0.5), (2, 1.0, 0.3))


def radius_results() -> List[RadiusResult]:
    """The closed-form radius grid covered by the oracle comparison."""
    out: List[RadiusResult] = []
    out += [radii.starlike_order_radius(a) for a in (0.05, 0.2, 0.5, 0.8)]
    out += [radii.m_beta_radius(b) for b in (1.2, 1.5, 1.8, 2.0)]
    out += [radii.k_st_radius(k) for k in (0.5, 1.0, 2.0)]
    out += [radii.radius_Sn(n) for n in (1, 2, 3)]
    out += [radii.radius_CSn(n, a) for n in (1, 2, 3) for a in (0.0, 0.5)]
    out += [radii.radius_janowski(n, C, D) for n, C, D in JANOWSKI_PAIRS]
    out += [radii.named_class_radius(c) for c in radii.NAMED_CLASSES if c != "booth"]
    out += [radii.named_class_radius("booth", a) for a in (0.0, 0.5, 1.0)]
    out += [radii.ratio_class_radius(c, n) for c in radii.RATIO_CLASSES for n in (1, 2)]
    return out


def radii_suite(r_tol: float = 1e-6, angles: int = 1024) -> List[VerificationReport]:
    reports = [certify(res, r_tol, angles) for res in radius_results()]
    for n in (1, 2, 3):
        R = radii.radius_Sn(n).value
        reports.append(_two_sided(f"bound:pn_alpha_at_Sn(n={n})", pn_alpha_bound(n, 0.0, R), A,
                                  1, RESIDUAL_TOL))
    conv = radii.convex_order_radius(0.0)
    reports.append(_two_sided("root:K_alpha(alpha=0) residual", abs(radii.rconv_lhs(conv.value)), 0.0,
                              1, RESIDUAL_TOL))
    reports.append(_two_sided("root:K_alpha(alpha=0) value", conv.value, 0.37198, 1, 5e-5))
    k0 = estimate_k0_radius(4096)
    reports.append(_two_sided("experimental:K_0 estimate", float(k0), 0.400435, 4096, 1e-3,
                              note="not certified"))
    reports.append(_upper_bound("order:K_alpha(0) <= K_0 estimate", conv.value, float(k0), 4096, 0.0))
    reports.append(_upper_bound("order:F <= S_n(1)", radii.radius_F().value, radii.radius_Sn(1).value,
                                1, 0.0, note="stated F value only; not oracle-certified"))
    return reports


def inclusion_suite(samples: int = DEFAULT_SAMPLES) -> List[VerificationReport]:
    return [check_inclusion(rel, samples) for rel in INCLUSION_RELATIONS]


def geometry_suite(samples: int = DEFAULT_SAMPLES) -> List[VerificationReport]:
    reports = []
    sym = symmetry_residuals(samples)
    reports.append(_two_sided("geometry:conjugation_symmetry", sym.conj_residual, 0.0, samples, GEOMETRY_TOL))
    reports.append(_two_sided("geometry:vertical_symmetry", sym.vertical_residual, 0.0, samples, GEOMETRY_TOL))

    # 100 x 100 polar grid strictly inside the disk
    rr = np.linspace(0.0, 0.9999, 100)[:, None]
    tt = 2.0 * np.pi * np.arange(100)[None, :] / 100
    zz = (rr * np.exp(1j * tt)).ravel()
    conv_min = float(np.min((1.0 / (1.0 + zz * zz)).real))
    reports.append(_report("geometry:convexity_positivity", conv_min, 0.0, max(0.0, -conv_min),
                           zz.size, 0.0, note="min Re(1/(1+z^2)); must be positive"))

    w = np.asarray(rho(zz))
    resid = float(np.max(np.abs(np.asarray(sinh_c(w - 1.0)) - zz)))
    all_in = bool(np.all(contains(w, 0.0)))
    reports.append(_report("geometry:membership_identity", resid, 0.0, resid if all_in else math.inf,
                           zz.size, 1e-12))

    _, gamma0 = boundary(samples)
    outer = float(np.max(np.abs(gamma0 - 1.0)))
    reports.append(_upper_bound("geometry:outer_disk_pi/2", outer, math.pi / 2, samples, 1e-12))

    imax = _polished_max(lambda th: np.abs(np.asarray(rho(unit_circle(th))).imag), samples)
    reports.append(_two_sided("geometry:im_bound_pi/2", imax, math.pi / 2, samples, GEOMETRY_TOL))

    worst = 0.0
    for r in (0.25, 0.5, 0.75, 1.0):
        _, pts = boundary(samples, r)
        worst = max(worst, float(np.min(np.abs(pts - (1.0 - math.asinh(r))))))
    reports.append(_two_sided("geometry:maximal_inscribed_disk", worst, 0.0, samples, TOUCH_TOL))

    geo = inclusion_geometry()
    a, b = geo.parabola.focus, geo.parabola.vertex
    peak = max(abs(y * y - 4.0 * a * (1.0 - b)) for y in (math.pi / 2, -math.pi / 2))
    reports.append(_two_sided("geometry:parabola_peak_touch", peak, 0.0, 2, GEOMETRY_TOL))
    ell = InclusionGeometry.ellipse_at(geo.k_min)
    reports.append(_two_sided("geometry:ellipse_tangency", ell.x0 + ell.a, 1.0 + A, 1, 1e-12))

    rs = np.linspace(0.0, 1.0, 65)
    re_max = np.array([bounds(float(r)).re_max for r in rs])
    re_min = np.array([bounds(float(r)).re_min for r in rs])
    mono = bool(np.all(np.diff(re_max) > 0) and np.all(np.diff(re_min) < 0))
    reports.append(_report("geometry:bounds_monotone", float(mono), 1.0, 0.0 if mono else 1.0, rs.size, 0.0))

    th = 2.0 * np.pi * np.arange(samples) / samples
    for j in (1, 2, 3):
        q = table1_generator(j)
        vals = np.asarray(q(unit_circle(th, 0.999)))
        margin = float(np.max(np.abs(np.asarray(sinh_c(vals - 1.0)))))
        inside = bool(np.all(contains(vals, -GEOMETRY_TOL)))
        reports.append(_report(f"geometry:table1_q{j}_subordinate", margin, 1.0,
                               0.0 if inside else margin - 1.0, samples, 0.0,
                               note="max |sinh(q - 1)| at r = 0.999"))
    return reports


SCOPES = ("all", "radii", "inclusions", "geometry")


def run_suite(scope: str = "all", samples: int = DEFAULT_SAMPLES, r_tol: float = 1e-6) -> List[VerificationReport]:
    if scope not in SCOPES:
        raise DomainError(f"unknown scope {scope!r}; expected one of {SCOPES}")
    out: List[VerificationReport] = []
    if scope in ("all", "radii"):
        out += radii_suite(r_tol)
    if scope in ("all", "inclusions"):
        out += inclusion_suite(samples)
    if scope in ("all", "geometry"):
        out += geometry_suite(samples)
    return out
