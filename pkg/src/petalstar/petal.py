"""Geometry of the petal domain ``rho(D) = {w : |sinh(w - 1)| < 1, |Im w| < pi/2}``.

Membership, boundary sampling, inscribed disks, bounds on the image of a
circle, symmetry residuals and the conics used by the inclusion relations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError
from .kernel import ASINH1, rho, sinh_c

DEFAULT_SAMPLES = 4096

# (4/pi) sqrt(asinh1 (1 - asinh1)): parameter of the tangency point from the origin
TANGENT_PARAM = 4.0 / math.pi * math.sqrt(ASINH1 * (1.0 - ASINH1))


@dataclass(frozen=True)
class DiskSpec:
    center: float
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise DomainError(f"disk radius must be non-negative, got {self.radius}")

    def sample(self, samples: int = DEFAULT_SAMPLES, scale: float = 1.0) -> np.ndarray:
        th = 2.0 * np.pi * np.arange(samples) / samples
        return self.center + scale * self.radius * np.exp(1j * th)


@dataclass(frozen=True)
class ConicSpec:
    """A conic in the w-plane.

    parabola: ``Y**2 = 4 a (X - b)`` with ``focus = a`` and ``vertex = b``.
    ellipse: centre ``(x0, 0)`` with semi-axes ``a`` (horizontal) and ``b``.
    sector: ``|arg w| <= half_angle``.
    half_plane: ``Re w > threshold`` (orientation ``"right"``) or ``< threshold``.
    """

    kind: str
    focus: Optional[float] = None
    vertex: Optional[float] = None
    x0: Optional[float] = None
    a: Optional[float] = None
    b: Optional[float] = None
    half_angle: Optional[float] = None
    threshold: Optional[float] = None
    orientation: Optional[str] = None

    def __post_init__(self):
        k = self.kind
        if k == "parabola":
            if not self.focus or self.focus <= 0:
                raise DomainError("parabola needs a positive focus parameter")
        elif k == "ellipse":
            if not (self.a and self.b and self.a > 0 and self.b > 0):
                raise DomainError("ellipse needs positive semi-axes")
        elif k == "sector":
            if not (self.half_angle and 0 < self.half_angle <= math.pi / 2):
                raise DomainError("sector half-angle must lie in (0, pi/2]")
        elif k == "half_plane":
            if self.orientation not in ("left", "right"):
                raise DomainError("half-plane orientation must be 'left' or 'right'")
        else:
            raise DomainError(f"unknown conic kind {k!r}")

    def sample(self, samples: int = DEFAULT_SAMPLES, extent: float = 2.0):
        """Return ``(param, points)`` along the curve."""
        if self.kind == "parabola":
            y = np.linspace(-extent, extent, samples)
            return y, self.vertex + y**2 / (4.0 * self.focus) + 1j * y
        if self.kind == "ellipse":
            th = 2.0 * np.pi * np.arange(samples) / samples
            return th, self.x0 + self.a * np.cos(th) + 1j * self.b * np.sin(th)
        if self.kind == "sector":
            # upper ray outward, then lower ray inward, meeting at the origin
            half = samples // 2
            s = np.linspace(extent, 0.0, half)
            upper = s * np.exp(1j * self.half_angle)
            s2 = np.linspace(0.0, extent, samples - half)
            lower = s2 * np.exp(-1j * self.half_angle)
            return np.concatenate([-s, s2]), np.concatenate([upper, lower])
        y = np.linspace(-extent, extent, samples)
        return y, self.threshold + 1j * y


def contains(w, tol: float = 0.0):
    """Strict membership of ``w`` in the petal at tolerance ``tol``.

    True iff ``|sinh(w - 1)| < 1 - tol`` and ``|Im w| < pi/2 - tol``. The strip
    condition selects the principal petal: ``|sinh(w - 1)| < 1`` alone also
    holds on the translates ``w + i k pi``. Negative ``tol`` widens the set.
    """
    warr = np.asarray(w, dtype=complex)
    inside = (np.abs(np.asarray(sinh_c(warr - 1.0))) < 1.0 - tol) & (
        np.abs(warr.imag) < math.pi / 2 - tol
    )
    if np.ndim(w) == 0:
        return bool(inside)
    return inside


def unit_circle(theta, r: float = 1.0):
    """``r e^{i theta}`` with cos/sin snapped to zero at multiples of pi/2.

    ``rho`` has branch points at ``+-i``, where an error of one ulp in
    ``cos(pi/2)`` would move the image by about 1e-8.
    """
    th = np.asarray(theta, dtype=float)
    c, s = np.cos(th), np.sin(th)
    c = np.where(np.abs(c) < 1e-15, 0.0, c)
    s = np.where(np.abs(s) < 1e-15, 0.0, s)
    z = r * (c + 1j * s)
    return complex(z) if np.ndim(theta) == 0 else z


def boundary_point(theta):
    """Point ``rho(e^{i theta})`` of the petal boundary."""
    return rho(unit_circle(theta))


def boundary(samples: int = DEFAULT_SAMPLES, r: float = 1.0):
    """Uniform samples of ``rho(r e^{i theta})`` for ``theta in [0, 2 pi)``."""
    th = 2.0 * np.pi * np.arange(samples) / samples
    return th, rho(unit_circle(th, r))


def _check_unit(r: float):
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"radius must lie in [0, 1], got {r}")


def inscribed_disk_radius(r: float) -> float:
    """Radius of the largest disk about 1 inside ``rho(|z| <= r)``."""
    _check_unit(r)
    return math.asinh(r)


def disk_in_petal(a: float) -> DiskSpec:
    """Largest disk about the real point ``a`` certified inside the petal."""
    lo, hi = 1.0 - ASINH1, 1.0 + ASINH1
    if not lo < a < hi:
        raise DomainError(f"disk centre must lie in ({lo:.6f}, {hi:.6f}), got {a}")
    return DiskSpec(a, a - lo if a <= 1.0 else hi - a)


def golden_max(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12):
    """Golden-section maximisation of a unimodal scalar function on ``[lo, hi]``."""
    g = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
        else:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
    x = max((lo, hi, 0.5 * (a + b)), key=f)
    return x, f(x)


@dataclass(frozen=True)
class PetalBounds:
    re_min: float
    re_max: float
    im_max: float
    mod_min: float
    mod_max: float
    arg_max: float


def _im_rho(r: float) -> Callable[[float], float]:
    return lambda th: rho(unit_circle(th, r)).imag


def bounds(r: float, samples: int = 256) -> PetalBounds:
    """Real, imaginary, modulus and argument bounds of ``rho`` on ``|z| <= r``.

    ``im_max`` is found by golden-section search over ``theta in [0, pi/2]``
    when ``Im rho(r e^{i theta})`` is increasing on a coarse grid, and by a
    dense scan otherwise.
    """
    _check_unit(r)
    lo = 1.0 - math.asinh(r)
    hi = 1.0 + math.asinh(r)
    if r == 1.0:
        im_max = math.pi / 2
    elif r == 0.0:
        im_max = 0.0
    else:
        f = _im_rho(r)
        grid = np.linspace(0.0, math.pi / 2, samples)
        vals = np.asarray(rho(unit_circle(grid, r))).imag
        if np.all(np.diff(vals) > 0):
            im_max = golden_max(f, 0.0, math.pi / 2)[1]
        else:
            dense = np.linspace(0.0, math.pi / 2, 64 * samples)
            im_max = float(np.max(np.asarray(rho(r * np.exp(1j * dense))).imag))
    return PetalBounds(
        re_min=lo,
        re_max=hi,
        im_max=im_max,
        mod_min=lo,
        mod_max=hi,
        arg_max=math.atan(1.0 / TANGENT_PARAM),
    )


@dataclass(frozen=True)
class SymmetryResiduals:
    conj_residual: float
    vertical_residual: float


def symmetry_residuals(samples: int = 128, r: float = 1.0 - 1e-6) -> SymmetryResiduals:
    """Residuals of the two mirror symmetries of the petal on ``theta in [0, pi/2]``.

    ``conj_residual`` measures ``rho(conj z) = conj rho(z)``; ``vertical_residual``
    measures reflection through ``Re w = 1`` between ``theta`` and ``pi - theta``.
    """
    if samples < 2:
        raise DomainError("need at least two samples")
    th = np.linspace(0.0, math.pi / 2, samples)
    z = r * np.exp(1j * th)
    w = rho(z)
    conj = float(np.max(np.abs(rho(np.conj(z)) - np.conj(w))))
    w_mirror = rho(r * np.exp(1j * (math.pi - th)))
    vert = max(
        float(np.max(np.abs(w.real + w_mirror.real - 2.0))),
        float(np.max(np.abs(w.imag - w_mirror.imag))),
    )
    return SymmetryResiduals(conj, vert)


@dataclass(frozen=True)
class InclusionGeometry:
    alpha_max: float
    beta_min: float
    k_min: float
    gamma_min: float
    t: float
    parabola: ConicSpec
    sector: ConicSpec

    @staticmethod
    def ellipse_at(k: float) -> ConicSpec:
        """Boundary ellipse of ``{Re w > k |w - 1|}`` for ``k > 1``."""
        if k <= 1.0:
            raise DomainError(f"the conic is an ellipse only for k > 1, got {k}")
        d = k * k - 1.0
        return ConicSpec("ellipse", x0=k * k / d, a=k / d, b=1.0 / math.sqrt(d))


def inclusion_geometry() -> InclusionGeometry:
    t = TANGENT_PARAM
    half_angle = math.atan(1.0 / t)
    return InclusionGeometry(
        alpha_max=1.0 - ASINH1,
        beta_min=1.0 + ASINH1,
        k_min=1.0 + 1.0 / ASINH1,
        gamma_min=2.0 / math.pi * half_angle,
        t=t,
        parabola=ConicSpec("parabola", focus=math.pi**2 / (16.0 * ASINH1), vertex=1.0 - ASINH1),
        sector=ConicSpec("sector", half_angle=half_angle),
    )
